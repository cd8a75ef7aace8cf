#include "corelattice/qt_catalan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "corelattice/perm_stats.hpp"
#include "corelattice/qpoly.hpp"

namespace corelattice {

std::int64_t length_from_x(const ShiftedPoint& sp) {
  const auto& xs = sp.scaled();
  const std::int64_t top = *std::max_element(xs.begin(), xs.end());
  // a max x = top / 2
  return (top - (sp.a() - 1)) / 2;
}

namespace {

std::int64_t floor0(std::int64_t num, std::int64_t den) { return std::max<std::int64_t>(0, floor_div(num, den)); }

std::int64_t skew_from_scaled(std::span<const std::int64_t> xs, std::int64_t a, std::int64_t b) {
  const std::int64_t scale = 2 * a;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      const std::int64_t d = xs[i] - xs[j];
      total += floor0(d, scale) - floor0(d - 2 * b, scale);
    }
  }
  return total;
}

std::int64_t max_statistic(const SimplexSpec& spec) {
  return static_cast<std::int64_t>(spec.a() - 1) * (spec.b() - 1) / 2;
}

}  // namespace

std::int64_t skew_length_from_x(const SimplexSpec& spec, const ShiftedPoint& sp) {
  if (sp.a() != spec.a()) throw ValidationError("shifted point has the wrong dimension");
  return skew_from_scaled(sp.scaled(), spec.a(), spec.b());
}

std::int64_t skew_length_from_coordinates(int a, int b, std::span<const std::int64_t> scaled) {
  if (scaled.size() != static_cast<std::size_t>(a)) throw ValidationError("point length must equal a");
  return skew_from_scaled(scaled, a, b);
}

std::int64_t co_skew_length_from_x(const SimplexSpec& spec, const ShiftedPoint& sp) {
  return max_statistic(spec) - skew_length_from_x(spec, sp);
}

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> statistics(const SimplexSpec& spec,
                                                              const std::vector<ChargeVector>& cores, bool parallel) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out(cores.size());
  const auto n = static_cast<std::int64_t>(cores.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    const ShiftedPoint sp = shift(cores[static_cast<std::size_t>(i)]);
    out[static_cast<std::size_t>(i)] = {length_from_x(sp), skew_length_from_x(spec, sp)};
  }
  return out;
}

LaurentPoly2 accumulate_qt(const SimplexSpec& spec, const std::vector<std::pair<std::int64_t, std::int64_t>>& stats) {
  std::map<Exp2, std::int64_t> counts;
  for (const auto& [len, skew] : stats) ++counts[Exp2{len, max_statistic(spec) - skew}];
  LaurentPoly2 out;
  for (const auto& [e, c] : counts) out.add_term(e, c);
  return out;
}

}  // namespace

LaurentPoly2 cat_qt(const SimplexSpec& spec, const EnumerationOptions& options) {
  return accumulate_qt(spec, statistics(spec, enumerate_cores(spec, options), options.parallel));
}

LaurentPoly2 cat_qt_serial(const SimplexSpec& spec, std::uint64_t cap) {
  LaurentPoly2 out;
  for (const auto& cv : enumerate_cores_serial(spec, cap)) {
    const ShiftedPoint sp = shift(cv);
    out += qt_power(length_from_x(sp), co_skew_length_from_x(spec, sp));
  }
  return out;
}

LaurentPoly1 length_skew_generating(const SimplexSpec& spec, const EnumerationOptions& options) {
  LaurentPoly1 out;
  for (const auto& [len, skew] : statistics(spec, enumerate_cores(spec, options), options.parallel)) {
    out.add_term(len + skew, 1);
  }
  return out;
}

bool check_symmetry(const SimplexSpec& spec, const EnumerationOptions& options) {
  const LaurentPoly2 p = cat_qt(spec, options);
  return p == swap_variables(p);
}

bool check_specialization(const SimplexSpec& spec, const EnumerationOptions& options) {
  return length_skew_generating(spec, options) == cat_q(spec.a(), spec.b());
}

namespace {

// 1 - q^qe t^te
LaurentPoly2 one_minus(std::int64_t qe, std::int64_t te) { return LaurentPoly2(1) - qt_power(qe, te); }

}  // namespace

LaurentPoly2 qt3_denominator() {
  return one_minus(1, -1) * one_minus(1, -2) * one_minus(-1, 2) * one_minus(2, -1) * one_minus(-1, 1) *
         one_minus(-2, 1);
}

LaurentPoly2 qt3_numerator(int b) {
  if (b < 1 || !coprime(3, b)) throw ValidationError("b must be a positive integer coprime to 3");
  const std::int64_t k = (b - 1) / 3;
  const std::int64_t delta = (b - 1) % 3;
  const LaurentPoly2 d1 = one_minus(1, -1) * one_minus(1, -2);
  const LaurentPoly2 d2 = one_minus(-1, 2) * one_minus(2, -1);
  const LaurentPoly2 d3 = one_minus(-1, 1) * one_minus(-2, 1);
  const LaurentPoly2 first = qt_power(0, 3 * k + delta);
  const LaurentPoly2 second = qt_power(k, k) * (qt_power(1, 0) + qt_power(0, 1) + qt_power(delta, delta));
  const LaurentPoly2 third = qt_power(3 * k + delta, 0);
  return first * d2 * d3 + second * d1 * d3 + third * d1 * d2;
}

bool check_qt3_identity(int b) {
  const LaurentPoly2 lhs = cat_qt(SimplexSpec(3, b)) * qt3_denominator();
  return lhs == qt3_numerator(b);
}

std::vector<OrbifoldCosetLabel> orbifold_minimal_vectors(int a) {
  if (a < 2) throw ValidationError("orbifold labels need a >= 2");
  std::vector<OrbifoldCosetLabel> out;
  for (const auto& perm : all_permutations(a - 1)) {
    // sigma_0 = 0, sigma_a = a, W_0 = 0; coordinates are W_1..W_a with W_i = a w_i.
    std::vector<int> s{0};
    s.insert(s.end(), perm.one_line().begin(), perm.one_line().end());
    s.push_back(a);
    std::vector<std::int64_t> w(static_cast<std::size_t>(a) + 1, 0);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const std::int64_t descent = s[i] > s[i + 1] ? 1 : 0;
      w[i + 1] = w[i] + (s[i + 1] - s[i]) + static_cast<std::int64_t>(a) * descent;
    }
    w.erase(w.begin());
    std::int64_t sum = 0;
    for (auto v : w) sum += v;
    // X_i = 2a x_i = 2 W_i - 2 sum W / a
    if ((2 * sum) % a != 0) throw std::logic_error("orbifold vector is off the shifted lattice");
    OrbifoldCosetLabel label;
    label.sigma = perm.one_line();
    for (auto v : w) label.dominant.push_back(2 * v - 2 * sum / a);
    label.point = canonicalize(a, label.dominant);
    label.maj = maj(perm);
    label.siz = siz(perm);
    out.push_back(std::move(label));
  }
  return out;
}

bool check_sizmaj1(int a) {
  const auto labels = orbifold_minimal_vectors(a);
  const std::int64_t scale = 2 * static_cast<std::int64_t>(a);
  for (const auto& label : labels) {
    const auto& x = label.dominant;
    std::int64_t origin_skew = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = i + 1; j < x.size(); ++j) origin_skew += floor_div(x[j] - x[i], scale);
    }
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      if (x[i] >= x[i + 1] || x[i + 1] - x[i] >= scale) return false;
    }
    const std::int64_t origin_length = (x.back() - (a - 1)) / 2;
    if (origin_length != label.maj || origin_skew != label.siz) return false;

    // b large and coprime, so that the point is a core and sl sees no upper walls.
    int b = a * a + 1;
    while (!coprime(a, b) || !contains(SimplexSpec(a, b), label.point)) ++b;
    const SimplexSpec spec(a, b);
    if (length_from_x(label.point) != label.maj || skew_length_from_x(spec, label.point) != label.siz) return false;

    const Partition p = core_from_charges(unshift(label.point));
    if (p.length() != label.maj || skew_length(p, a, b).skew != label.siz) return false;
  }
  std::size_t factorial = 1;
  for (int k = 2; k < a; ++k) factorial *= static_cast<std::size_t>(k);
  return labels.size() == factorial;
}

std::vector<DeltaEntry> delta_table(int a, int b) {
  const SimplexSpec spec(a, b);
  const std::int64_t A = a;
  std::vector<std::int64_t> s(static_cast<std::size_t>(a));
  for (std::int64_t j = 0; j < A; ++j) s[static_cast<std::size_t>(j)] = 2 * j - A + 1;

  auto stats = [&](const std::vector<std::int64_t>& xs, bool& inside) {
    try {
      const ShiftedPoint sp = canonicalize(a, xs);
      inside = contains(spec, sp);
      return std::pair{length_from_x(sp), skew_length_from_x(spec, sp)};
    } catch (const ValidationError&) {
      inside = false;
      return std::pair<std::int64_t, std::int64_t>{0, 0};
    }
  };

  std::vector<DeltaEntry> out;
  for (const bool at_origin : {true, false}) {
    std::vector<std::int64_t> base = s;
    if (!at_origin) {
      for (auto& v : base) v *= b;
    }
    bool base_inside = false;
    const auto [l0, s0] = stats(base, base_inside);
    for (int i = 1; i < a; ++i) {
      // 2a v_i = (2i - 2a repeated i times, 2i repeated a - i times)
      std::vector<std::int64_t> moved = base;
      for (std::int64_t j = 0; j < A; ++j) {
        const std::int64_t v = j < i ? 2 * i - 2 * A : 2 * i;
        moved[static_cast<std::size_t>(j)] += at_origin ? v : -v;
      }
      bool inside = false;
      const auto [l1, s1] = stats(moved, inside);
      DeltaEntry e;
      e.i = i;
      e.chamber = at_origin ? "origin" : "infinity";
      e.in_simplex = base_inside && inside;
      e.delta_length = l1 - l0;
      e.delta_skew = s1 - s0;
      e.delta_co_skew = s0 - s1;
      e.expected_length = at_origin ? i : -i;
      e.expected_co_skew = at_origin ? -static_cast<std::int64_t>(i) * (a - i) : 1;
      out.push_back(std::move(e));
    }
  }
  return out;
}

bool delta_table_check(int a, int b) {
  for (const auto& e : delta_table(a, b)) {
    if (!e.in_simplex || e.delta_length != e.expected_length || e.delta_co_skew != e.expected_co_skew) return false;
  }
  return true;
}

}  // namespace corelattice
