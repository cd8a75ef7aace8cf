#include "corelattice/ehrhart.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace corelattice {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly RationalPoly::compose_affine(const Rational& alpha, const Rational& beta) const {
  const RationalPoly inner({beta, alpha});
  RationalPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

RationalPoly operator+(const RationalPoly& l, const RationalPoly& r) {
  std::vector<Rational> c(std::max(l.c_.size(), r.c_.size()), Rational(0));
  for (std::size_t i = 0; i < l.c_.size(); ++i) c[i] += l.c_[i];
  for (std::size_t i = 0; i < r.c_.size(); ++i) c[i] += r.c_[i];
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& p) {
  std::vector<Rational> c = p.c_;
  for (auto& v : c) v = -v;
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& l, const RationalPoly& r) { return l + (-r); }

RationalPoly operator*(const RationalPoly& l, const RationalPoly& r) {
  if (l.is_zero() || r.is_zero()) return {};
  std::vector<Rational> c(l.c_.size() + r.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < l.c_.size(); ++i) {
    for (std::size_t j = 0; j < r.c_.size(); ++j) c[i + j] += l.c_[i] * r.c_[j];
  }
  return RationalPoly(std::move(c));
}

std::pair<RationalPoly, RationalPoly> divide(const RationalPoly& p, const RationalPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<Rational> rem = p.coefficients();
  const auto& dc = d.coefficients();
  const int dd = d.degree();
  std::vector<Rational> quot(rem.size() >= dc.size() ? rem.size() - dc.size() + 1 : 0, Rational(0));
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / dc.back();
    quot[static_cast<std::size_t>(k - dd)] = factor;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= factor * dc[static_cast<std::size_t>(j)];
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

std::string to_string(const RationalPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rational v = c[i];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    if (v < 0) v = -v;
    if (i == 0 || v != 1) {
      if (denominator(v) != 1 && i >= 1) os << "(" << to_string(v) << ")";
      else os << to_string(v);
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

Rational Quasipolynomial::operator()(std::int64_t t) const {
  return constituents[static_cast<std::size_t>(mod(t, period))](Rational(t));
}

int Quasipolynomial::degree() const {
  int d = -1;
  for (const auto& c : constituents) d = std::max(d, c.degree());
  return d;
}

RationalPoly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points) {
  RationalPoly out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RationalPoly basis = RationalPoly::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      if (points[i].first == points[j].first) throw ValidationError("interpolation nodes must be distinct");
      basis = basis * RationalPoly({-points[j].first, Rational(1)});
      denom *= points[i].first - points[j].first;
    }
    out = out + basis * RationalPoly::constant(points[i].second / denom);
  }
  return out;
}

Quasipolynomial fit_quasipolynomial(const SampleSeries& samples, std::int64_t period, int degree) {
  if (period < 1) throw ValidationError("period must be positive");
  if (degree < 0) throw ValidationError("degree must be nonnegative");
  std::vector<std::vector<std::pair<Rational, Rational>>> classes(static_cast<std::size_t>(period));
  for (const auto& [t, v] : samples) classes[static_cast<std::size_t>(mod(t, period))].emplace_back(Rational(t), v);

  Quasipolynomial q;
  q.period = period;
  for (std::size_t r = 0; r < classes.size(); ++r) {
    const auto& pts = classes[r];
    const auto need = static_cast<std::size_t>(degree) + 2;
    if (pts.size() < need) {
      throw ValidationError("residue class " + std::to_string(r) + " has " + std::to_string(pts.size()) +
                            " samples; need " + std::to_string(need));
    }
    const std::span<const std::pair<Rational, Rational>> head(pts.data(), static_cast<std::size_t>(degree) + 1);
    RationalPoly poly = lagrange_interpolate(head);
    for (std::size_t i = head.size(); i < pts.size(); ++i) {
      if (poly(pts[i].first) != pts[i].second) {
        throw ValidationError("held-out sample at t = " + to_string(pts[i].first) +
                              " disagrees with the degree " + std::to_string(degree) + " fit");
      }
    }
    q.constituents.push_back(std::move(poly));
  }
  return q;
}

RationalPoly fit_polynomial(const SampleSeries& samples, int degree) {
  return fit_quasipolynomial(samples, 1, degree).constituents.front();
}

namespace {

std::vector<int> sample_b(int a, int residue, int terms, int b_min) {
  if (a < 1) throw ValidationError("a must be positive");
  if (!coprime(a, residue)) throw ValidationError("residue must be coprime to a");
  std::vector<int> bs;
  for (int b = std::max(b_min, 1); static_cast<int>(bs.size()) < terms; ++b) {
    if (mod(b - residue, a) == 0) bs.push_back(b);
  }
  return bs;
}

}  // namespace

SampleSeries core_count_series(int a, int residue, int terms, int b_min, const EnumerationOptions& options) {
  SampleSeries out;
  for (int b : sample_b(a, residue, terms, b_min)) {
    out[b] = Rational(BigInt(enumerate_cores(SimplexSpec(a, b), options).size()));
  }
  return out;
}

SampleSeries core_qsum_series(int a, int residue, int terms, int b_min, const EnumerationOptions& options) {
  SampleSeries out;
  for (int b : sample_b(a, residue, terms, b_min)) out[b] = Rational(total_size(SimplexSpec(a, b), options).total);
  return out;
}

bool RootStructureReport::passed() const {
  const int expected_sign = (a - 1) % 2 == 0 ? 1 : -1;
  return classes_agree && roots_ok && divisible && average_values_ok && armstrong_ok && symmetry_sign == expected_sign;
}

RootStructureReport root_structure(int a, const EnumerationOptions& options) {
  if (a < 2) throw ValidationError("root structure needs a >= 2");
  RootStructureReport rep;
  rep.a = a;
  // Two held-out samples per class on top of the degree a+1 fit.
  const int terms = a + 4;
  SampleSeries counts;
  SampleSeries totals;
  for (int r = 1; r < a; ++r) {
    if (!coprime(a, r)) continue;
    for (int b : sample_b(a, r, terms, 1)) {
      const SizeTotals st = total_size(SimplexSpec(a, b), options);
      counts[b] = Rational(st.count);
      totals[b] = Rational(st.total);
    }
  }
  try {
    rep.count = fit_polynomial(counts, a - 1);
    rep.total = fit_polynomial(totals, a + 1);
    rep.classes_agree = true;
  } catch (const ValidationError&) {
    return rep;
  }

  rep.roots_ok = true;
  for (int j = 1; j < a; ++j) {
    if (rep.count(Rational(-j)) != 0 || rep.total(Rational(-j)) != 0) rep.roots_ok = false;
  }

  auto [quot, rem] = divide(rep.total, rep.count);
  rep.divisible = rem.is_zero();
  rep.average = quot;
  const Rational ra(a);
  rep.average_values_ok = rep.average(Rational(1)) == 0 && rep.average(-ra - 1) == 0 &&
                          rep.average(Rational(0)) == Rational(-(a * a - 1), 24);
  // (a+b+1)(a-1)(b-1)/24 as a polynomial in b
  const RationalPoly armstrong = RationalPoly({ra + 1, Rational(1)}) * RationalPoly({Rational(-1), Rational(1)}) *
                                 RationalPoly::constant(Rational(a - 1, 24));
  rep.armstrong_ok = rep.divisible && rep.average == armstrong;

  const RationalPoly reflected = rep.total.compose_affine(Rational(-1), -ra);
  if (reflected == rep.total) rep.symmetry_sign = 1;
  else if (reflected == -rep.total) rep.symmetry_sign = -1;
  return rep;
}

bool check_root_structure(int a, const EnumerationOptions& options) { return root_structure(a, options).passed(); }

namespace {

// Gaussian elimination over the rationals; nullopt when singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

Rational dot(const std::vector<Rational>& c, std::span<const Rational> x) {
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * x[i];
  return s;
}

void validate(const RationalPolytope& p) {
  if (p.dim < 1) throw ValidationError("polytope dimension must be positive");
  for (const auto& ineq : p.inequalities) {
    if (ineq.coeffs.size() != static_cast<std::size_t>(p.dim)) throw ValidationError("inequality has the wrong length");
  }
}

}  // namespace

std::vector<std::vector<Rational>> vertices(const RationalPolytope& p) {
  validate(p);
  const auto n = static_cast<std::size_t>(p.dim);
  const std::size_t m = p.inequalities.size();
  std::vector<std::vector<Rational>> out;
  if (m < n) return out;
  // Walk all n-subsets of the inequalities via a selection mask.
  std::vector<bool> mask(m, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n), true);
  std::sort(mask.begin(), mask.end());
  do {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < m; ++i) {
      if (!mask[i]) continue;
      rows.push_back(p.inequalities[i].coeffs);
      rhs.push_back(p.inequalities[i].rhs);
    }
    auto x = solve(rows, rhs);
    if (!x) continue;
    const bool feasible = std::all_of(p.inequalities.begin(), p.inequalities.end(),
                                      [&](const LinearInequality& q) { return dot(q.coeffs, *x) <= q.rhs; });
    if (feasible && std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(std::move(*x));
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

namespace {

std::int64_t floor_rational(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return static_cast<std::int64_t>(q);
}

std::int64_t ceil_rational(const Rational& r) { return -floor_rational(-r); }

}  // namespace

Rational lattice_sum(const RationalPolytope& p, std::int64_t t, bool interior, const LatticeWeight& f, bool negate) {
  if (t < 0) throw ValidationError("dilation factor must be nonnegative");
  const auto verts = vertices(p);
  if (verts.empty()) throw ValidationError("polytope has no vertices");
  const auto n = static_cast<std::size_t>(p.dim);
  std::vector<std::int64_t> lo(n);
  std::vector<std::int64_t> hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = verts[0][i];
    Rational mx = verts[0][i];
    for (const auto& v : verts) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil_rational(mn * t);
    hi[i] = floor_rational(mx * t);
  }

  Rational total = 0;
  std::vector<std::int64_t> x(n);
  std::vector<Rational> xr(n);
  std::vector<std::int64_t> neg(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      for (const auto& q : p.inequalities) {
        const Rational lhs = dot(q.coeffs, xr);
        const Rational bound = q.rhs * t;
        if (interior ? lhs >= bound : lhs > bound) return;
      }
      if (!f) {
        total += 1;
        return;
      }
      if (negate) {
        for (std::size_t k = 0; k < n; ++k) neg[k] = -x[k];
        total += f(neg);
      } else {
        total += f(x);
      }
      return;
    }
    for (std::int64_t v = lo[i]; v <= hi[i]; ++v) {
      x[i] = v;
      xr[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

ReciprocityReport reciprocity_check(const RationalPolytope& p, std::int64_t t_max, std::int64_t period, int degree,
                                    const LatticeWeight& f) {
  validate(p);
  if (period < 1 || degree < 0) throw ValidationError("period and degree must be positive");
  if (t_max < 2 * (degree + 2) * period) throw ValidationError("t_max is too small for the requested fit");
  SampleSeries samples;
  for (std::int64_t t = 1; t <= t_max; ++t) samples[t] = lattice_sum(p, t, false, f);
  ReciprocityReport rep;
  rep.fit = fit_quasipolynomial(samples, period, degree);
  const Rational sign = p.dim % 2 == 0 ? 1 : -1;
  rep.passed = true;
  for (std::int64_t t = 1; t <= t_max / 2; ++t) {
    ReciprocityRow row;
    row.t = t;
    row.predicted = sign * rep.fit(-t);
    row.direct = lattice_sum(p, t, true, f, true);
    if (row.predicted != row.direct) rep.passed = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

RationalPolytope standard_simplex(int dim) {
  if (dim < 1) throw ValidationError("dimension must be positive");
  RationalPolytope p;
  p.dim = dim;
  for (int i = 0; i < dim; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(dim), Rational(0));
    c[static_cast<std::size_t>(i)] = -1;
    p.inequalities.push_back({c, Rational(0)});
  }
  p.inequalities.push_back({std::vector<Rational>(static_cast<std::size_t>(dim), Rational(1)), Rational(1)});
  return p;
}

std::vector<NamedPolytope> bundled_polytopes() {
  using R = Rational;
  std::vector<NamedPolytope> out;
  out.push_back({"segment", RationalPolytope{1, {{{R(-1)}, R(0)}, {{R(1)}, R(1)}}}, 1, 1});
  out.push_back({"triangle", RationalPolytope{2, {{{R(-1), R(0)}, R(0)}, {{R(0), R(-1)}, R(0)}, {{R(2), R(1)}, R(1)}}}, 2, 2});
  out.push_back({"simplex2", standard_simplex(2), 1, 2});
  out.push_back({"simplex3", standard_simplex(3), 1, 3});
  out.push_back({"square", RationalPolytope{2, {{{R(-1), R(0)}, R(0)}, {{R(1), R(0)}, R(1)}, {{R(0), R(-1)}, R(0)}, {{R(0), R(1)}, R(1)}}}, 1, 2});
  return out;
}

}  // namespace corelattice
