#include "corelattice/core_simplex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace corelattice {

SimplexSpec::SimplexSpec(int a, int b) : a_(a), b_(b) {
  if (a < 1 || b < 1) throw ValidationError("a and b must be positive");
  if (!coprime(a, b)) throw ValidationError("a and b must be coprime");
}

std::int64_t z_offset(const SimplexSpec& spec) {
  const std::int64_t a = spec.a();
  const std::int64_t b = spec.b();
  return mod((a - 1) * (b + 1) / 2, a);
}

bool contains(const SimplexSpec& spec, const ChargeVector& cv) {
  const std::int64_t a = spec.a();
  if (cv.a() != a) throw ValidationError("charge vector has the wrong number of runners");
  for (std::int64_t i = 0; i < a; ++i) {
    if (cv[i + spec.b()] - cv[i] > floor_div(spec.b() + i, a)) return false;
  }
  return true;
}

bool contains(const SimplexSpec& spec, const ShiftedPoint& sp) {
  if (sp.a() != spec.a()) throw ValidationError("shifted point has the wrong dimension");
  // x_{i+b} - x_i <= b/a  <=>  X_{i+b} - X_i <= 2b
  for (std::int64_t i = 0; i < spec.a(); ++i) {
    if (sp[i + spec.b()] - sp[i] > 2 * static_cast<std::int64_t>(spec.b())) return false;
  }
  return true;
}

RepVector to_z(const SimplexSpec& spec, const ShiftedPoint& sp) {
  const std::int64_t a = spec.a();
  const std::int64_t b = spec.b();
  const std::int64_t k = z_offset(spec);
  if (sp.a() != a) throw ValidationError("shifted point has the wrong dimension");
  RepVector rv;
  rv.z.resize(static_cast<std::size_t>(a));
  for (std::int64_t i = 0; i < a; ++i) {
    const std::int64_t num = sp[i * b + k] - sp[(i + 1) * b + k] + 2 * b;
    if (num < 0) throw ValidationError("point lies outside the simplex of cores");
    if (num % (2 * a) != 0) throw ValidationError("z coordinate is not integral");
    rv.z[static_cast<std::size_t>(i)] = num / (2 * a);
  }
  return rv;
}

ShiftedPoint from_z(const SimplexSpec& spec, const RepVector& rv) {
  const std::int64_t a = spec.a();
  const std::int64_t b = spec.b();
  const std::int64_t k = z_offset(spec);
  if (rv.z.size() != static_cast<std::size_t>(a)) throw ValidationError("z has the wrong length");
  std::int64_t sum = 0;
  for (auto v : rv.z) {
    if (v < 0) throw ValidationError("z entries must be nonnegative");
    sum += v;
  }
  if (sum != b) throw ValidationError("z entries must sum to b");

  // X_{(i+1)b+k} = X_{ib+k} + 2b - 2a z_i; offsets relative to X_k.
  std::vector<std::int64_t> offset(static_cast<std::size_t>(a), 0);
  std::int64_t running = 0;
  std::int64_t total = 0;
  for (std::int64_t i = 0; i + 1 < a; ++i) {
    running += 2 * b - 2 * a * rv.z[static_cast<std::size_t>(i)];
    offset[static_cast<std::size_t>(mod((i + 1) * b + k, a))] = running;
    total += running;
  }
  // sum X = a X_k + total = 0
  if (total % a != 0) throw ValidationError("z does not have trivial determinant");
  const std::int64_t base = -total / a;
  std::vector<std::int64_t> scaled(static_cast<std::size_t>(a));
  for (std::int64_t j = 0; j < a; ++j) scaled[static_cast<std::size_t>(j)] = base + offset[static_cast<std::size_t>(j)];
  return ShiftedPoint(static_cast<int>(a), std::move(scaled));
}

bool has_trivial_determinant(const RepVector& rv) {
  const auto a = static_cast<std::int64_t>(rv.z.size());
  std::int64_t weighted = 0;
  for (std::int64_t i = 0; i < a; ++i) weighted += i * rv.z[static_cast<std::size_t>(i)];
  return mod(weighted, a) == 0;
}

namespace {

// Lexicographic compositions of `remaining` into z[pos..a-1]; `weighted`
// tracks sum i z_i mod a so far.
void compositions_with_filter(std::vector<std::int64_t>& z, std::size_t pos, std::int64_t remaining,
                              std::int64_t weighted, const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  const auto a = static_cast<std::int64_t>(z.size());
  if (pos + 1 == z.size()) {
    z[pos] = remaining;
    if (mod(weighted + static_cast<std::int64_t>(pos) * remaining, a) == 0) visit(z);
    return;
  }
  for (std::int64_t v = 0; v <= remaining; ++v) {
    z[pos] = v;
    compositions_with_filter(z, pos + 1, remaining - v, mod(weighted + static_cast<std::int64_t>(pos) * v, a), visit);
  }
}

void check_cap(const SimplexSpec& spec, std::uint64_t cap) {
  if (rational_catalan(spec.a(), spec.b()) > cap) {
    throw ResourceError("number of (a,b)-cores exceeds the enumeration cap");
  }
}

// Cores whose first z coordinate equals z0, in lexicographic order.
std::vector<ChargeVector> cores_with_leading(const SimplexSpec& spec, std::int64_t z0) {
  std::vector<ChargeVector> out;
  std::vector<std::int64_t> z(static_cast<std::size_t>(spec.a()), 0);
  const auto visit = [&](const std::vector<std::int64_t>& comp) {
    out.push_back(unshift(from_z(spec, RepVector{comp})));
  };
  if (spec.a() == 1) {
    z[0] = spec.b();
    if (z0 == spec.b()) visit(z);
    return out;
  }
  z[0] = z0;
  compositions_with_filter(z, 1, spec.b() - z0, 0, visit);
  return out;
}

}  // namespace

std::vector<RepVector> trivial_determinant_points(const SimplexSpec& spec) {
  std::vector<RepVector> out;
  std::vector<std::int64_t> z(static_cast<std::size_t>(spec.a()), 0);
  compositions_with_filter(z, 0, spec.b(), 0, [&](const std::vector<std::int64_t>& comp) { out.push_back(RepVector{comp}); });
  return out;
}

std::vector<ChargeVector> enumerate_cores_serial(const SimplexSpec& spec, std::uint64_t cap) {
  check_cap(spec, cap);
  std::vector<ChargeVector> out;
  for (const auto& rv : trivial_determinant_points(spec)) out.push_back(unshift(from_z(spec, rv)));
  return out;
}

std::vector<ChargeVector> enumerate_cores(const SimplexSpec& spec, const EnumerationOptions& options) {
  if (!options.parallel) return enumerate_cores_serial(spec, options.cap);
  check_cap(spec, options.cap);
  const std::int64_t b = spec.b();
  std::vector<std::vector<ChargeVector>> buckets(static_cast<std::size_t>(b + 1));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t z0 = 0; z0 <= b; ++z0) {
    buckets[static_cast<std::size_t>(z0)] = cores_with_leading(spec, z0);
  }
  std::vector<ChargeVector> out;
  for (auto& bucket : buckets) {
    out.insert(out.end(), std::make_move_iterator(bucket.begin()), std::make_move_iterator(bucket.end()));
  }
  return out;
}

ChargeVector conjugation_T(const ChargeVector& cv) {
  const std::int64_t a = cv.a();
  std::vector<std::int64_t> c(static_cast<std::size_t>(a));
  for (std::int64_t i = 0; i < a; ++i) c[static_cast<std::size_t>(i)] = -cv[-1 - i];
  return ChargeVector(static_cast<int>(a), std::move(c));
}

RepVector dual(const RepVector& rv) {
  const auto a = static_cast<std::int64_t>(rv.z.size());
  RepVector out;
  out.z.resize(rv.z.size());
  for (std::int64_t i = 0; i < a; ++i) out.z[static_cast<std::size_t>(i)] = rv.z[static_cast<std::size_t>(mod(-i, a))];
  return out;
}

std::vector<ChargeVector> enumerate_self_conjugate(const SimplexSpec& spec, const EnumerationOptions& options) {
  std::vector<ChargeVector> out;
  for (auto& cv : enumerate_cores(spec, options)) {
    if (conjugation_T(cv) == cv) out.push_back(std::move(cv));
  }
  return out;
}

SizeTotals size_totals(const std::vector<ChargeVector>& cores) {
  SizeTotals t;
  t.count = cores.size();
  for (const auto& cv : cores) t.total += size_quadratic(cv);
  return t;
}

SizeTotals total_size(const SimplexSpec& spec, const EnumerationOptions& options) {
  return size_totals(enumerate_cores(spec, options));
}

SizeTotals self_conjugate_total_size(const SimplexSpec& spec, const EnumerationOptions& options) {
  return size_totals(enumerate_self_conjugate(spec, options));
}

bool check_rotation_equidistribution(int a, int b) {
  if (a < 1 || b < 1 || !coprime(a, b)) throw ValidationError("rotation check requires coprime a, b");
  std::vector<std::vector<std::int64_t>> all;
  std::function<void(std::vector<std::int64_t>&, std::size_t, std::int64_t)> rec =
      [&](std::vector<std::int64_t>& z, std::size_t pos, std::int64_t remaining) {
        if (pos + 1 == z.size()) {
          z[pos] = remaining;
          all.push_back(z);
          return;
        }
        for (std::int64_t v = 0; v <= remaining; ++v) {
          z[pos] = v;
          rec(z, pos + 1, remaining - v);
        }
      };
  std::vector<std::int64_t> z(static_cast<std::size_t>(a), 0);
  rec(z, 0, b);
  if (all.size() != binomial(a + b - 1, a - 1)) return false;

  std::set<std::vector<std::int64_t>> visited;
  for (const auto& start : all) {
    if (visited.contains(start)) continue;
    std::vector<std::vector<std::int64_t>> orbit{start};
    std::vector<std::int64_t> cur = start;
    for (int r = 1; r < a; ++r) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur == start) return false;  // nontrivial stabilizer
      orbit.push_back(cur);
    }
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur != start) return false;
    int trivial = 0;
    for (const auto& member : orbit) {
      visited.insert(member);
      if (has_trivial_determinant(RepVector{member})) ++trivial;
    }
    if (trivial != 1) return false;
  }
  return true;
}

}  // namespace corelattice
