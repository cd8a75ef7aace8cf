#pragma once

#include <cstdint>
#include <vector>

#include "corelattice/abacus.hpp"
#include "corelattice/common.hpp"

namespace corelattice {

/// A coprime pair (a, b); the (a,b)-cores are the lattice points of the
/// simplex SC_a(b) inside the charge lattice of a-cores.
class SimplexSpec {
 public:
  /// Throws ValidationError unless a >= 1, b >= 1 and gcd(a,b) = 1.
  SimplexSpec(int a, int b);
  int a() const { return a_; }
  int b() const { return b_; }
  bool operator==(const SimplexSpec&) const = default;

 private:
  int a_;
  int b_;
};

/// Multiplicities z_0..z_{a-1} of a b-dimensional Z_a representation.
/// Trivial determinant means sum i z_i = 0 (mod a).
struct RepVector {
  std::vector<std::int64_t> z;
  auto operator<=>(const RepVector&) const = default;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct EnumerationOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  bool parallel = true;
};

/// Offset k with 2k = -(b+1) (mod a), chosen as (a-1)(b+1)/2 mod a.
std::int64_t z_offset(const SimplexSpec& spec);

/// c_{i+b} - c_i <= floor((b+i)/a) for every i, cyclic indices.
bool contains(const SimplexSpec& spec, const ChargeVector& cv);
/// Same test in shifted coordinates: x_{i+b} - x_i <= b/a.
bool contains(const SimplexSpec& spec, const ShiftedPoint& sp);

/// z_i = x_{ib+k} - x_{(i+1)b+k} + b/a. Throws ValidationError off the simplex.
RepVector to_z(const SimplexSpec& spec, const ShiftedPoint& sp);
/// Inverse of to_z. Throws ValidationError on a malformed RepVector.
ShiftedPoint from_z(const SimplexSpec& spec, const RepVector& rv);

bool has_trivial_determinant(const RepVector& rv);

/// Nonnegative compositions of b into a parts with trivial determinant,
/// lexicographic order.
std::vector<RepVector> trivial_determinant_points(const SimplexSpec& spec);

/// All (a,b)-cores as charge vectors, ordered lexicographically by z.
/// Throws ResourceError if Cat_{a,b} exceeds options.cap.
std::vector<ChargeVector> enumerate_cores(const SimplexSpec& spec, const EnumerationOptions& options = {});

/// Single-threaded reference for enumerate_cores.
std::vector<ChargeVector> enumerate_cores_serial(const SimplexSpec& spec,
                                                 std::uint64_t cap = kDefaultEnumerationCap);

/// T(c)_i = -c_{-1-i}; realizes conjugation of the core partition.
ChargeVector conjugation_T(const ChargeVector& cv);

/// z_i -> z_{-i}; the dual representation.
RepVector dual(const RepVector& rv);

std::vector<ChargeVector> enumerate_self_conjugate(const SimplexSpec& spec,
                                                   const EnumerationOptions& options = {});

struct SizeTotals {
  BigInt count = 0;
  BigInt total = 0;
  Rational average() const { return count == 0 ? Rational(0) : Rational(total, count); }
};

SizeTotals size_totals(const std::vector<ChargeVector>& cores);
SizeTotals total_size(const SimplexSpec& spec, const EnumerationOptions& options = {});
SizeTotals self_conjugate_total_size(const SimplexSpec& spec, const EnumerationOptions& options = {});

/// Cyclic rotation of compositions of b into a parts has only free orbits,
/// and each orbit contains exactly one trivial-determinant point.
bool check_rotation_equidistribution(int a, int b);

}  // namespace corelattice
