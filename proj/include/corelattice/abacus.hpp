#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "corelattice/common.hpp"
#include "corelattice/partition.hpp"

namespace corelattice {

/// Runner charges of a right-justified a-abacus: an integer a-tuple summing
/// to zero. Runner i holds the energy levels k*a - i - 1/2.
class ChargeVector {
 public:
  ChargeVector() = default;
  /// Throws ValidationError if a < 1, the length is not a, or the sum is nonzero.
  ChargeVector(int a, std::vector<std::int64_t> c);
  static ChargeVector zero(int a) { return ChargeVector(a, std::vector<std::int64_t>(static_cast<std::size_t>(a), 0)); }

  int a() const { return a_; }
  const std::vector<std::int64_t>& c() const { return c_; }
  /// Cyclic indexing: c_k = c_{k mod a}.
  std::int64_t operator[](std::int64_t k) const { return c_[static_cast<std::size_t>(mod(k, a_))]; }

  auto operator<=>(const ChargeVector&) const = default;

 private:
  int a_ = 1;
  std::vector<std::int64_t> c_{0};
};

/// Shifted coordinates x_i = c_i + s_i, s_i = i/a - (a-1)/(2a), stored as the
/// integers X_i = 2a * x_i = 2a c_i + 2i - a + 1.
class ShiftedPoint {
 public:
  ShiftedPoint() = default;
  /// Throws ValidationError unless X_i == 2i - a + 1 (mod 2a) and sum X = 0.
  ShiftedPoint(int a, std::vector<std::int64_t> scaled);

  int a() const { return a_; }
  /// The scale 2a by which coordinates are multiplied.
  std::int64_t scale() const { return 2 * static_cast<std::int64_t>(a_); }
  const std::vector<std::int64_t>& scaled() const { return scaled_; }
  std::int64_t operator[](std::int64_t k) const { return scaled_[static_cast<std::size_t>(mod(k, a_))]; }
  Rational x(std::int64_t k) const { return Rational(BigInt((*this)[k]), BigInt(scale())); }

  auto operator<=>(const ShiftedPoint&) const = default;

 private:
  int a_ = 1;
  std::vector<std::int64_t> scaled_{0};
};

/// The a-core with a right-justified abacus of the given runner charges,
/// built by filling every level at or below each runner's top bead.
Partition core_from_charges(const ChargeVector& cv);

/// Throws ValidationError if p is not an a-core.
ChargeVector charges_from_core(const Partition& p, int a);

/// Q(c) = (a/2) sum c_k^2 + sum k c_k, runner index k from 0.
std::int64_t size_quadratic(const ChargeVector& cv);

ShiftedPoint shift(const ChargeVector& cv);
ChargeVector unshift(const ShiftedPoint& sp);

/// Q in shifted coordinates: -(a^2-1)/24 + (a/2) sum x_i^2.
Rational size_from_x(const ShiftedPoint& sp);

/// Takes 2a-scaled coordinates listed in any order (a point of the S_a orbit
/// of the shifted lattice) and places each coordinate at the unique index
/// whose residue class it occupies. Throws ValidationError when no such
/// arrangement exists.
ShiftedPoint canonicalize(int a, std::span<const std::int64_t> scaled_any_order);

}  // namespace corelattice
