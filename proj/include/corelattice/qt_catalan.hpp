#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "corelattice/abacus.hpp"
#include "corelattice/core_simplex.hpp"
#include "corelattice/laurent.hpp"

namespace corelattice {

/// l(x) = -(a-1)/2 + a max x_i.
std::int64_t length_from_x(const ShiftedPoint& sp);

/// sl(x) = sum over ordered pairs of floor0(x_i - x_j) - floor0(x_i - x_j - b/a),
/// with floor0(y) = max(0, floor y).
std::int64_t skew_length_from_x(const SimplexSpec& spec, const ShiftedPoint& sp);

/// The same sum on 2a-scaled coordinates listed in any order.
std::int64_t skew_length_from_coordinates(int a, int b, std::span<const std::int64_t> scaled);

/// (a-1)(b-1)/2 - sl.
std::int64_t co_skew_length_from_x(const SimplexSpec& spec, const ShiftedPoint& sp);

/// Sum over (a,b)-cores of q^l t^{sl'}.
LaurentPoly2 cat_qt(const SimplexSpec& spec, const EnumerationOptions& options = {});
LaurentPoly2 cat_qt_serial(const SimplexSpec& spec, std::uint64_t cap = kDefaultEnumerationCap);

/// Sum over (a,b)-cores of q^{l + sl}.
LaurentPoly1 length_skew_generating(const SimplexSpec& spec, const EnumerationOptions& options = {});

bool check_symmetry(const SimplexSpec& spec, const EnumerationOptions& options = {});
/// Compares sum q^{l+sl} with Cat_{a,b}(q).
bool check_specialization(const SimplexSpec& spec, const EnumerationOptions& options = {});

/// Numerator of the three-term rational expression for Cat_{3,b}(q,t) after
/// multiplying through by qt3_denominator().
LaurentPoly2 qt3_numerator(int b);
/// (1-q/t)(1-q/t^2)(1-t^2/q)(1-q^2/t)(1-t/q)(1-t/q^2)
LaurentPoly2 qt3_denominator();
/// Cat_{3,b}(q,t) * D == qt3_numerator(b). Throws ValidationError unless
/// b >= 1 is coprime to 3.
bool check_qt3_identity(int b);

struct OrbifoldCosetLabel {
  /// One-line notation of a permutation of {1, ..., a-1}.
  std::vector<int> sigma;
  /// Minimal vector as 2a-scaled coordinates in increasing (dominant) order.
  std::vector<std::int64_t> dominant;
  /// The same vector with each coordinate at its residue-class index.
  ShiftedPoint point;
  std::int64_t maj = 0;
  std::int64_t siz = 0;
};

/// One label per permutation of S_{a-1}, in lexicographic order.
std::vector<OrbifoldCosetLabel> orbifold_minimal_vectors(int a);

/// For every label: l and sl computed from the dominant coordinates, from the
/// lattice formulas, and from the partition, all equal (maj, siz); and the
/// vector is minimal (consecutive gaps below 1).
bool check_sizmaj1(int a);

struct DeltaEntry {
  int i = 0;
  /// "origin" for x = s moved by +v_i, "infinity" for x = b s moved by -v_i.
  std::string chamber;
  bool in_simplex = false;
  std::int64_t delta_length = 0;
  std::int64_t delta_skew = 0;
  std::int64_t delta_co_skew = 0;
  std::int64_t expected_length = 0;
  std::int64_t expected_co_skew = 0;
};

std::vector<DeltaEntry> delta_table(int a, int b);

/// Every entry of delta_table lies in the simplex and matches the tabulated
/// change in l and sl'.
bool delta_table_check(int a, int b);

}  // namespace corelattice
