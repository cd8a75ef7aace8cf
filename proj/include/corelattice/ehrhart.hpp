#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corelattice/common.hpp"
#include "corelattice/core_simplex.hpp"

namespace corelattice {

/// Polynomial in one variable with exact rational coefficients, lowest degree
/// first. Trailing zeros are stripped, so the zero polynomial is empty.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(const Rational& c) { return RationalPoly({c}); }
  /// The polynomial x.
  static RationalPoly variable() { return RationalPoly({Rational(0), Rational(1)}); }

  const std::vector<Rational>& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational operator()(const Rational& x) const;
  /// p(alpha x + beta)
  RationalPoly compose_affine(const Rational& alpha, const Rational& beta) const;

  friend RationalPoly operator+(const RationalPoly& l, const RationalPoly& r);
  friend RationalPoly operator-(const RationalPoly& l, const RationalPoly& r);
  friend RationalPoly operator*(const RationalPoly& l, const RationalPoly& r);
  friend RationalPoly operator-(const RationalPoly& p);
  bool operator==(const RationalPoly&) const = default;

 private:
  std::vector<Rational> c_;
};

/// {quotient, remainder}. Throws std::domain_error on a zero divisor.
std::pair<RationalPoly, RationalPoly> divide(const RationalPoly& p, const RationalPoly& d);
std::string to_string(const RationalPoly& p, const std::string& var = "t");

/// One polynomial per residue class of t mod period.
struct Quasipolynomial {
  std::int64_t period = 1;
  std::vector<RationalPoly> constituents;
  Rational operator()(std::int64_t t) const;
  int degree() const;
  bool operator==(const Quasipolynomial&) const = default;
};

using SampleSeries = std::map<std::int64_t, Rational>;

/// The unique polynomial of degree < n through n points with distinct abscissae.
RationalPoly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points);

/// Interpolates degree + 1 samples per class and checks the rest.
/// Throws ValidationError when a class has fewer than degree + 2 samples or a
/// held-out sample disagrees.
Quasipolynomial fit_quasipolynomial(const SampleSeries& samples, std::int64_t period, int degree);
RationalPoly fit_polynomial(const SampleSeries& samples, int degree);

/// b -> Cat_{a,b} by enumeration, for the first `terms` values b >= b_min
/// with b = residue (mod a).
SampleSeries core_count_series(int a, int residue, int terms, int b_min, const EnumerationOptions& options = {});
/// b -> total size of the (a,b)-cores, same sampling.
SampleSeries core_qsum_series(int a, int residue, int terms, int b_min, const EnumerationOptions& options = {});

/// F = core count, G = total size, P = G / F, each a polynomial in b.
struct RootStructureReport {
  int a = 0;
  RationalPoly count;
  RationalPoly total;
  RationalPoly average;
  /// Every coprime residue class is fit by the same F and G.
  bool classes_agree = false;
  /// F and G vanish at -1, ..., -(a-1).
  bool roots_ok = false;
  /// G is divisible by F.
  bool divisible = false;
  /// P(1) = 0, P(-a-1) = 0, P(0) = -(a^2-1)/24.
  bool average_values_ok = false;
  /// P(b) = (a+b+1)(a-1)(b-1)/24.
  bool armstrong_ok = false;
  /// s with G(-a-b) = s G(b), or 0 when neither sign fits.
  int symmetry_sign = 0;
  bool passed() const;
};

RootStructureReport root_structure(int a, const EnumerationOptions& options = {});
bool check_root_structure(int a, const EnumerationOptions& options = {});

/// coeffs . x <= rhs
struct LinearInequality {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// Bounded polytope {x : A x <= b} in R^dim.
struct RationalPolytope {
  int dim = 0;
  std::vector<LinearInequality> inequalities;
};

using LatticeWeight = std::function<Rational(std::span<const std::int64_t>)>;

/// Vertices of P, by solving every dim-subset of the inequalities as equations.
std::vector<std::vector<Rational>> vertices(const RationalPolytope& p);

/// Sum of f over lattice points of tP (t >= 0), or of its interior when
/// `interior` is set; f = 1 when empty. With `negate`, f is evaluated at -x.
Rational lattice_sum(const RationalPolytope& p, std::int64_t t, bool interior, const LatticeWeight& f = {},
                     bool negate = false);

struct ReciprocityRow {
  std::int64_t t = 0;
  /// (-1)^dim L(P, -t) from the fitted quasipolynomial.
  Rational predicted;
  /// Direct count (or weighted sum) over the interior of tP.
  Rational direct;
};

struct ReciprocityReport {
  Quasipolynomial fit;
  std::vector<ReciprocityRow> rows;
  bool passed = false;
};

/// Fits L(f, P, t) on t = 1..t_max, then compares (-1)^dim L(f, P, -t) with
/// the interior sum of f(-x) for t = 1..t_max/2.
/// Throws ValidationError when t_max < 2 (degree + 2) period or the fit fails.
ReciprocityReport reciprocity_check(const RationalPolytope& p, std::int64_t t_max, std::int64_t period, int degree,
                                    const LatticeWeight& f = {});

struct NamedPolytope {
  std::string name;
  RationalPolytope polytope;
  std::int64_t period = 1;
  int degree = 0;
};

/// Segment [0,1], triangle x,y >= 0 with 2x + y <= 1, standard 2- and
/// 3-simplices, and the square [0,1]^2.
std::vector<NamedPolytope> bundled_polytopes();

/// x_i >= 0, sum x_i <= 1 in R^dim.
RationalPolytope standard_simplex(int dim);

}  // namespace corelattice
