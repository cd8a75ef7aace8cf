#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <utility>

#include "corelattice/common.hpp"

namespace corelattice {

/// Exponent pair (q-degree, t-degree) of a bivariate monomial.
struct Exp2 {
  std::int64_t q = 0;
  std::int64_t t = 0;
  friend Exp2 operator+(Exp2 l, Exp2 r) { return {l.q + r.q, l.t + r.t}; }
  auto operator<=>(const Exp2&) const = default;
};

/// Exact Laurent polynomial with big-integer coefficients, stored sparsely.
/// Zero coefficients are never stored, so equality is map equality.
template <typename Exponent>
class Laurent {
 public:
  using Terms = std::map<Exponent, BigInt>;

  Laurent() = default;
  Laurent(const BigInt& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Exponent{}, constant);
  }
  Laurent(int constant) : Laurent(BigInt(constant)) {}  // NOLINT(google-explicit-constructor)

  static Laurent monomial(Exponent e, const BigInt& coeff = 1) {
    Laurent p;
    p.add_term(e, coeff);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const Exponent& e, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Sum of coefficients (evaluation at 1).
  BigInt at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  bool nonnegative() const {
    for (const auto& [e, c] : terms_) {
      if (c < 0) return false;
    }
    return true;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent l, const Laurent& r) { return l += r; }
  friend Laurent operator-(Laurent l, const Laurent& r) { return l -= r; }
  friend Laurent operator-(const Laurent& p) { return Laurent{} - p; }

  friend Laurent operator*(const Laurent& l, const Laurent& r) {
    Laurent out;
    for (const auto& [el, cl] : l.terms_) {
      for (const auto& [er, cr] : r.terms_) out.add_term(el + er, cl * cr);
    }
    return out;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  /// Multiplies by the monomial of exponent e.
  Laurent shifted(const Exponent& e) const {
    Laurent out;
    for (const auto& [ex, c] : terms_) out.terms_.emplace(ex + e, c);
    return out;
  }

  /// Applies an exponent map term by term (a monomial substitution).
  template <typename F>
  Laurent substitute(F&& map_exponent) const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.add_term(map_exponent(e), c);
    return out;
  }

  Laurent pow(unsigned n) const {
    Laurent result(1);
    for (unsigned i = 0; i < n; ++i) result *= *this;
    return result;
  }

  bool operator==(const Laurent&) const = default;

 private:
  Terms terms_;
};

using LaurentPoly1 = Laurent<std::int64_t>;
using LaurentPoly2 = Laurent<Exp2>;

inline LaurentPoly1 q_power(std::int64_t e, const BigInt& coeff = 1) { return LaurentPoly1::monomial(e, coeff); }
inline LaurentPoly2 qt_power(std::int64_t qe, std::int64_t te, const BigInt& coeff = 1) {
  return LaurentPoly2::monomial(Exp2{qe, te}, coeff);
}

std::int64_t min_exponent(const LaurentPoly1& p);
std::int64_t max_exponent(const LaurentPoly1& p);

/// Exact division by a nonzero divisor; returns {quotient, remainder} where
/// the remainder is zero when the divisor divides p.
std::pair<LaurentPoly1, LaurentPoly1> divide(const LaurentPoly1& p, const LaurentPoly1& divisor);

/// Divides exactly or throws std::domain_error.
LaurentPoly1 divide_exact(const LaurentPoly1& p, const LaurentPoly1& divisor);

/// Substitutes q -> q^m.
LaurentPoly1 in_power(const LaurentPoly1& p, std::int64_t m);

/// Swaps the roles of q and t.
LaurentPoly2 swap_variables(const LaurentPoly2& p);

/// Human-readable rendering, e.g. "1 + q^2 + 3q^4".
std::string to_string(const LaurentPoly1& p);
std::string to_string(const LaurentPoly2& p);

}  // namespace corelattice
