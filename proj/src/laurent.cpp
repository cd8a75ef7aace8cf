#include "corelattice/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace corelattice {

std::int64_t min_exponent(const LaurentPoly1& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return p.terms().begin()->first;
}

std::int64_t max_exponent(const LaurentPoly1& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no exponents");
  return p.terms().rbegin()->first;
}

std::pair<LaurentPoly1, LaurentPoly1> divide(const LaurentPoly1& p, const LaurentPoly1& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return {LaurentPoly1{}, LaurentPoly1{}};
  const std::int64_t p_low = min_exponent(p);
  const std::int64_t d_low = min_exponent(divisor);
  const LaurentPoly1 d = divisor.shifted(-d_low);
  const std::int64_t d_deg = max_exponent(d);
  const BigInt d_lead = d.terms().rbegin()->second;

  LaurentPoly1 rem = p.shifted(-p_low);
  LaurentPoly1 quot;
  while (!rem.is_zero()) {
    const std::int64_t r_deg = max_exponent(rem);
    if (r_deg < d_deg) break;
    const BigInt r_lead = rem.terms().rbegin()->second;
    if (r_lead % d_lead != 0) break;
    const LaurentPoly1 step = q_power(r_deg - d_deg, r_lead / d_lead);
    quot += step;
    rem -= step * d;
  }
  return {quot.shifted(p_low - d_low), rem.shifted(p_low)};
}

LaurentPoly1 divide_exact(const LaurentPoly1& p, const LaurentPoly1& divisor) {
  auto [quot, rem] = divide(p, divisor);
  if (!rem.is_zero()) throw std::domain_error("polynomial division left a nonzero remainder");
  return quot;
}

LaurentPoly1 in_power(const LaurentPoly1& p, std::int64_t m) {
  return p.substitute([m](std::int64_t e) { return e * m; });
}

LaurentPoly2 swap_variables(const LaurentPoly2& p) {
  return p.substitute([](Exp2 e) { return Exp2{e.t, e.q}; });
}

namespace {

void append_term(std::ostringstream& os, bool first, BigInt coeff, const std::string& mono) {
  if (!first) os << (coeff < 0 ? " - " : " + ");
  else if (coeff < 0) os << "-";
  if (coeff < 0) coeff = -coeff;
  if (mono.empty()) {
    os << coeff;
  } else {
    if (coeff != 1) os << coeff;
    os << mono;
  }
}

std::string power_str(const char* var, std::int64_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
}

}  // namespace

std::string to_string(const LaurentPoly1& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_term(os, first, c, power_str("q", e));
    first = false;
  }
  return os.str();
}

std::string to_string(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_term(os, first, c, power_str("q", e.q) + power_str("t", e.t));
    first = false;
  }
  return os.str();
}

}  // namespace corelattice
