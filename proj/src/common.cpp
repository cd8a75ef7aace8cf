#include "corelattice/common.hpp"

namespace corelattice {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt rational_catalan(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1 || !coprime(a, b)) {
    throw ValidationError("rational Catalan number requires coprime positive a, b");
  }
  return binomial(a + b, a) / (a + b);
}

Rational armstrong_average(std::int64_t a, std::int64_t b) {
  return Rational(BigInt((a + b + 1) * (a - 1) * (b - 1)), BigInt(24));
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace corelattice
