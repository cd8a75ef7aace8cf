#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace corelattice {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an input violates a documented precondition
/// (non-coprime pair, malformed vector, statistic undefined for the input).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation would exceed a configured resource cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Floor division for signed integers (rounds toward negative infinity).
constexpr std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

/// Remainder in [0, |d|).
constexpr std::int64_t mod(std::int64_t n, std::int64_t d) {
  std::int64_t r = n % d;
  return r < 0 ? r + (d < 0 ? -d : d) : r;
}

constexpr bool coprime(std::int64_t a, std::int64_t b) { return std::gcd(a, b) == 1; }

BigInt binomial(std::int64_t n, std::int64_t k);

/// C(a+b, a) / (a+b); requires gcd(a,b) = 1.
BigInt rational_catalan(std::int64_t a, std::int64_t b);

/// (a+b+1)(a-1)(b-1)/24
Rational armstrong_average(std::int64_t a, std::int64_t b);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

}  // namespace corelattice
