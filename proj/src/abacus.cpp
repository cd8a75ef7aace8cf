#include "corelattice/abacus.hpp"

#include <algorithm>
#include <numeric>

namespace corelattice {

ChargeVector::ChargeVector(int a, std::vector<std::int64_t> c) : a_(a), c_(std::move(c)) {
  if (a_ < 1) throw ValidationError("abacus needs at least one runner");
  if (c_.size() != static_cast<std::size_t>(a_)) throw ValidationError("charge vector length must equal a");
  if (std::accumulate(c_.begin(), c_.end(), std::int64_t{0}) != 0) {
    throw ValidationError("runner charges must sum to zero");
  }
}

ShiftedPoint::ShiftedPoint(int a, std::vector<std::int64_t> scaled) : a_(a), scaled_(std::move(scaled)) {
  if (a_ < 1) throw ValidationError("shifted point needs a >= 1");
  if (scaled_.size() != static_cast<std::size_t>(a_)) throw ValidationError("shifted point length must equal a");
  if (std::accumulate(scaled_.begin(), scaled_.end(), std::int64_t{0}) != 0) {
    throw ValidationError("shifted coordinates must sum to zero");
  }
  for (int i = 0; i < a_; ++i) {
    if (mod(scaled_[static_cast<std::size_t>(i)] - (2 * i - a_ + 1), 2 * a_) != 0) {
      throw ValidationError("shifted coordinate is off the lattice Lambda + s");
    }
  }
}

namespace {

// Doubled energy of the top bead on runner i: 2(-a c_i - i - 1/2).
std::int64_t top_bead(const ChargeVector& cv, int i) {
  return -2 * static_cast<std::int64_t>(cv.a()) * cv.c()[static_cast<std::size_t>(i)] - 2 * i - 1;
}

}  // namespace

Partition core_from_charges(const ChargeVector& cv) {
  const int a = cv.a();
  const std::int64_t step = 2 * static_cast<std::int64_t>(a);
  std::int64_t lowest_top = top_bead(cv, 0);
  for (int i = 1; i < a; ++i) lowest_top = std::min(lowest_top, top_bead(cv, i));

  // Every level at or below lowest_top is filled; list the filled levels above
  // lowest_top - 2a on each runner, which covers one full period of the sea.
  std::vector<std::int64_t> filled;
  for (int i = 0; i < a; ++i) {
    for (std::int64_t level = top_bead(cv, i); level > lowest_top - step; level -= step) {
      filled.push_back(level);
    }
  }
  std::sort(filled.begin(), filled.end(), std::greater<>());

  std::vector<int> parts;
  for (std::size_t j = 1; j <= filled.size(); ++j) {
    const std::int64_t twice_part = filled[j - 1] + 2 * static_cast<std::int64_t>(j) - 1;
    if (twice_part <= 0) break;
    parts.push_back(static_cast<int>(twice_part / 2));
  }
  return Partition(std::move(parts));
}

ChargeVector charges_from_core(const Partition& p, int a) {
  if (a < 1) throw ValidationError("abacus needs at least one runner");
  const int len = p.length();
  // Levels of S_p, doubled: 2 lambda_j - 2j + 1, with lambda_j = 0 past the end.
  // Scanning len + a levels reaches the top bead of every runner.
  std::vector<std::int64_t> top(static_cast<std::size_t>(a));
  std::vector<bool> seen(static_cast<std::size_t>(a), false);
  for (int j = 1; j <= len + a; ++j) {
    const std::int64_t part = j <= len ? p[static_cast<std::size_t>(j - 1)] : 0;
    const std::int64_t level = 2 * part - 2 * j + 1;
    // level = 2(k a - i) - 1  =>  i = -(level + 1)/2 mod a.
    const std::int64_t half = (level + 1) / 2;
    const auto runner = static_cast<std::size_t>(mod(-half, a));
    if (!seen[runner] || level > top[runner]) {
      top[runner] = level;
      seen[runner] = true;
    }
  }
  std::vector<std::int64_t> c(static_cast<std::size_t>(a));
  for (int i = 0; i < a; ++i) {
    const std::int64_t half = (top[static_cast<std::size_t>(i)] + 1) / 2;  // k a - i
    c[static_cast<std::size_t>(i)] = -((half + i) / a);
  }
  std::int64_t total = std::accumulate(c.begin(), c.end(), std::int64_t{0});
  if (total != 0) throw ValidationError("partition is not an a-core");
  ChargeVector cv(a, std::move(c));
  if (core_from_charges(cv) != p) throw ValidationError("partition is not an a-core");
  return cv;
}

std::int64_t size_quadratic(const ChargeVector& cv) {
  const std::int64_t a = cv.a();
  std::int64_t squares = 0;
  std::int64_t linear = 0;
  for (std::int64_t k = 0; k < a; ++k) {
    const std::int64_t ck = cv.c()[static_cast<std::size_t>(k)];
    squares += ck * ck;
    linear += k * ck;
  }
  // sum c = 0 forces sum c^2 to be even.
  return a * (squares / 2) + linear;
}

ShiftedPoint shift(const ChargeVector& cv) {
  const std::int64_t a = cv.a();
  std::vector<std::int64_t> scaled(static_cast<std::size_t>(a));
  for (std::int64_t i = 0; i < a; ++i) {
    scaled[static_cast<std::size_t>(i)] = 2 * a * cv.c()[static_cast<std::size_t>(i)] + 2 * i - a + 1;
  }
  return ShiftedPoint(static_cast<int>(a), std::move(scaled));
}

ChargeVector unshift(const ShiftedPoint& sp) {
  const std::int64_t a = sp.a();
  std::vector<std::int64_t> c(static_cast<std::size_t>(a));
  for (std::int64_t i = 0; i < a; ++i) {
    c[static_cast<std::size_t>(i)] = (sp.scaled()[static_cast<std::size_t>(i)] - (2 * i - a + 1)) / (2 * a);
  }
  return ChargeVector(static_cast<int>(a), std::move(c));
}

Rational size_from_x(const ShiftedPoint& sp) {
  const std::int64_t a = sp.a();
  BigInt sum_sq = 0;
  for (auto v : sp.scaled()) sum_sq += BigInt(v) * v;
  // (a/2) sum (X/2a)^2 = sum X^2 / (8a)
  return Rational(sum_sq, BigInt(8 * a)) - Rational(BigInt(a * a - 1), BigInt(24));
}

ShiftedPoint canonicalize(int a, std::span<const std::int64_t> scaled_any_order) {
  if (scaled_any_order.size() != static_cast<std::size_t>(a)) {
    throw ValidationError("point length must equal a");
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(a));
  std::vector<bool> used(static_cast<std::size_t>(a), false);
  for (auto v : scaled_any_order) {
    // X = 2i - a + 1 (mod 2a)  <=>  i = (X + a - 1)/2 (mod a)
    if (mod(v + a - 1, 2) != 0) throw ValidationError("coordinate has the wrong parity for Lambda + s");
    const auto i = static_cast<std::size_t>(mod((v + a - 1) / 2, a));
    if (used[i]) throw ValidationError("two coordinates share a residue class");
    used[i] = true;
    out[i] = v;
  }
  return ShiftedPoint(a, std::move(out));
}

}  // namespace corelattice
