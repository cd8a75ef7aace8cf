#pragma once

#include <cstdint>
#include <vector>

#include "corelattice/laurent.hpp"

namespace corelattice {

/// A permutation of {1, ..., n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ValidationError unless the values are exactly 1..n.
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  /// C_k^- on {1..n}: j -> j-1 for 2 <= j <= k, 1 -> k, fixes the rest.
  static Permutation decreasing_cycle(int n, int k);

  int n() const { return static_cast<int>(w_.size()); }
  /// sigma(i), 1-based.
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return w_; }
  Permutation inverse() const;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> w_;
};

/// (sigma o tau)(i) = sigma(tau(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation power(const Permutation& sigma, int e);

/// a_1..a_n with 0 <= a_i < i (so a_1 = 0).
class ValidSequence {
 public:
  ValidSequence() = default;
  explicit ValidSequence(std::vector<int> a);
  int n() const { return static_cast<int>(a_.size()); }
  /// a_i, 1-based.
  int operator()(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& values() const { return a_; }
  auto operator<=>(const ValidSequence&) const = default;

 private:
  std::vector<int> a_;
};

/// Positions i in [1, n-1] with sigma(i) > sigma(i+1).
std::vector<int> des_set(const Permutation& sigma);
std::int64_t des(const Permutation& sigma);
std::int64_t maj(const Permutation& sigma);
std::int64_t inv(const Permutation& sigma);
/// sum over DES of (n+1-i) i, minus inv.
std::int64_t siz(const Permutation& sigma);
/// inv + sum over DES of i^2.
std::int64_t sqin(const Permutation& sigma);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);
/// All valid sequences of length n in lexicographic order.
std::vector<ValidSequence> all_valid_sequences(int n);

/// (C_n^-)^{a_n} o ... o (C_2^-)^{a_2}.
Permutation ld_decode(const ValidSequence& vs);
ValidSequence ld_encode(const Permutation& sigma);

/// maj(LD(a)) = sum a_i and siz(LD(a)) = sum (n+1-i) a_i over all of VS_n.
bool check_ld_weights(int n);

/// Each left factor C_k^- in the product raises maj by 1 and siz by n+1-k;
/// checked along every factorization prefix of every valid sequence.
bool check_ld_steps(int n);

inline constexpr int kDefaultPermutationCap = 9;

/// Sum over S_n of q^siz t^maj. Throws ResourceError for n > cap.
LaurentPoly2 distribution(int n, int cap = kDefaultPermutationCap);
LaurentPoly2 distribution_serial(int n, int cap = kDefaultPermutationCap);

/// prod_{k=1}^n [k]_{q^{n+1-k} t}
LaurentPoly2 sizmaj_product(int n);
bool check_sizmaj2(int n, int cap = kDefaultPermutationCap);

/// Sum over S_n of q^sqin t^maj.
LaurentPoly2 sqin_distribution(int n, int cap = kDefaultPermutationCap);
/// prod_{k=1}^n [k]_{t q^k}
LaurentPoly2 sqin_product(int n);
/// q -> 1/q, t -> t q^{n+1}.
LaurentPoly2 sqin_to_siz_substitution(const LaurentPoly2& p, int n);
/// The sqin product formula holds by brute force, and the substitution sends
/// it to the sizmaj product.
bool check_sqin_relation(int n, int cap = kDefaultPermutationCap);

}  // namespace corelattice
