#include "corelattice/perm_stats.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace corelattice {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::decreasing_cycle(int n, int k) {
  if (k < 1 || k > n) throw ValidationError("cycle length must lie in [1, n]");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (int j = 2; j <= k; ++j) w[static_cast<std::size_t>(j - 1)] = j - 1;
  w[0] = k;
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) w[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(w));
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.n() != tau.n()) throw ValidationError("permutations of different sizes");
  std::vector<int> w(static_cast<std::size_t>(sigma.n()));
  for (int i = 1; i <= sigma.n(); ++i) w[static_cast<std::size_t>(i - 1)] = sigma(tau(i));
  return Permutation(std::move(w));
}

Permutation power(const Permutation& sigma, int e) {
  const Permutation base = e < 0 ? sigma.inverse() : sigma;
  Permutation out = Permutation::identity(sigma.n());
  for (int i = 0; i < std::abs(e); ++i) out = compose(base, out);
  return out;
}

ValidSequence::ValidSequence(std::vector<int> a) : a_(std::move(a)) {
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] < 0 || a_[i] > static_cast<int>(i)) throw ValidationError("valid sequence needs 0 <= a_i < i");
  }
}

std::vector<int> des_set(const Permutation& sigma) {
  std::vector<int> out;
  for (int i = 1; i < sigma.n(); ++i) {
    if (sigma(i) > sigma(i + 1)) out.push_back(i);
  }
  return out;
}

std::int64_t des(const Permutation& sigma) { return static_cast<std::int64_t>(des_set(sigma).size()); }

std::int64_t maj(const Permutation& sigma) {
  std::int64_t total = 0;
  for (int i : des_set(sigma)) total += i;
  return total;
}

std::int64_t inv(const Permutation& sigma) {
  std::int64_t total = 0;
  for (int i = 1; i <= sigma.n(); ++i) {
    for (int j = i + 1; j <= sigma.n(); ++j) {
      if (sigma(i) > sigma(j)) ++total;
    }
  }
  return total;
}

std::int64_t siz(const Permutation& sigma) {
  const std::int64_t n = sigma.n();
  std::int64_t total = 0;
  for (int i : des_set(sigma)) total += (n + 1 - i) * i;
  return total - inv(sigma);
}

std::int64_t sqin(const Permutation& sigma) {
  std::int64_t total = inv(sigma);
  for (int i : des_set(sigma)) total += static_cast<std::int64_t>(i) * i;
  return total;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<ValidSequence> all_valid_sequences(int n) {
  std::vector<ValidSequence> out;
  std::vector<int> a(static_cast<std::size_t>(std::max(n, 0)), 0);
  while (true) {
    out.emplace_back(a);
    int i = n - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == i) {
      a[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++a[static_cast<std::size_t>(i)];
  }
  return out;
}

Permutation ld_decode(const ValidSequence& vs) {
  const int n = vs.n();
  Permutation out = Permutation::identity(n);
  for (int k = 2; k <= n; ++k) out = compose(power(Permutation::decreasing_cycle(n, k), vs(k)), out);
  return out;
}

ValidSequence ld_encode(const Permutation& sigma) {
  const int n = sigma.n();
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  Permutation rest = sigma;
  for (int k = n; k >= 2; --k) {
    // rest fixes everything above k, and C_k^{a_k} sends k to k - a_k.
    const int ak = k - rest(k);
    a[static_cast<std::size_t>(k - 1)] = ak;
    rest = compose(power(Permutation::decreasing_cycle(n, k), -ak), rest);
  }
  return ValidSequence(std::move(a));
}

bool check_ld_weights(int n) {
  for (const auto& vs : all_valid_sequences(n)) {
    const Permutation sigma = ld_decode(vs);
    std::int64_t plain = 0;
    std::int64_t weighted = 0;
    for (int i = 1; i <= n; ++i) {
      plain += vs(i);
      weighted += static_cast<std::int64_t>(n + 1 - i) * vs(i);
    }
    if (maj(sigma) != plain || siz(sigma) != weighted) return false;
  }
  return true;
}

bool check_ld_steps(int n) {
  for (const auto& vs : all_valid_sequences(n)) {
    Permutation prefix = Permutation::identity(n);
    for (int k = 2; k <= n; ++k) {
      const Permutation cycle = Permutation::decreasing_cycle(n, k);
      for (int j = 0; j < vs(k); ++j) {
        const Permutation next = compose(cycle, prefix);
        if (maj(next) != maj(prefix) + 1 || siz(next) != siz(prefix) + (n + 1 - k)) return false;
        prefix = next;
      }
    }
  }
  return true;
}

namespace {

void check_perm_cap(int n, int cap) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  if (n > cap) throw ResourceError("permutation size exceeds the brute-force cap");
}

template <typename Stat>
LaurentPoly2 tally(const std::vector<Permutation>& perms, Stat stat, bool parallel) {
  const auto total = static_cast<std::int64_t>(perms.size());
  std::vector<Exp2> exps(perms.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto& p = perms[static_cast<std::size_t>(i)];
    exps[static_cast<std::size_t>(i)] = Exp2{stat(p), maj(p)};
  }
  std::map<Exp2, std::int64_t> counts;
  for (const auto& e : exps) ++counts[e];
  LaurentPoly2 out;
  for (const auto& [e, c] : counts) out.add_term(e, c);
  return out;
}

// [k]_{q^qe t^te}
LaurentPoly2 q_int2(int k, std::int64_t qe, std::int64_t te) {
  LaurentPoly2 out;
  for (int i = 0; i < k; ++i) out.add_term(Exp2{qe * i, te * i}, 1);
  return out;
}

}  // namespace

LaurentPoly2 distribution(int n, int cap) {
  check_perm_cap(n, cap);
  return tally(all_permutations(n), [](const Permutation& p) { return siz(p); }, true);
}

LaurentPoly2 distribution_serial(int n, int cap) {
  check_perm_cap(n, cap);
  LaurentPoly2 out;
  for (const auto& p : all_permutations(n)) out += qt_power(siz(p), maj(p));
  return out;
}

LaurentPoly2 sizmaj_product(int n) {
  LaurentPoly2 out(1);
  for (int k = 1; k <= n; ++k) out *= q_int2(k, n + 1 - k, 1);
  return out;
}

bool check_sizmaj2(int n, int cap) { return distribution(n, cap) == sizmaj_product(n); }

LaurentPoly2 sqin_distribution(int n, int cap) {
  check_perm_cap(n, cap);
  return tally(all_permutations(n), [](const Permutation& p) { return sqin(p); }, true);
}

LaurentPoly2 sqin_product(int n) {
  LaurentPoly2 out(1);
  for (int k = 1; k <= n; ++k) out *= q_int2(k, k, 1);
  return out;
}

LaurentPoly2 sqin_to_siz_substitution(const LaurentPoly2& p, int n) {
  return p.substitute([n](Exp2 e) { return Exp2{-e.q + (n + 1) * e.t, e.t}; });
}

bool check_sqin_relation(int n, int cap) {
  const LaurentPoly2 product = sqin_product(n);
  if (sqin_distribution(n, cap) != product) return false;
  return sqin_to_siz_substitution(product, n) == sizmaj_product(n);
}

}  // namespace corelattice
