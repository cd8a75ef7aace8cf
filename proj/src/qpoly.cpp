#include "corelattice/qpoly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "corelattice/core_simplex.hpp"

namespace corelattice {

LaurentPoly1 q_int(std::int64_t n, std::int64_t m) {
  if (n < 0) throw ValidationError("q-integer needs n >= 0");
  LaurentPoly1 p;
  for (std::int64_t i = 0; i < n; ++i) p.add_term(i * m, 1);
  return p;
}

LaurentPoly1 q_factorial(std::int64_t n, std::int64_t m) {
  if (n < 0) throw ValidationError("q-factorial needs n >= 0");
  LaurentPoly1 p(1);
  for (std::int64_t i = 2; i <= n; ++i) p *= q_int(i, m);
  return p;
}

LaurentPoly1 q_binomial(std::int64_t n, std::int64_t k, std::int64_t m) {
  if (n < 0 || k < 0 || k > n) throw ValidationError("q-binomial needs 0 <= k <= n");
  // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<LaurentPoly1> row(static_cast<std::size_t>(k + 1));
  row[0] = LaurentPoly1(1);
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = std::min(i, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(j);
    }
  }
  return in_power(row[static_cast<std::size_t>(k)], m);
}

LaurentPoly1 cat_q(int a, int b) {
  if (a < 1 || b < 1 || !coprime(a, b)) throw ValidationError("Cat_{a,b}(q) requires coprime positive a, b");
  return divide_exact(q_binomial(a + b, a), q_int(a + b));
}

namespace {

// q^m-binomial that vanishes when the top is smaller than the bottom.
LaurentPoly1 binomial_or_zero(std::int64_t n, std::int64_t k, std::int64_t m) {
  if (n < k || n < 0) return {};
  return q_binomial(n, k, m);
}

}  // namespace

LaurentPoly1 coset_expansion_a3(int k, int delta) {
  if (delta != 0 && delta != 1) throw ValidationError("delta must be 0 or 1");
  const LaurentPoly1 big = binomial_or_zero(k + 2, 2, 3);
  const LaurentPoly1 small = binomial_or_zero(k + 1, 2, 3);
  if (delta == 0) return big + small.shifted(2) + small.shifted(4);
  return big + big.shifted(2) + small.shifted(4);
}

bool check_coset_identity_a3(int k, int delta) {
  if (k < 0) throw ValidationError("k must be nonnegative");
  return cat_q(3, 3 * k + 1 + delta) == coset_expansion_a3(k, delta);
}

std::vector<std::vector<std::int64_t>> a4_expansion_shifts() {
  return {{0}, {4, 8, 5, 9, 2, 6, 6, 10, 3, 7}, {12, 9, 13, 11, 15}};
}

LaurentPoly1 coset_expansion_a4(int k) {
  const auto shifts = a4_expansion_shifts();
  LaurentPoly1 total;
  for (std::size_t g = 0; g < shifts.size(); ++g) {
    const LaurentPoly1 term = binomial_or_zero(k + 3 - static_cast<std::int64_t>(g), 3, 4);
    for (auto s : shifts[g]) total += term.shifted(s);
  }
  return total;
}

bool check_coset_identity_a4(int k) {
  if (k < 0) throw ValidationError("k must be nonnegative");
  return cat_q(4, 4 * k + 1) == coset_expansion_a4(k);
}

bool is_unimodal(std::span<const BigInt> seq) {
  std::size_t i = 0;
  while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
  while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
  return i + 1 >= seq.size();
}

std::vector<ResidueVerdict> unimodality_report(const LaurentPoly1& poly, int a) {
  if (a < 1) throw ValidationError("residue modulus must be positive");
  std::vector<ResidueVerdict> out;
  for (int r = 0; r < a; ++r) {
    ResidueVerdict v;
    v.residue = r;
    std::optional<std::int64_t> first;
    std::optional<std::int64_t> last;
    for (const auto& [e, c] : poly.terms()) {
      if (mod(e, a) != r) continue;
      if (!first) first = e;
      last = e;
    }
    if (first) {
      for (std::int64_t e = *first; e <= *last; e += a) v.coefficients.push_back(poly.coefficient(e));
    }
    v.unimodal = is_unimodal(v.coefficients);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

struct AgeProblem {
  int a = 0;
  std::vector<int> bs;
  std::vector<std::int64_t> class_sums;          // distinct residue sums
  std::vector<std::size_t> class_sizes;
  std::vector<std::vector<LaurentPoly1>> binom;  // [class][b index]
  std::vector<LaurentPoly1> targets;             // Cat_{a,b}(q) per b
  LaurentPoly1 product;
};

struct AgeSearch {
  const AgeProblem& prob;
  std::size_t budget = 2'000'000;
  std::size_t nodes = 0;
  bool exhausted = false;
  std::size_t solutions = 0;
  std::vector<std::vector<std::int64_t>> first_solution;

  std::vector<LaurentPoly1> residual;
  LaurentPoly1 product_residual;
  std::vector<std::size_t> remaining;
  std::vector<std::vector<std::int64_t>> shifts;

  explicit AgeSearch(const AgeProblem& p)
      : prob(p), residual(p.targets), product_residual(p.product), remaining(p.class_sizes), shifts(p.class_sizes.size()) {}

  std::size_t top_b() const {
    return static_cast<std::size_t>(std::max_element(prob.bs.begin(), prob.bs.end()) - prob.bs.begin());
  }

  bool constrained(std::size_t cls) const { return !prob.binom[cls][top_b()].is_zero(); }

  void record() {
    ++solutions;
    if (solutions == 1) first_solution = shifts;
  }

  // Classes never seen by any b only meet the product identity.
  void finish_unconstrained() {
    for (const auto& r : residual) {
      if (!r.is_zero()) return;
    }
    std::vector<std::size_t> free_classes;
    std::size_t free_count = 0;
    for (std::size_t c = 0; c < remaining.size(); ++c) {
      if (remaining[c] > 0) {
        free_classes.push_back(c);
        free_count += remaining[c];
      }
    }
    if (!product_residual.nonnegative() || product_residual.at_one() != free_count) return;
    std::vector<std::int64_t> exps;
    for (const auto& [e, c] : product_residual.terms()) {
      for (BigInt i = 0; i < c; ++i) exps.push_back(e);
    }
    auto saved = shifts;
    std::size_t next = 0;
    for (auto c : free_classes) {
      for (std::size_t i = 0; i < remaining[c]; ++i) shifts[c].push_back(exps[next++]);
    }
    record();
    shifts = std::move(saved);
  }

  void run(std::int64_t last_e, std::size_t last_class) {
    if (solutions >= 2 || exhausted) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    bool any_constrained = false;
    for (std::size_t c = 0; c < remaining.size(); ++c) {
      if (remaining[c] > 0 && constrained(c)) any_constrained = true;
    }
    if (!any_constrained) {
      finish_unconstrained();
      return;
    }
    const LaurentPoly1& lead = residual[top_b()];
    if (lead.is_zero()) return;
    const std::int64_t e = min_exponent(lead);
    for (std::size_t c = 0; c < remaining.size(); ++c) {
      if (remaining[c] == 0 || !constrained(c)) continue;
      if (e == last_e && c < last_class) continue;  // canonical order within one exponent
      bool ok = true;
      for (std::size_t j = 0; j < residual.size(); ++j) {
        residual[j] -= prob.binom[c][j].shifted(e);
        if (!residual[j].nonnegative()) ok = false;
      }
      product_residual -= q_power(e);
      if (!product_residual.nonnegative()) ok = false;
      --remaining[c];
      shifts[c].push_back(e);
      if (ok) run(e, c);
      shifts[c].pop_back();
      ++remaining[c];
      product_residual += q_power(e);
      for (std::size_t j = 0; j < residual.size(); ++j) residual[j] += prob.binom[c][j].shifted(e);
      if (solutions >= 2 || exhausted) return;
    }
  }
};

AgeProblem make_problem(int a, const std::vector<int>& bs, const std::vector<std::int64_t>& class_sums,
                        const std::vector<std::size_t>& class_sizes) {
  AgeProblem p;
  p.a = a;
  p.bs = bs;
  p.class_sums = class_sums;
  p.class_sizes = class_sizes;
  p.product = LaurentPoly1(1);
  for (int j = 2; j <= a - 1; ++j) p.product *= q_int(a, j);
  for (int b : bs) p.targets.push_back(cat_q(a, b));
  for (auto sigma : class_sums) {
    std::vector<LaurentPoly1> row;
    for (int b : bs) {
      const std::int64_t m = (b - sigma) / a;
      row.push_back(b - sigma >= 0 ? binomial_or_zero(m + a - 1, a - 1, a) : LaurentPoly1{});
    }
    p.binom.push_back(std::move(row));
  }
  return p;
}

}  // namespace

AgeSearchResult search_age_function(int a, std::span<const int> b_values) {
  AgeSearchResult result;
  result.a = a;
  result.b_values.assign(b_values.begin(), b_values.end());
  if (a < 2) {
    result.report = "a must be at least 2";
    return result;
  }
  if (b_values.empty()) {
    result.report = "no b values given";
    return result;
  }
  for (int b : b_values) {
    if (b < 1 || !coprime(a, b)) {
      result.report = "b = " + std::to_string(b) + " is not a positive integer coprime to a";
      result.failing_b = b;
      return result;
    }
    if (mod(b - b_values[0], a) != 0) {
      result.report = "b values must share one residue class mod a";
      result.failing_b = b;
      return result;
    }
  }
  const std::int64_t r = mod(b_values[0], a);

  // Cosets: residue vectors rho in [0,a)^a, sum rho = b, sum i rho_i = 0 (mod a).
  std::vector<std::vector<std::int64_t>> cosets;
  {
    std::vector<std::int64_t> rho(static_cast<std::size_t>(a), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == rho.size()) {
        std::int64_t s = 0;
        std::int64_t w = 0;
        for (std::size_t i = 0; i < rho.size(); ++i) {
          s += rho[i];
          w += static_cast<std::int64_t>(i) * rho[i];
        }
        if (mod(s - r, a) == 0 && mod(w, a) == 0) cosets.push_back(rho);
        return;
      }
      for (std::int64_t v = 0; v < a; ++v) {
        rho[pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  std::map<std::vector<std::int64_t>, std::size_t> coset_index;
  for (std::size_t i = 0; i < cosets.size(); ++i) coset_index[cosets[i]] = i;

  std::vector<std::int64_t> class_sums;
  for (const auto& rho : cosets) {
    std::int64_t s = 0;
    for (auto v : rho) s += v;
    class_sums.push_back(s);
  }
  std::sort(class_sums.begin(), class_sums.end());
  class_sums.erase(std::unique(class_sums.begin(), class_sums.end()), class_sums.end());
  std::vector<std::size_t> class_sizes(class_sums.size(), 0);
  std::vector<std::size_t> class_of(cosets.size());
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    std::int64_t s = 0;
    for (auto v : cosets[i]) s += v;
    class_of[i] = static_cast<std::size_t>(std::lower_bound(class_sums.begin(), class_sums.end(), s) - class_sums.begin());
    ++class_sizes[class_of[i]];
  }

  std::vector<int> bs(b_values.begin(), b_values.end());
  const AgeProblem problem = make_problem(a, bs, class_sums, class_sizes);

  // q^a-count each coset by enumeration and compare with its binomial.
  result.coset_counts_match = true;
  for (std::size_t j = 0; j < bs.size(); ++j) {
    const SimplexSpec spec(a, bs[j]);
    std::vector<LaurentPoly1> counts(cosets.size());
    for (const auto& cv : enumerate_cores(spec)) {
      const RepVector rv = to_z(spec, shift(cv));
      std::vector<std::int64_t> rho(rv.z.size());
      std::int64_t weight = 0;
      for (std::size_t i = 0; i < rv.z.size(); ++i) {
        rho[i] = mod(rv.z[i], a);
        weight += static_cast<std::int64_t>(i) * ((rv.z[i] - rho[i]) / a);
      }
      counts[coset_index.at(rho)].add_term(a * weight, 1);
    }
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      if (counts[c] != problem.binom[class_of[c]][j]) result.coset_counts_match = false;
    }
  }

  AgeSearch search(problem);
  search.run(std::numeric_limits<std::int64_t>::min(), 0);
  result.solutions_found = search.solutions;

  std::ostringstream report;
  report << "a=" << a << ": " << cosets.size() << " cosets in " << class_sums.size()
         << " classes by residue sum; q^a-grading sum_i i*w_i on w = (z - rho)/a";
  if (search.solutions == 0) {
    // Locate the first prefix of b values with no consistent shift.
    for (std::size_t j = 1; j <= bs.size(); ++j) {
      std::vector<int> prefix(bs.begin(), bs.begin() + static_cast<std::ptrdiff_t>(j));
      AgeSearch sub(make_problem(a, prefix, class_sums, class_sizes));
      sub.run(std::numeric_limits<std::int64_t>::min(), 0);
      if (sub.solutions == 0) {
        result.failing_b = bs[j - 1];
        break;
      }
    }
    report << (search.exhausted ? "; search budget exhausted" : "; no consistent shift assignment");
    result.report = report.str();
    return result;
  }

  // Shifts are determined per class; hand them out in coset order.
  std::vector<std::vector<std::int64_t>> per_class = search.first_solution;
  for (auto& s : per_class) std::sort(s.begin(), s.end());
  std::vector<std::size_t> next(per_class.size(), 0);
  LaurentPoly1 shift_sum;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    CosetTerm term;
    term.residues = cosets[i];
    term.residue_sum = class_sums[class_of[i]];
    term.shift = per_class[class_of[i]][next[class_of[i]]++];
    shift_sum += q_power(term.shift);
    result.cosets.push_back(std::move(term));
  }
  result.product_identity = shift_sum == problem.product;
  result.success = result.product_identity;
  if (search.solutions > 1) report << "; shift multisets are not unique for these b values";
  result.report = report.str();
  return result;
}

}  // namespace corelattice
