#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corelattice/laurent.hpp"

namespace corelattice {

/// [n]_{q^m} = 1 + q^m + ... + q^{m(n-1)}.
LaurentPoly1 q_int(std::int64_t n, std::int64_t m = 1);
/// [n]_{q^m}!
LaurentPoly1 q_factorial(std::int64_t n, std::int64_t m = 1);
/// Gaussian binomial [n brack k] in q^m. Throws ValidationError on k > n or negatives.
LaurentPoly1 q_binomial(std::int64_t n, std::int64_t k, std::int64_t m = 1);

/// Cat_{a,b}(q) = [a+b brack a]_q / [a+b]_q, by exact long division.
/// Throws ValidationError if gcd(a,b) != 1 and std::domain_error on a remainder.
LaurentPoly1 cat_q(int a, int b);

/// Cat_{3,3k+1+delta}(q) against its three-term q^3-binomial expansion.
bool check_coset_identity_a3(int k, int delta);
/// Cat_{4,4k+1}(q) against its sixteen-term q^4-binomial expansion.
bool check_coset_identity_a4(int k);

/// Right-hand sides of the two identities above.
LaurentPoly1 coset_expansion_a3(int k, int delta);
LaurentPoly1 coset_expansion_a4(int k);

/// Shifts (powers of q) in the a = 4, b = 4k+1 expansion, grouped by the
/// binomial they multiply: {k+3 brack 3}, {k+2 brack 3}, {k+1 brack 3}.
std::vector<std::vector<std::int64_t>> a4_expansion_shifts();

struct ResidueVerdict {
  int residue = 0;
  /// Coefficients of q^{a j + residue} from the first to the last nonzero one.
  std::vector<BigInt> coefficients;
  bool unimodal = true;
};

bool is_unimodal(std::span<const BigInt> seq);

std::vector<ResidueVerdict> unimodality_report(const LaurentPoly1& poly, int a);

/// One coset of Lambda_T = (aZ)^{a-1}, labelled by the residues of z mod a.
struct CosetTerm {
  std::vector<std::int64_t> residues;
  /// Sum of the residues; cosets with equal sums carry identical q^a-binomials.
  std::int64_t residue_sum = 0;
  std::int64_t shift = 0;
};

struct AgeSearchResult {
  int a = 0;
  std::vector<int> b_values;
  bool success = false;
  std::vector<CosetTerm> cosets;
  /// sum over cosets of q^shift equals [a]_{q^2} ... [a]_{q^{a-1}}.
  bool product_identity = false;
  /// The enumerated q^a-count of every coset equals its q^a-binomial.
  bool coset_counts_match = false;
  /// Distinct shift multisets found (search stops after two).
  std::size_t solutions_found = 0;
  std::optional<int> failing_b;
  std::string report;
};

/// Enumerates the cores of each (a, b), sorts them into cosets of Lambda_T,
/// and looks for b-independent shifts iota realizing
///   Cat_{a,b}(q) = sum_c q^{iota(c)} [m_c + a - 1 brack a - 1]_{q^a}.
/// All b must be coprime to a and share one residue class mod a.
/// Failure is reported in the result rather than thrown.
AgeSearchResult search_age_function(int a, std::span<const int> b_values);

}  // namespace corelattice
