#include <doctest.h>

#include <algorithm>

#include "corelattice/core_simplex.hpp"
#include "corelattice/qpoly.hpp"

using namespace corelattice;

namespace {

LaurentPoly1 poly(std::initializer_list<std::pair<std::int64_t, int>> terms) {
  LaurentPoly1 p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

bool palindromic(const LaurentPoly1& p) {
  if (p.is_zero()) return true;
  const std::int64_t lo = min_exponent(p);
  const std::int64_t hi = max_exponent(p);
  for (std::int64_t e = lo; e <= hi; ++e) {
    if (p.coefficient(e) != p.coefficient(lo + hi - e)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("q-integers and factorials") {
  CHECK(q_int(3) == poly({{0, 1}, {1, 1}, {2, 1}}));
  CHECK(q_int(3, 2) == poly({{0, 1}, {2, 1}, {4, 1}}));
  CHECK(q_int(0).is_zero());
  CHECK(q_factorial(0) == LaurentPoly1(1));
  CHECK(q_factorial(3) == q_int(2) * q_int(3));
  CHECK(q_factorial(5).at_one() == 120);
}

TEST_CASE("q-binomials") {
  CHECK(q_binomial(7, 0) == LaurentPoly1(1));
  CHECK(q_binomial(4, 2) == poly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
  CHECK(q_binomial(4, 2, 3) == in_power(q_binomial(4, 2), 3));
  CHECK_THROWS_AS(q_binomial(2, 3), ValidationError);
  CHECK_THROWS_AS(q_binomial(-1, 0), ValidationError);
  CHECK_THROWS_AS(q_binomial(3, -1), ValidationError);
}

TEST_CASE("q-binomial symmetry and palindromicity") {
  for (int n = 0; n <= 14; ++n) {
    for (int k = 0; k <= n; ++k) {
      const LaurentPoly1 p = q_binomial(n, k);
      CHECK(p == q_binomial(n, n - k));
      CHECK(palindromic(p));
      CHECK(p.at_one() == binomial(n, k));
      CHECK(p * q_factorial(k) * q_factorial(n - k) == q_factorial(n));
    }
  }
}

TEST_CASE("q-Catalan examples") {
  CHECK(cat_q(3, 4) == poly({{0, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}}));
  CHECK(cat_q(2, 3) == poly({{0, 1}, {2, 1}}));
  for (int a = 1; a <= 7; ++a) CHECK(cat_q(a, 1) == LaurentPoly1(1));
  CHECK(cat_q(3, 11).at_one() == 26);
  CHECK_THROWS_AS(cat_q(4, 6), ValidationError);
}

TEST_CASE("q-Catalan properties over the sweep") {
  for (int a = 2; a <= 6; ++a) {
    for (int b = 1; b <= 20; ++b) {
      if (!coprime(a, b)) continue;
      const LaurentPoly1 c = cat_q(a, b);
      CHECK(c.nonnegative());
      CHECK(palindromic(c));
      CHECK(c.at_one() == rational_catalan(a, b));
      CHECK(BigInt(enumerate_cores(SimplexSpec(a, b)).size()) == c.at_one());
      CHECK(cat_q(b, a) == c);
    }
  }
}

TEST_CASE("coset identities") {
  for (int k = 0; k <= 6; ++k) {
    CHECK(check_coset_identity_a3(k, 0));
    CHECK(check_coset_identity_a3(k, 1));
    CHECK(check_coset_identity_a4(k));
  }
  CHECK(coset_expansion_a3(1, 0) == cat_q(3, 4));
  CHECK(coset_expansion_a3(1, 1) == cat_q(3, 5));
  CHECK(coset_expansion_a4(1) == cat_q(4, 5));
  CHECK(coset_expansion_a4(1).at_one() == 14);
  CHECK_THROWS_AS(check_coset_identity_a3(-1, 0), ValidationError);
  CHECK_THROWS_AS(check_coset_identity_a4(-1), ValidationError);
}

TEST_CASE("a = 4 shift groups") {
  const auto groups = a4_expansion_shifts();
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].size() == 1);
  CHECK(groups[1].size() == 10);
  CHECK(groups[2].size() == 5);
  std::vector<std::int64_t> all;
  for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
  std::sort(all.begin(), all.end());
  std::vector<std::int64_t> expected{0, 4, 8, 12, 5, 9, 9, 13, 2, 6, 6, 10, 3, 7, 11, 15};
  std::sort(expected.begin(), expected.end());
  CHECK(all == expected);
}

TEST_CASE("unimodality") {
  const auto report = unimodality_report(cat_q(3, 4), 3);
  REQUIRE(report.size() == 3);
  CHECK(report[0].coefficients == std::vector<BigInt>{1, 1, 1});
  CHECK(report[1].coefficients == std::vector<BigInt>{1});
  CHECK(report[2].coefficients == std::vector<BigInt>{1});
  for (const auto& v : report) CHECK(v.unimodal);

  for (const auto& v : unimodality_report(LaurentPoly1(7), 4)) CHECK(v.unimodal);

  const std::vector<BigInt> valley{2, 1, 2};
  const std::vector<BigInt> plateau{1, 3, 3, 2, 0};
  const std::vector<BigInt> empty;
  CHECK_FALSE(is_unimodal(valley));
  CHECK(is_unimodal(plateau));
  CHECK(is_unimodal(empty));
}

TEST_CASE("unimodality sweep finds no violation") {
  for (int a = 2; a <= 5; ++a) {
    for (int b = 1; b <= 30; ++b) {
      if (!coprime(a, b)) continue;
      for (const auto& v : unimodality_report(cat_q(a, b), a)) CHECK(v.unimodal);
    }
  }
}

TEST_CASE("age search") {
  const std::vector<int> b3{4, 7, 10};
  const auto r3 = search_age_function(3, b3);
  CHECK(r3.success);
  CHECK(r3.product_identity);
  CHECK(r3.coset_counts_match);
  CHECK(r3.solutions_found == 1);
  std::vector<std::int64_t> shifts;
  for (const auto& c : r3.cosets) shifts.push_back(c.shift);
  std::sort(shifts.begin(), shifts.end());
  CHECK(shifts == std::vector<std::int64_t>{0, 2, 4});

  const std::vector<int> b2{3, 5, 7, 9, 11, 13, 15};
  const auto r2 = search_age_function(2, b2);
  CHECK(r2.success);
  REQUIRE(r2.cosets.size() == 1);
  CHECK(r2.cosets.front().shift == 0);

  const std::vector<int> b4{5, 9};
  const auto r4 = search_age_function(4, b4);
  CHECK(r4.success);
  shifts.clear();
  for (const auto& c : r4.cosets) shifts.push_back(c.shift);
  std::sort(shifts.begin(), shifts.end());
  std::vector<std::int64_t> expected{0, 4, 8, 12, 5, 9, 9, 13, 2, 6, 6, 10, 3, 7, 11, 15};
  std::sort(expected.begin(), expected.end());
  CHECK(shifts == expected);
}

TEST_CASE("age search reports bad input instead of throwing") {
  const std::vector<int> mixed{4, 5};
  CHECK_FALSE(search_age_function(3, mixed).success);
  const std::vector<int> shared{3, 6};
  CHECK_FALSE(search_age_function(3, shared).success);
  const std::vector<int> none;
  CHECK_FALSE(search_age_function(3, none).success);
}
