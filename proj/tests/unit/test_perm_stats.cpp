#include <doctest.h>

#include <set>

#include "corelattice/perm_stats.hpp"
#include "generators.hpp"

using namespace corelattice;

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation({0, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation({1, 3}), ValidationError);
  CHECK_THROWS_AS(ValidSequence({0, 2}), ValidationError);
  CHECK_THROWS_AS(ValidSequence({1}), ValidationError);
  CHECK_NOTHROW(Permutation(std::vector<int>{}));
}

TEST_CASE("descents, major index, inversions") {
  const Permutation id = Permutation::identity(4);
  CHECK(des_set(id).empty());
  CHECK(maj(id) == 0);
  CHECK(inv(id) == 0);

  const Permutation p21({2, 1});
  CHECK(des_set(p21) == std::vector<int>{1});
  CHECK(maj(p21) == 1);
  CHECK(inv(p21) == 1);

  const Permutation p321({3, 2, 1});
  CHECK(des_set(p321) == std::vector<int>{1, 2});
  CHECK(des(p321) == 2);
  CHECK(maj(p321) == 3);
  CHECK(inv(p321) == 3);
}

TEST_CASE("siz and sqin") {
  CHECK(siz(Permutation::identity(5)) == 0);
  CHECK(sqin(Permutation::identity(5)) == 0);
  CHECK(siz(Permutation({2, 1})) == 1);
  CHECK(siz(Permutation({3, 2, 1})) == 4);
  CHECK(sqin(Permutation({3, 2, 1})) == 3 + 1 + 4);
}

TEST_CASE("cycles and composition") {
  CHECK(Permutation::decreasing_cycle(2, 2) == Permutation({2, 1}));
  CHECK(Permutation::decreasing_cycle(4, 3) == Permutation({3, 1, 2, 4}));
  CHECK(Permutation::decreasing_cycle(3, 1) == Permutation::identity(3));
  const Permutation c = Permutation::decreasing_cycle(5, 5);
  CHECK(power(c, 5) == Permutation::identity(5));
  CHECK(power(c, -1) == c.inverse());
  CHECK(compose(c, c.inverse()) == Permutation::identity(5));
  const Permutation s({2, 3, 1});
  const Permutation t({1, 3, 2});
  CHECK(compose(s, t) == Permutation({2, 1, 3}));
  CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)), ValidationError);
}

TEST_CASE("enumeration of S_n and valid sequences") {
  const auto s3 = all_permutations(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front() == Permutation::identity(3));
  CHECK(s3.back() == Permutation({3, 2, 1}));
  CHECK(all_valid_sequences(4).size() == 24);
  CHECK(all_valid_sequences(0).size() == 1);
}

TEST_CASE("factorization codes") {
  CHECK(ld_decode(ValidSequence({0, 0, 0, 0})) == Permutation::identity(4));
  CHECK(ld_decode(ValidSequence({0, 1})) == Permutation({2, 1}));
  for (int n = 0; n <= 7; ++n) {
    std::set<Permutation> images;
    for (const auto& vs : all_valid_sequences(n)) {
      const Permutation p = ld_decode(vs);
      CHECK(ld_encode(p) == vs);
      images.insert(p);
    }
    CHECK(images.size() == all_permutations(n).size());
  }
  for (const auto& p : all_permutations(5)) CHECK(ld_decode(ld_encode(p)) == p);
  for (int n = 1; n <= 7; ++n) {
    CHECK(check_ld_weights(n));
    CHECK(check_ld_steps(n));
  }
}

TEST_CASE("joint distributions") {
  CHECK(distribution(1) == LaurentPoly2(1));
  CHECK(distribution(2) == LaurentPoly2(1) + qt_power(1, 1));
  LaurentPoly2 three;
  for (auto [q, t] : {std::pair{0, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 3}}) three.add_term(Exp2{q, t}, 1);
  CHECK(distribution(3) == three);
  CHECK(sizmaj_product(3) == three);
  BigInt fact = 1;
  for (int n = 1; n <= 7; ++n) {
    fact *= n;
    CHECK(distribution(n).at_one() == fact);
    CHECK(distribution(n) == distribution_serial(n));
    CHECK(check_sizmaj2(n));
    CHECK(check_sqin_relation(n));
    CHECK(sqin_distribution(n) == sqin_product(n));
    CHECK(sqin_to_siz_substitution(sqin_product(n), n) == sizmaj_product(n));
  }
  CHECK_THROWS_AS(distribution(4, 3), ResourceError);
  CHECK_THROWS_AS(distribution_serial(4, 3), ResourceError);
}

TEST_CASE("property: left factors raise maj by one and siz by n+1-k") {
  for (int trial = 0; trial < 500; ++trial) {
    const int n = gen::uniform(2, 7);
    const ValidSequence vs = gen::valid_sequence(n);
    // Rebuild the product one factor at a time, from C_2 upward.
    Permutation acc = Permutation::identity(n);
    std::int64_t expect_maj = 0;
    std::int64_t expect_siz = 0;
    for (int k = 2; k <= n; ++k) {
      for (int r = 0; r < vs(k); ++r) {
        acc = compose(Permutation::decreasing_cycle(n, k), acc);
        expect_maj += 1;
        expect_siz += n + 1 - k;
        CHECK(maj(acc) == expect_maj);
        CHECK(siz(acc) == expect_siz);
      }
    }
    CHECK(acc == ld_decode(vs));
  }
}

TEST_CASE("property: random permutations") {
  for (int trial = 0; trial < 500; ++trial) {
    const int n = gen::uniform(1, 9);
    const Permutation p = gen::permutation(n);
    CHECK(compose(p, p.inverse()) == Permutation::identity(n));
    CHECK(inv(p) == inv(p.inverse()));
    CHECK(ld_decode(ld_encode(p)) == p);
    CHECK(sqin(p) >= inv(p));
    std::int64_t m = 0;
    for (int i : des_set(p)) m += i;
    CHECK(maj(p) == m);
  }
}
