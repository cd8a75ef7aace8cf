#include <doctest.h>

#include <algorithm>

#include "corelattice/perm_stats.hpp"
#include "corelattice/qpoly.hpp"
#include "corelattice/qt_catalan.hpp"
#include "generators.hpp"

using namespace corelattice;

TEST_CASE("length from shifted coordinates") {
  for (int a = 2; a <= 6; ++a) CHECK(length_from_x(shift(ChargeVector::zero(a))) == 0);
  CHECK(length_from_x(shift(ChargeVector(3, {0, 3, -3}))) == 8);
  // x = b s is the largest core.
  for (auto [a, b] : {std::pair{3, 4}, {4, 7}, {5, 6}}) {
    const ShiftedPoint empty = shift(ChargeVector::zero(a));
    std::vector<std::int64_t> scaled;
    for (auto v : empty.scaled()) scaled.push_back(b * v);
    const ShiftedPoint largest = canonicalize(a, scaled);
    CHECK(length_from_x(largest) == (a - 1) * (b - 1) / 2);
    CHECK(skew_length_from_x(SimplexSpec(a, b), largest) == (a - 1) * (b - 1) / 2);
  }
}

TEST_CASE("skew length from shifted coordinates") {
  const SimplexSpec s311(3, 11);
  CHECK(skew_length_from_x(s311, shift(ChargeVector::zero(3))) == 0);
  const ChargeVector big = charges_from_core(Partition({9, 7, 5, 3, 2, 2, 1, 1}), 3);
  CHECK(skew_length_from_x(s311, shift(big)) == 9);
  CHECK(co_skew_length_from_x(s311, shift(big)) == 1);
  CHECK(skew_length_from_x(SimplexSpec(3, 4), shift(charges_from_core(Partition({3, 1, 1}), 3))) == 3);
}

TEST_CASE("cat_qt examples") {
  LaurentPoly2 expected;
  for (auto [q, t] : {std::pair{3, 0}, {2, 1}, {1, 2}, {1, 1}, {0, 3}}) expected.add_term(Exp2{q, t}, 1);
  CHECK(cat_qt(SimplexSpec(3, 4)) == expected);
  CHECK(cat_qt(SimplexSpec(5, 1)) == LaurentPoly2(1));
  CHECK(cat_qt(SimplexSpec(2, 3)) == qt_power(1, 0) + qt_power(0, 1));
  CHECK(cat_qt(SimplexSpec(4, 7)) == cat_qt_serial(SimplexSpec(4, 7)));
  CHECK_THROWS_AS(cat_qt_serial(SimplexSpec(3, 4), 2), ResourceError);
}

TEST_CASE("symmetry and specialization") {
  CHECK(check_symmetry(SimplexSpec(3, 4)));
  CHECK(check_specialization(SimplexSpec(3, 4)));
  CHECK(length_skew_generating(SimplexSpec(3, 4)) == cat_q(3, 4));
  for (int b = 1; b <= 15; b += 2) {
    CHECK(check_symmetry(SimplexSpec(2, b)));
    CHECK(check_specialization(SimplexSpec(2, b)));
  }
  for (int a = 2; a <= 6; ++a) {
    CHECK(check_symmetry(SimplexSpec(a, 1)));
    CHECK(check_specialization(SimplexSpec(a, 1)));
  }
  for (int b = 1; b <= 13; ++b) {
    if (!coprime(3, b)) continue;
    CHECK(check_symmetry(SimplexSpec(3, b)));
    CHECK(check_specialization(SimplexSpec(3, b)));
  }
}

TEST_CASE("three-term identity for a = 3") {
  for (int b = 1; b <= 20; ++b) {
    if (coprime(3, b)) CHECK(check_qt3_identity(b));
  }
  CHECK_THROWS_AS(check_qt3_identity(6), ValidationError);
  CHECK_THROWS_AS(check_qt3_identity(0), ValidationError);
}

TEST_CASE("statistics agree with the partition oracle") {
  for (int a = 2; a <= 5; ++a) {
    for (int b = 1; b <= 13; ++b) {
      if (!coprime(a, b)) continue;
      const SimplexSpec spec(a, b);
      const LaurentPoly2 qt = cat_qt(spec);
      CHECK(qt.at_one() == rational_catalan(a, b));
      std::int64_t max_l = 0;
      std::int64_t max_sl = 0;
      for (const auto& cv : enumerate_cores(spec)) {
        const ShiftedPoint sp = shift(cv);
        const Partition p = core_from_charges(cv);
        const std::int64_t l = length_from_x(sp);
        const std::int64_t sl = skew_length_from_x(spec, sp);
        CHECK(l == p.length());
        CHECK(sl == skew_length(p, a, b).skew);
        max_l = std::max(max_l, l);
        max_sl = std::max(max_sl, sl);
      }
      CHECK(max_l == (a - 1) * (b - 1) / 2);
      CHECK(max_sl == (a - 1) * (b - 1) / 2);
    }
  }
}

TEST_CASE("property: skew length is invariant under coordinate permutations") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto [a, b] = gen::coprime_pair(6, 13);
    const SimplexSpec spec(a, b);
    for (const auto& cv : enumerate_cores(spec)) {
      const ShiftedPoint sp = shift(cv);
      std::vector<std::int64_t> scaled = sp.scaled();
      std::shuffle(scaled.begin(), scaled.end(), gen::rng());
      CHECK(skew_length_from_coordinates(a, b, scaled) == skew_length_from_x(spec, sp));
    }
  }
}

TEST_CASE("orbifold minimal vectors") {
  const auto two = orbifold_minimal_vectors(2);
  REQUIRE(two.size() == 1);
  CHECK(two.front().maj == 0);
  CHECK(two.front().siz == 0);

  const auto three = orbifold_minimal_vectors(3);
  REQUIRE(three.size() == 2);
  CHECK(three[1].sigma == std::vector<int>{2, 1});
  CHECK(three[1].maj == 1);
  CHECK(three[1].siz == 1);

  for (int a = 2; a <= 6; ++a) {
    const auto labels = orbifold_minimal_vectors(a);
    for (const auto& l : labels) {
      const Permutation sigma(l.sigma);
      CHECK(l.maj == maj(sigma));
      CHECK(l.siz == siz(sigma));
      CHECK(std::is_sorted(l.dominant.begin(), l.dominant.end()));
    }
    CHECK(check_sizmaj1(a));
  }
}

TEST_CASE("delta table") {
  const auto t310 = delta_table(3, 10);
  auto find = [&](const std::vector<DeltaEntry>& t, int i, const std::string& chamber) {
    return *std::find_if(t.begin(), t.end(), [&](const DeltaEntry& e) { return e.i == i && e.chamber == chamber; });
  };
  const DeltaEntry o1 = find(t310, 1, "origin");
  CHECK(o1.in_simplex);
  CHECK(o1.delta_length == 1);
  CHECK(o1.delta_co_skew == -2);
  const DeltaEntry i1 = find(t310, 1, "infinity");
  CHECK(i1.delta_length == -1);
  CHECK(i1.delta_co_skew == 1);
  const DeltaEntry o2 = find(delta_table(4, 13), 2, "origin");
  CHECK(o2.delta_length == 2);
  CHECK(o2.delta_co_skew == -4);
  for (auto [a, b] : {std::pair{2, 7}, {3, 10}, {4, 13}, {5, 16}, {5, 26}, {3, 7}}) CHECK(delta_table_check(a, b));
}
