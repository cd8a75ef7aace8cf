#include <doctest.h>

#include "corelattice/serialize.hpp"

using namespace corelattice;

TEST_CASE("scalar and container encodings") {
  CHECK(to_json(Partition({3, 2, 2, 1})).dump() == "[3,2,2,1]");
  CHECK(to_json(Partition()).dump() == "[]");
  CHECK(to_json(ChargeVector(3, {0, 3, -3})).dump() == R"({"a":3,"c":[0,3,-3]})");
  CHECK(to_json(BigInt("123456789012345678901234567890")).dump() ==
        R"("123456789012345678901234567890")");
  CHECK(to_json(Rational(-3, 4)).dump() == R"("-3/4")");
}

TEST_CASE("polynomial encodings") {
  const LaurentPoly1 p = q_power(-1, 2) + q_power(3, -5);
  CHECK(to_json(p).dump() == R"([[-1,"2"],[3,"-5"]])");
  const LaurentPoly2 pq = qt_power(1, 0) + qt_power(0, 2);
  CHECK(to_json(pq).dump() == R"([[0,2,"1"],[1,0,"1"]])");
  CHECK(to_json(RationalPoly({Rational(3, 4), 1, Rational(1, 4)})).dump() == R"(["3/4","1","1/4"])");
  Quasipolynomial q;
  q.period = 2;
  q.constituents = {RationalPoly({1}), RationalPoly({0, 1})};
  CHECK(to_json(q).dump() == R"({"period":2,"constituents":[["1"],["0","1"]]})");
}

TEST_CASE("core records and CSV rows") {
  const SimplexSpec spec(3, 4);
  const ChargeVector cv(3, {-1, 0, 1});
  const Json rec = core_record(spec, cv);
  CHECK(rec.dump() ==
        R"({"charges":[-1,0,1],"z":[4,0,0],"partition":[3,1,1],"size":5,"length":3,"skew_length":3,"co_skew_length":0})");
  CHECK(core_csv_header() ==
        std::vector<std::string>{"charges", "z", "partition", "size", "length", "skew_length", "co_skew_length"});
  CHECK(core_csv_row(rec) == std::vector<std::string>{"-1 0 1", "4 0 0", "3 1 1", "5", "3", "3", "0"});
  const Json empty = core_record(spec, ChargeVector::zero(3));
  CHECK(core_csv_row(empty)[2].empty());
}
