#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "corelattice/abacus.hpp"
#include "corelattice/core_simplex.hpp"
#include "corelattice/ehrhart.hpp"
#include "corelattice/laurent.hpp"
#include "corelattice/partition.hpp"

namespace corelattice {

using Json = nlohmann::ordered_json;

/// [3,2,2,1]
Json to_json(const Partition& p);
/// {"a":3,"c":[0,3,-3]}
Json to_json(const ChargeVector& cv);
/// [[exponent,"coefficient"], ...] by increasing exponent.
Json to_json(const LaurentPoly1& p);
/// [[q-exponent,t-exponent,"coefficient"], ...] in lexicographic order.
Json to_json(const LaurentPoly2& p);
/// ["c0","c1",...] lowest degree first.
Json to_json(const RationalPoly& p);
/// {"period":n,"constituents":[[...],...]}
Json to_json(const Quasipolynomial& q);
Json to_json(const BigInt& v);
Json to_json(const Rational& v);

/// One enumerated core: charges, z, partition, size, length, skew_length,
/// co_skew_length.
Json core_record(const SimplexSpec& spec, const ChargeVector& cv);

/// Column names of core_csv_row.
const std::vector<std::string>& core_csv_header();
/// Vectors are written space-separated inside their cell.
std::vector<std::string> core_csv_row(const Json& record);

}  // namespace corelattice
