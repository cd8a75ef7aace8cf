#include "corelattice/serialize.hpp"

#include <sstream>

#include "corelattice/qt_catalan.hpp"

namespace corelattice {

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const ChargeVector& cv) {
  Json j;
  j["a"] = cv.a();
  j["c"] = cv.c();
  return j;
}

Json to_json(const BigInt& v) { return to_string(v); }
Json to_json(const Rational& v) { return to_string(v); }

Json to_json(const LaurentPoly1& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, to_string(c)}));
  return out;
}

Json to_json(const LaurentPoly2& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e.q, e.t, to_string(c)}));
  return out;
}

Json to_json(const RationalPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Json to_json(const Quasipolynomial& q) {
  Json j;
  j["period"] = q.period;
  Json cs = Json::array();
  for (const auto& c : q.constituents) cs.push_back(to_json(c));
  j["constituents"] = cs;
  return j;
}

Json core_record(const SimplexSpec& spec, const ChargeVector& cv) {
  const ShiftedPoint sp = shift(cv);
  const Partition p = core_from_charges(cv);
  const std::int64_t skew = skew_length_from_x(spec, sp);
  Json j;
  j["charges"] = cv.c();
  j["z"] = to_z(spec, sp).z;
  j["partition"] = to_json(p);
  j["size"] = size_quadratic(cv);
  j["length"] = length_from_x(sp);
  j["skew_length"] = skew;
  j["co_skew_length"] = static_cast<std::int64_t>(spec.a() - 1) * (spec.b() - 1) / 2 - skew;
  return j;
}

const std::vector<std::string>& core_csv_header() {
  static const std::vector<std::string> header{"charges", "z",      "partition",   "size",
                                               "length",  "skew_length", "co_skew_length"};
  return header;
}

std::vector<std::string> core_csv_row(const Json& record) {
  std::vector<std::string> row;
  for (const auto& key : core_csv_header()) {
    const Json& v = record.at(key);
    if (v.is_array()) {
      std::ostringstream os;
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].dump();
      row.push_back(os.str());
    } else {
      row.push_back(v.dump());
    }
  }
  return row;
}

}  // namespace corelattice
