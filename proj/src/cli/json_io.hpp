#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "classifier/classifier.hpp"

namespace cs {

using json = nlohmann::ordered_json;

// Bad JSON text or a document of the wrong shape. line/column are 1-based and
// zero when the text parsed but the schema did not match.
struct JsonInputError : std::runtime_error {
  std::size_t line = 0, column = 0;
  std::string detail;  // message without the location
  JsonInputError(const std::string& msg, std::size_t l = 0, std::size_t c = 0, std::string d = "")
      : std::runtime_error(msg), line(l), column(c), detail(d.empty() ? msg : std::move(d)) {}
};

json parse_json(const std::string& text);

// Complex numbers are [re, im] pairs of decimal strings at working precision.
// Input also accepts JSON numbers and a bare real.
json to_json(const Complex& z);
json to_json(const Real& x);
Complex complex_from_json(const json& j);

json y_to_json(const YSeptet& y);  // Y-3 .. Y+3
YSeptet y_from_json(const json& j);
json sextic_to_json(const Sextic& p);  // z^0 first
Sextic sextic_from_json(const json& j);

// {"S":[S1,S2,S3],"R":{"12_1":..,"12_2":..,"13_1":..,"13_3":..,"23_2":..,"23_3":..},"Q123":..}
json sp_to_json(const StructurePoint& sp);
StructurePoint sp_from_json(const json& j);

json verdict_to_json(const ClassVerdict& v, const YSeptet& y);

}  // namespace cs
