#include "cli/json_io.hpp"

namespace cs {

namespace {

const std::array<std::pair<const char*, Var>, 6> kRKeys = {
    {{"12_1", R12_1}, {"12_2", R12_2}, {"13_1", R13_1}, {"13_3", R13_3}, {"23_2", R23_2}, {"23_3", R23_3}}};

Real real_from_json(const json& j) {
  if (j.is_number()) return parse_real(j.dump());
  if (j.is_string()) return parse_real(j.get<std::string>());
  throw JsonInputError("expected a number, got " + j.dump());
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is the 1-based offset of the offending character
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    auto pos = what.find("syntax error");
    if (pos != std::string::npos) what = what.substr(pos);
    throw JsonInputError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                             what,
                         line, col, what);
  }
}

json to_json(const Real& x) { return to_string(x, static_cast<int>(precision()) - 1); }

json to_json(const Complex& z) { return json::array({to_json(re(z)), to_json(im(z))}); }

Complex complex_from_json(const json& j) {
  try {
    if (j.is_array()) {
      if (j.size() != 2) throw JsonInputError("complex number must be [re, im], got " + j.dump());
      return Complex(real_from_json(j[0]), real_from_json(j[1]));
    }
    return Complex(real_from_json(j));
  } catch (const DomainError& e) {
    throw JsonInputError(e.what());
  }
}

json y_to_json(const YSeptet& y) {
  json out = json::array();
  for (const auto& c : y) out.push_back(to_json(c));
  return out;
}

YSeptet y_from_json(const json& j) {
  if (!j.is_array() || j.size() != 7) throw JsonInputError("Y must be an array of 7 [re, im] pairs");
  YSeptet y;
  for (int m = 0; m < 7; ++m) y[m] = complex_from_json(j[m]);
  return y;
}

json sextic_to_json(const Sextic& p) {
  json out = json::array();
  for (const auto& c : p.coeffs) out.push_back(to_json(c));
  return out;
}

Sextic sextic_from_json(const json& j) {
  if (!j.is_array() || j.size() != 7) throw JsonInputError("sextic must be an array of 7 [re, im] pairs");
  Sextic p;
  for (int k = 0; k < 7; ++k) p.coeffs[k] = complex_from_json(j[k]);
  return p;
}

json sp_to_json(const StructurePoint& sp) {
  json r = json::object();
  for (const auto& [key, v] : kRKeys) r[key] = to_json(sp[v]);
  return json{{"S", json::array({to_json(sp[S1]), to_json(sp[S2]), to_json(sp[S3])})},
              {"R", r},
              {"Q123", to_json(sp[Q123])}};
}

StructurePoint sp_from_json(const json& j) {
  if (!j.is_object()) throw JsonInputError("structure point must be an object with S, R, Q123");
  StructurePoint sp;
  if (j.contains("S")) {
    const json& s = j["S"];
    if (!s.is_array() || s.size() != 3) throw JsonInputError("S must be an array of 3 numbers");
    for (int i = 0; i < 3; ++i) sp[var_S(i + 1)] = complex_from_json(s[i]);
  }
  if (j.contains("R")) {
    const json& r = j["R"];
    if (!r.is_object()) throw JsonInputError("R must be an object keyed 12_1, 12_2, 13_1, 13_3, 23_2, 23_3");
    for (auto it = r.begin(); it != r.end(); ++it) {
      bool known = false;
      for (const auto& [key, v] : kRKeys)
        if (it.key() == key) {
          sp[v] = complex_from_json(it.value());
          known = true;
        }
      if (!known) throw JsonInputError("unknown R component " + it.key());
    }
  }
  if (j.contains("Q123")) sp[Q123] = complex_from_json(j["Q123"]);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "S" && it.key() != "R" && it.key() != "Q123")
      throw JsonInputError("unknown structure point field " + it.key());
  return sp;
}

json verdict_to_json(const ClassVerdict& v, const YSeptet& y) {
  json ideals = json::array();
  for (const auto& e : v.ideals)
    ideals.push_back({{"ideal", e.name}, {"vanishes", e.vanishes}, {"residual", to_string(e.residual, 6)}});
  json roots = json::array();
  for (const auto& r : v.roots.roots)
    roots.push_back({{"root", r.where.infinite ? json("inf") : to_json(r.where.z)}, {"multiplicity", r.multiplicity}});
  std::string bits;
  for (bool b : v.pattern) bits += b ? '1' : '0';
  json out{{"class", class_name(v.label)},
           {"pattern", bits},
           {"ideals", ideals},
           {"root_structure", v.roots.label()},
           {"roots", roots},
           {"o0_vanishes", v.o0_vanishes},
           {"o0_residual", to_string(v.o0_residual, 6)}};
  if (v.multiratio) out["multiratio"] = to_json(*v.multiratio);
  if (v.m6) out["m6"] = *v.m6;
  out["y"] = y_to_json(y);
  return out;
}

}  // namespace cs
