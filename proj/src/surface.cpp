/*
 * (C) Copyright 2026 curvecount developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "surface.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace curvecount {

Surface p2(long d) {
  if (d < 1) throw ParseError("p2 requires degree d >= 1");
  Surface s;
  s.name = "p2:" + std::to_string(d);
  s.D = Integer(d) * d;
  s.K = Integer(-3) * d;
  s.S = 9;
  s.X2 = 3;
  s.dimL = d * (d + 3) / 2;
  s.ample_level = d;
  return s;
}

Surface p1xp1(long a, long b) {
  if (a < 1 || b < 1) throw ParseError("p1xp1 requires bidegree a,b >= 1");
  Surface s;
  s.name = "p1xp1:" + std::to_string(a) + "," + std::to_string(b);
  s.D = Integer(2) * a * b;
  s.K = Integer(-2) * (a + b);
  s.S = 8;
  s.X2 = 4;
  s.dimL = a * b + a + b;
  s.ample_level = std::min(a, b);
  return s;
}

Surface custom_surface(const std::string& name, const Integer& D, const Integer& K,
                       const Integer& S, const Integer& X2, long dimL,
                       std::optional<long> ample_level) {
  if (dimL < 0) throw ParseError("dim_linear_system must be >= 0");
  return Surface{name, D, K, S, X2, dimL, ample_level};
}

Surface surface_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("surface JSON: ") + e.what());
  }
  for (const char* key :
       {"name", "c1L_sq", "c1L_c1TstarX", "c1TstarX_sq", "c2X", "dim_linear_system"})
    if (!j.contains(key)) throw ParseError(std::string("surface JSON: missing key '") + key + "'");
  if (!j["name"].is_string()) throw ParseError("surface JSON: 'name' must be a string");
  for (const char* key : {"c1L_sq", "c1L_c1TstarX", "c1TstarX_sq", "c2X", "dim_linear_system"})
    if (!j[key].is_number_integer())
      throw ParseError(std::string("surface JSON: '") + key + "' must be an integer");
  std::optional<long> ample;
  if (j.contains("ample_level") && !j["ample_level"].is_null()) {
    if (!j["ample_level"].is_number_integer())
      throw ParseError("surface JSON: 'ample_level' must be an integer or null");
    ample = j["ample_level"].get<long>();
  }
  return custom_surface(j["name"].get<std::string>(), Integer(j["c1L_sq"].get<long>()),
                        Integer(j["c1L_c1TstarX"].get<long>()),
                        Integer(j["c1TstarX_sq"].get<long>()), Integer(j["c2X"].get<long>()),
                        j["dim_linear_system"].get<long>(), ample);
}

std::string surface_to_json(const Surface& s) {
  nlohmann::json j;
  j["name"] = s.name;
  j["c1L_sq"] = s.D.get_si();
  j["c1L_c1TstarX"] = s.K.get_si();
  j["c1TstarX_sq"] = s.S.get_si();
  j["c2X"] = s.X2.get_si();
  j["dim_linear_system"] = s.dimL;
  if (s.ample_level)
    j["ample_level"] = *s.ample_level;
  else
    j["ample_level"] = nullptr;
  return j.dump();
}

Surface surface_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("surface spec must be p2:<d>, p1xp1:<a>,<b> or file:<path>");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  auto parse_long = [](const std::string& t) {
    size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(t, &pos);
    } catch (...) {
      throw ParseError("bad integer '" + t + "' in surface spec");
    }
    if (pos != t.size()) throw ParseError("bad integer '" + t + "' in surface spec");
    return v;
  };
  if (kind == "p2") return p2(parse_long(rest));
  if (kind == "p1xp1") {
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw ParseError("p1xp1 spec needs two degrees: p1xp1:<a>,<b>");
    return p1xp1(parse_long(rest.substr(0, comma)), parse_long(rest.substr(comma + 1)));
  }
  if (kind == "file") {
    std::ifstream in(rest);
    if (!in) throw ParseError("cannot open surface file '" + rest + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return surface_from_json(buf.str());
  }
  throw ParseError("unknown surface kind '" + kind + "'");
}

}  // namespace curvecount
