#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "metalift/manifest.hpp"
#include "metalift/parser.hpp"

namespace testing {

using namespace metalift;

inline const nlohmann::json& oracles() {
  static const nlohmann::json doc = [] {
    std::ifstream in(METALIFT_ORACLES);
    return nlohmann::json::parse(in);
  }();
  return doc;
}

inline Rational rat(const std::string& s) { return Rational::parse(s); }

/// Oracle entries are either "a" or ["a", "b"] meaning a + b·σ.
inline MetallicScalar scalar(const nlohmann::json& v, int p = 0, int q = 0) {
  if (v.is_string()) return MetallicScalar(rat(v.get<std::string>()));
  return MetallicScalar(rat(v[0].get<std::string>()), rat(v[1].get<std::string>()), p, q);
}

inline std::string h3_path() { return std::string(METALIFT_DATA_DIR) + "/manifests/hyperbolic-h3.json"; }

inline const Manifest& h3() {
  static const Manifest m = load_manifest(h3_path());
  return m;
}

inline std::string h3_text() {
  std::ifstream in(h3_path());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// The oracle evaluation point.
inline Point point0() {
  const auto& p = oracles()["point"];
  Point out;
  for (const auto& v : p["x"]) out.base.emplace_back(rat(v.get<std::string>()));
  for (const auto& v : p["y"]) out.fiber.emplace_back(rat(v.get<std::string>()));
  return out;
}

inline Point base_point(std::vector<Rational> x) {
  Point out;
  for (auto& v : x) out.base.emplace_back(std::move(v));
  return out;
}

inline MetallicScalar at(const Expr& e, const Point& p) { return std::get<MetallicScalar>(eval(e, p, EvalMode::Exact)); }

/// A few fixed admissible points of T(H^3).
inline std::vector<Point> h3_points() {
  std::vector<Point> out;
  const int rows[][6] = {{1, 2, 3, 1, -1, 2}, {2, 1, 2, 0, 1, 3}, {-1, 3, 5, 2, 2, -1}, {0, -2, 1, -3, 1, 1}};
  for (const auto& r : rows) {
    out.push_back(Point{{r[0], r[1], r[2]}, {r[3], r[4], r[5]}});
  }
  out.push_back(point0());
  return out;
}

inline Assessor h3_assessor(EvalMode mode = EvalMode::Exact) { return Assessor(h3_points(), mode); }

inline Expr P(const char* s, int n = 3) { return parse(s, n); }

}  // namespace testing
