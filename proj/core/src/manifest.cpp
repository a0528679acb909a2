#include "metalift/manifest.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "json.hpp"
#include "metalift/errors.hpp"
#include "metalift/parser.hpp"

namespace metalift {
namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ManifestError(where + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

Expr expr_at(const json& v, int n, const std::string& where) {
  if (v.is_number_integer()) return Expr(static_cast<std::int64_t>(v.get<std::int64_t>()));
  if (!v.is_string()) fail(where, "expected an expression string");
  try {
    return parse(v.get<std::string>(), n);
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

std::vector<Expr> expr_list(const json& v, int n, std::size_t len, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  if (v.size() != len) {
    fail(where, "dimension mismatch: expected " + std::to_string(len) + " entries, got " + std::to_string(v.size()));
  }
  std::vector<Expr> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(expr_at(v[i], n, where + "/" + std::to_string(i)));
  return out;
}

std::vector<std::vector<Expr>> expr_matrix(const json& v, int n, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of rows");
  if (v.size() != static_cast<std::size_t>(n)) {
    fail(where, "dimension mismatch: expected " + std::to_string(n) + " rows, got " + std::to_string(v.size()));
  }
  std::vector<std::vector<Expr>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(expr_list(v[i], n, static_cast<std::size_t>(n), where + "/" + std::to_string(i)));
  }
  return out;
}

Rational rational_at(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected an integer or a rational string such as \"-3/2\"");
}

std::vector<std::pair<Rational, Rational>> ranges(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n) fail(where, "expected " + std::to_string(n) + " [lo, hi] ranges");
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string w = where + "/" + std::to_string(i);
    if (!v[i].is_array() || v[i].size() != 2) fail(w, "expected [lo, hi]");
    Rational lo = rational_at(v[i][0], w + "/0");
    Rational hi = rational_at(v[i][1], w + "/1");
    if (hi < lo) fail(w, "lower bound exceeds upper bound");
    out.emplace_back(std::move(lo), std::move(hi));
  }
  return out;
}

int sign_at(const json& v, const std::string& where) {
  if (v.is_number_integer() && (v.get<int>() == 1 || v.get<int>() == -1)) return v.get<int>();
  if (v.is_string() && v.get<std::string>() == "+") return 1;
  if (v.is_string() && v.get<std::string>() == "-") return -1;
  fail(where, "expected a sign: 1, -1, \"+\" or \"-\"");
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

Manifest parse_manifest(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ManifestError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail("/", "manifest must be a JSON object");
  Manifest m;
  m.sha256 = sha256_hex(json_text);
  m.name = doc.value("name", std::string("unnamed"));
  const json& dim = member(doc, "dimension", "/");
  if (!dim.is_number_integer() || dim.get<int>() < 2 || dim.get<int>() > 8) {
    fail("/dimension", "expected an integer between 2 and 8");
  }
  const int n = dim.get<int>();
  m.dimension = n;
  const auto nz = static_cast<std::size_t>(n);
  if (doc.contains("coordinates")) {
    const json& c = doc["coordinates"];
    if (!c.is_array() || c.size() != nz) fail("/coordinates", "dimension mismatch");
    for (const auto& s : c) {
      if (!s.is_string()) fail("/coordinates", "coordinate names must be strings");
      m.coordinates.push_back(s.get<std::string>());
    }
  } else {
    for (int i = 1; i <= n; ++i) m.coordinates.push_back("x" + std::to_string(i));
  }
  if (doc.contains("domain")) {
    const json& d = doc["domain"];
    if (!d.is_array()) fail("/domain", "expected an array");
    m.domain = expr_list(d, n, d.size(), "/domain");
  }
  for (const auto& e : m.domain) {
    if (!(e.free_variables() >> 32 == 0)) fail("/domain", "domain constraints may not involve fiber variables");
  }
  m.metric = expr_matrix(member(doc, "metric", "/"), n, "/metric");
  m.phi = expr_matrix(member(doc, "phi", "/"), n, "/phi");
  m.eta = expr_list(member(doc, "eta", "/"), n, nz, "/eta");
  m.xi = expr_list(member(doc, "xi", "/"), n, nz, "/xi");
  auto base_only = [&](const std::vector<Expr>& es, const std::string& where) {
    for (const auto& e : es) {
      if (e.free_variables() >> 32 != 0) fail(where, "base tensors may not involve fiber variables");
    }
  };
  for (const auto& row : m.metric) base_only(row, "/metric");
  for (const auto& row : m.phi) base_only(row, "/phi");
  base_only(m.eta, "/eta");
  base_only(m.xi, "/xi");

  const json& met = member(doc, "metallic", "/");
  if (!met.is_array() || met.empty()) fail("/metallic", "at least one metallic parameter set is required");
  for (std::size_t i = 0; i < met.size(); ++i) {
    const std::string w = "/metallic/" + std::to_string(i);
    const json& e = met[i];
    if (!e.is_object()) fail(w, "expected an object {p, q, eps1, eps2}");
    MetallicParams p;
    const json& jp = member(e, "p", w);
    const json& jq = member(e, "q", w);
    if (!jp.is_number_integer() || jp.get<int>() < 1) fail(w + "/p", "p must be a positive integer");
    if (!jq.is_number_integer() || jq.get<int>() < 1) fail(w + "/q", "q must be a positive integer");
    p.p = jp.get<int>();
    p.q = jq.get<int>();
    if (e.contains("eps1")) p.eps1 = sign_at(e["eps1"], w + "/eps1");
    if (e.contains("eps2")) p.eps2 = sign_at(e["eps2"], w + "/eps2");
    m.metallic.push_back(p);
  }

  SamplePlan& plan = m.plan;
  plan.base_ranges.assign(nz, {Rational(-3), Rational(3)});
  plan.fiber_ranges.assign(nz, {Rational(-3), Rational(3)});
  if (doc.contains("sample_plan")) {
    const json& sp = doc["sample_plan"];
    if (!sp.is_object()) fail("/sample_plan", "expected an object");
    if (sp.contains("count")) {
      if (!sp["count"].is_number_integer() || sp["count"].get<long long>() < 1) {
        fail("/sample_plan/count", "count must be a positive integer");
      }
      plan.count = sp["count"].get<std::size_t>();
    }
    if (sp.contains("seed")) {
      if (!sp["seed"].is_number_unsigned()) fail("/sample_plan/seed", "seed must be a non-negative integer");
      plan.seed = sp["seed"].get<std::uint64_t>();
    }
    if (sp.contains("mode")) {
      try {
        plan.mode = eval_mode_from_string(sp["mode"].get<std::string>());
      } catch (const std::exception& e) {
        fail("/sample_plan/mode", "expected \"exact\" or \"float\"");
      }
    }
    if (sp.contains("rel_tol")) {
      if (!sp["rel_tol"].is_number() || !(sp["rel_tol"].get<double>() > 0.0)) {
        fail("/sample_plan/rel_tol", "tolerance must be positive");
      }
      plan.rel_tol = sp["rel_tol"].get<double>();
    }
    if (sp.contains("denominator")) {
      if (!sp["denominator"].is_number_integer() || sp["denominator"].get<int>() < 1) {
        fail("/sample_plan/denominator", "denominator must be a positive integer");
      }
      plan.denominator = sp["denominator"].get<int>();
    }
    if (sp.contains("base_ranges")) plan.base_ranges = ranges(sp["base_ranges"], nz, "/sample_plan/base_ranges");
    if (sp.contains("fiber_ranges")) plan.fiber_ranges = ranges(sp["fiber_ranges"], nz, "/sample_plan/fiber_ranges");
  }

  if (doc.contains("unit_fields")) {
    const json& u = doc["unit_fields"];
    if (!u.is_array()) fail("/unit_fields", "expected an array of vector fields");
    for (std::size_t i = 0; i < u.size(); ++i) {
      m.unit_fields.push_back(expr_list(u[i], n, nz, "/unit_fields/" + std::to_string(i)));
      base_only(m.unit_fields.back(), "/unit_fields");
    }
  }
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot read manifest '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str());
}

ChartedManifold make_base(const Manifest& m) {
  ChartPtr chart = base_chart(m.dimension, m.domain, m.coordinates);
  TensorField g = tensor02(chart, [&](std::size_t i, std::size_t j) { return m.metric[i][j]; });
  return ChartedManifold(chart, std::move(g));
}

ParacontactStructure make_structure(const Manifest& m) {
  ChartedManifold base = make_base(m);
  const ChartPtr chart = base.chart();
  TensorField phi = tensor11(chart, [&](std::size_t i, std::size_t j) { return m.phi[i][j]; });
  return ParacontactStructure(std::move(base), std::move(phi), one_form(chart, m.eta), vector_field(chart, m.xi));
}

std::vector<TensorField> make_unit_fields(const Manifest& m, const ChartPtr& chart) {
  std::vector<TensorField> out;
  for (const auto& u : m.unit_fields) out.push_back(vector_field(chart, u));
  return out;
}

}  // namespace metalift
