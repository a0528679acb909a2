#include "metalift/report.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"
#include "metalift/errors.hpp"

namespace metalift {
namespace {

using Json = nlohmann::ordered_json;

Json number_or_null(double d) {
  if (!std::isfinite(d)) return nullptr;
  return d;
}

Json range_list(const std::vector<std::pair<Rational, Rational>>& ranges) {
  Json out = Json::array();
  for (const auto& [lo, hi] : ranges) out.push_back({lo.to_string(), hi.to_string()});
  return out;
}

Json verdict_json(const Check& c) {
  const Verdict& v = c.verdict;
  Json j;
  j["id"] = v.id;
  j["gating"] = c.gating;
  j["expect"] = v.expect == Expect::Equal ? "zero" : "nonzero";
  j["holds"] = v.holds;
  j["comparisons"] = v.comparisons;
  j["max_residual"] = {{"exact", v.max_residual}, {"float", number_or_null(v.max_residual_f)}};
  Json ws = Json::array();
  for (const auto& w : v.witnesses) {
    ws.push_back({{"point", w.point}, {"frame", w.label}, {"component", w.component}, {"value", w.value}});
  }
  j["witnesses"] = std::move(ws);
  return j;
}

}  // namespace

std::string version() { return METALIFT_VERSION; }

std::string render_report(const RunResult& run, const Manifest& manifest) {
  Json doc;
  doc["tool"] = "metalift";
  doc["version"] = version();
  doc["manifest"] = {{"name", manifest.name}, {"sha256", manifest.sha256}};

  Json plan;
  plan["count"] = run.plan.count;
  plan["seed"] = run.plan.seed;
  plan["mode"] = to_string(run.plan.mode);
  plan["rel_tol"] = run.plan.rel_tol;
  plan["denominator"] = run.plan.denominator;
  plan["base_ranges"] = range_list(run.plan.base_ranges);
  plan["fiber_ranges"] = range_list(run.plan.fiber_ranges);
  plan["points"] = run.points;
  Json params = Json::array();
  for (const auto& p : run.params) params.push_back(p.to_string());
  plan["metallic"] = std::move(params);
  doc["plan"] = std::move(plan);

  doc["conventions"] = {{"xc_sign", run.conventions.xc_sign},
                        {"d1form", run.conventions.d1form},
                        {"dphi_prime_sign", run.conventions.dphi_prime_sign}};

  Json suites = Json::array();
  for (const auto& s : run.suites) {
    Json j;
    j["id"] = s.id;
    j["claim"] = s.claim;
    j["status"] = to_string(s.status);
    j["reason"] = s.reason;
    // Largest residual among the gating checks that expect zero. Witnesses
    // explain a failure, or else show the nonzero evidence of "never" claims.
    std::string worst = "0";
    double worst_f = 0.0;
    Json witnesses = Json::array();
    for (const auto& c : s.checks) {
      if (!c.gating || c.verdict.expect != Expect::Equal) continue;
      if (c.verdict.max_residual_f > worst_f) {
        worst_f = c.verdict.max_residual_f;
        worst = c.verdict.max_residual;
      }
    }
    const bool failed = s.status == SuiteStatus::Fail;
    for (const auto& c : s.checks) {
      if (!c.gating) continue;
      if (failed ? c.verdict.holds : c.verdict.expect != Expect::Differ) continue;
      for (const auto& w : c.verdict.witnesses) {
        if (witnesses.size() >= 3) break;
        witnesses.push_back({{"point", w.point}, {"frame", c.verdict.id + ": " + w.label}, {"value", w.value}});
      }
    }
    j["max_residual"] = {{"exact", worst}, {"float", number_or_null(worst_f)}};
    j["witnesses"] = std::move(witnesses);
    Json checks = Json::array();
    for (const auto& c : s.checks) checks.push_back(verdict_json(c));
    j["checks"] = std::move(checks);
    j["notes"] = s.notes;
    suites.push_back(std::move(j));
  }
  doc["suites"] = std::move(suites);
  doc["all_pass"] = run.all_pass();
  return doc.dump(2) + "\n";
}

void emit_report(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open report path '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error("failed writing report to '" + path + "'");
}

}  // namespace metalift
