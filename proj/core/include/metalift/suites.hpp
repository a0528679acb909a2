#pragma once

#include <string>
#include <vector>

#include "metalift/manifest.hpp"

namespace metalift {

enum class SuiteStatus { Pass, Fail, Skipped };

std::string to_string(SuiteStatus s);

/// One verdict inside a suite. Non-gating checks are observations that are
/// reported but do not decide the suite status.
struct Check {
  Verdict verdict;
  bool gating = true;
};

struct SuiteReport {
  std::string id;
  std::string claim;
  SuiteStatus status = SuiteStatus::Pass;
  std::string reason;
  std::vector<Check> checks;
  std::vector<std::string> notes;
};

struct Conventions {
  std::string xc_sign = "+";
  std::string d1form = "1/2";
  std::string dphi_prime_sign = "not measured";
};

struct RunResult {
  std::vector<SuiteReport> suites;
  Conventions conventions;
  SamplePlan plan;
  std::vector<MetallicParams> params;
  std::size_t points = 0;

  bool all_pass() const;
};

/// All suite ids in report order.
const std::vector<std::string>& suite_ids();

/// The sample points a run uses: the manifest's plan, restricted to points
/// where every structure component and the inverse metric evaluate.
std::vector<Point> plan_points(const Manifest& m);

/// Runs the selected suites (all when empty) with the manifest's plan and
/// metallic parameters. Structure suites are skipped when the axioms fail.
/// Throws ParameterError for unknown suite ids.
RunResult run_suites(const Manifest& m, const std::vector<std::string>& selected = {});

}  // namespace metalift
