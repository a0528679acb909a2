#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "metalift/errors.hpp"
#include "metalift/manifest.hpp"
#include "metalift/report.hpp"
#include "metalift/suites.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "1" || s == "+1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw metalift::ParameterError("bad sign '" + s + "' (use + or -)");
}

// "p:q" or "p:q:e1:e2", comma separated.
std::vector<metalift::MetallicParams> parse_pq(const std::string& list) {
  std::vector<metalift::MetallicParams> out;
  for (const auto& item : split(list, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2 && parts.size() != 4) {
      throw metalift::ParameterError("bad --pq entry '" + item + "' (expected p:q or p:q:e1:e2)");
    }
    metalift::MetallicParams p;
    try {
      p.p = std::stoi(parts[0]);
      p.q = std::stoi(parts[1]);
    } catch (const std::exception&) {
      throw metalift::ParameterError("bad --pq entry '" + item + "'");
    }
    if (parts.size() == 4) {
      p.eps1 = parse_sign(parts[2]);
      p.eps2 = parse_sign(parts[3]);
    }
    p.sigma();  // validates p, q
    out.push_back(p);
  }
  if (out.empty()) throw metalift::ParameterError("--pq needs at least one entry");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify metallic structures on the tangent bundle of a P-Sasakian manifold"};
  app.set_version_flag("--version", metalift::version());
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Parse and check a manifest");
  validate->add_option("manifest", validate_path, "Manifest JSON")->required();

  std::string verify_path, suites, mode, pq, report_path;
  std::size_t points = 0;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Run the proposition suites");
  verify->add_option("manifest", verify_path, "Manifest JSON")->required();
  auto* suites_opt = verify->add_option("--suites", suites, "Comma-separated suite ids");
  auto* points_opt = verify->add_option("--points", points, "Number of sample points")->check(CLI::PositiveNumber);
  auto* seed_opt = verify->add_option("--seed", seed, "Sampling seed");
  auto* mode_opt = verify->add_option("--mode", mode, "Arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
  auto* pq_opt = verify->add_option("--pq", pq, "Metallic parameters p:q[:e1:e2], comma-separated");
  verify->add_option("--report", report_path, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*validate) {
      const metalift::Manifest m = metalift::load_manifest(validate_path);
      std::cout << "valid: " << m.name << " (n=" << m.dimension << ", " << m.metallic.size()
                << " metallic parameter sets, sha256 " << m.sha256 << ")\n";
      return kPass;
    }

    metalift::Manifest m = metalift::load_manifest(verify_path);
    if (*points_opt) m.plan.count = points;
    if (*seed_opt) m.plan.seed = seed;
    if (*mode_opt) m.plan.mode = metalift::eval_mode_from_string(mode);
    if (*pq_opt) m.metallic = parse_pq(pq);
    std::vector<std::string> selected;
    if (*suites_opt) selected = split(suites, ',');

    const metalift::RunResult run = metalift::run_suites(m, selected);
    for (const auto& s : run.suites) {
      std::cout << metalift::to_string(s.status) << "  " << s.id;
      if (!s.reason.empty()) std::cout << "  (" << s.reason << ")";
      std::cout << "\n";
    }
    std::cout << "dPhi' sign: " << run.conventions.dphi_prime_sign << "\n";
    if (!report_path.empty()) metalift::emit_report(metalift::render_report(run, m), report_path);
    return run.all_pass() ? kPass : kFail;
  } catch (const metalift::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
