#include "metalift/assessment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "metalift/errors.hpp"

namespace metalift {
namespace {

std::string format_double(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

struct Comparison {
  bool zero;
  double magnitude;
  std::string text;
};

Comparison compare(const MetallicScalar& l, const MetallicScalar& r, double) {
  MetallicScalar d = l - r;
  return {d.is_zero(), std::fabs(d.to_double()), d.to_string()};
}

Comparison compare(double l, double r, double tol) {
  const double d = l - r;
  const double scale = std::max({1.0, std::fabs(l), std::fabs(r)});
  return {std::fabs(d) <= tol * scale, std::fabs(d), format_double(d)};
}

}  // namespace

Assessor::Assessor(std::vector<Point> points, EvalMode mode, double rel_tol)
    : points_(std::move(points)), mode_(mode), rel_tol_(rel_tol) {
  if (points_.empty()) throw ParameterError("an assessor needs at least one sample point");
  if (!(rel_tol_ > 0.0)) throw ParameterError("relative tolerance must be positive");
}

Verdict Assessor::assess(std::string id, const std::vector<Claim>& claims, Expect expect,
                         std::size_t max_witnesses) const {
  for (const auto& c : claims) {
    if (c.lhs.size() != c.rhs.size()) throw ShapeError("claim '" + c.label + "' has mismatched sides");
  }
  if (mode_ == EvalMode::Exact) return run<MetallicScalar>(std::move(id), claims, expect, max_witnesses);
  return run<double>(std::move(id), claims, expect, max_witnesses);
}

template <class T>
Verdict Assessor::run(std::string id, const std::vector<Claim>& claims, Expect expect,
                      std::size_t max_witnesses) const {
  Verdict v;
  v.id = std::move(id);
  v.expect = expect;
  bool have_max = false;
  for (std::size_t pi = 0; pi < points_.size(); ++pi) {
    Evaluator<T> ev(points_[pi]);
    for (const auto& claim : claims) {
      bool any_nonzero = false;
      std::size_t first_nonzero = 0;
      Comparison first_cmp{true, 0.0, "0"};
      for (std::size_t k = 0; k < claim.lhs.size(); ++k) {
        if constexpr (std::is_same_v<T, MetallicScalar>) {
          if (!claim.lhs[k].is_rational() || !claim.rhs[k].is_rational()) {
            throw ModeError("claim '" + claim.label + "' is not rational; use float mode");
          }
        }
        Comparison cmp = compare(ev(claim.lhs[k]), ev(claim.rhs[k]), rel_tol_);
        ++v.comparisons;
        if (!have_max || cmp.magnitude > v.max_residual_f) {
          v.max_residual_f = cmp.magnitude;
          v.max_residual = cmp.text;
          have_max = true;
        }
        if (!cmp.zero && !any_nonzero) {
          any_nonzero = true;
          first_nonzero = k;
          first_cmp = cmp;
        }
        if (expect == Expect::Equal && !cmp.zero) {
          v.holds = false;
          if (v.witnesses.size() < max_witnesses) {
            v.witnesses.push_back({pi, points_[pi].to_string(), claim.label, k, cmp.text, cmp.magnitude});
          }
        }
      }
      if (expect == Expect::Differ) {
        if (!any_nonzero) {
          v.holds = false;
          if (v.witnesses.size() < max_witnesses) {
            v.witnesses.push_back({pi, points_[pi].to_string(), claim.label + " (vanishes)", 0, "0", 0.0});
          }
        } else if (v.witnesses.size() < max_witnesses && v.holds) {
          v.witnesses.push_back(
              {pi, points_[pi].to_string(), claim.label, first_nonzero, first_cmp.text, first_cmp.magnitude});
        }
      }
    }
  }
  return v;
}

std::vector<std::vector<bool>> Assessor::agreement(const std::vector<Claim>& claims) const {
  if (mode_ == EvalMode::Exact) return agreement_in<MetallicScalar>(claims);
  return agreement_in<double>(claims);
}

template <class T>
std::vector<std::vector<bool>> Assessor::agreement_in(const std::vector<Claim>& claims) const {
  std::vector<std::vector<bool>> out;
  for (const auto& point : points_) {
    Evaluator<T> ev(point);
    std::vector<bool> row;
    for (const auto& claim : claims) {
      bool all = true;
      for (std::size_t k = 0; k < claim.lhs.size() && all; ++k) {
        all = compare(ev(claim.lhs[k]), ev(claim.rhs[k]), rel_tol_).zero;
      }
      row.push_back(all);
    }
    out.push_back(std::move(row));
  }
  return out;
}

Verdict combine(std::string id, const std::vector<Verdict>& parts) {
  Verdict out;
  out.id = std::move(id);
  for (const auto& p : parts) {
    out.holds = out.holds && p.holds;
    out.comparisons += p.comparisons;
    // Nonzero-expected parts carry evidence, not residuals.
    if (p.expect == Expect::Equal && p.max_residual_f > out.max_residual_f) {
      out.max_residual_f = p.max_residual_f;
      out.max_residual = p.max_residual;
    }
  }
  // Failing parts first so the witnesses explain a failure.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& p : parts) {
      if ((pass == 0) == p.holds) continue;
      for (const auto& w : p.witnesses) {
        if (out.witnesses.size() >= 4) break;
        Witness tagged = w;
        tagged.label = p.id + ": " + w.label;
        out.witnesses.push_back(std::move(tagged));
      }
    }
  }
  return out;
}

}  // namespace metalift
