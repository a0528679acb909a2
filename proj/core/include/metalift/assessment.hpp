#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "metalift/evaluator.hpp"

namespace metalift {

/// Vector-valued symbolic statement lhs = rhs (or lhs ≠ rhs), checked pointwise.
struct Claim {
  std::string label;
  std::vector<Expr> lhs;
  std::vector<Expr> rhs;

  static Claim scalar(std::string label, Expr lhs, Expr rhs) {
    return Claim{std::move(label), {std::move(lhs)}, {std::move(rhs)}};
  }
};

enum class Expect {
  Equal,   // every component agrees at every point
  Differ,  // at every point some component disagrees
};

struct Witness {
  std::size_t point_index = 0;
  std::string point;
  std::string label;
  std::size_t component = 0;
  std::string value;  // lhs − rhs, exact string or %.17g
  double value_f = 0.0;
};

struct Verdict {
  std::string id;
  Expect expect = Expect::Equal;
  bool holds = true;
  std::string max_residual = "0";
  double max_residual_f = 0.0;
  std::size_t comparisons = 0;
  std::vector<Witness> witnesses;
};

/// Evaluates claims at a fixed set of sample points in one arithmetic mode.
///
/// Exact mode uses an exact zero test. Float mode treats |lhs − rhs| as zero
/// when it is at most rel_tol · max(1, |lhs|, |rhs|).
class Assessor {
 public:
  Assessor(std::vector<Point> points, EvalMode mode, double rel_tol = 1e-9);

  Verdict assess(std::string id, const std::vector<Claim>& claims, Expect expect = Expect::Equal,
                 std::size_t max_witnesses = 3) const;

  /// For each point and claim: true when every component of the claim agrees.
  std::vector<std::vector<bool>> agreement(const std::vector<Claim>& claims) const;

  const std::vector<Point>& points() const { return points_; }
  EvalMode mode() const { return mode_; }
  double rel_tol() const { return rel_tol_; }

  /// Same sample set, other arithmetic.
  Assessor with_mode(EvalMode mode) const { return Assessor(points_, mode, rel_tol_); }

 private:
  template <class T>
  std::vector<std::vector<bool>> agreement_in(const std::vector<Claim>& claims) const;
  template <class T>
  Verdict run(std::string id, const std::vector<Claim>& claims, Expect expect, std::size_t max_witnesses) const;

  std::vector<Point> points_;
  EvalMode mode_;
  double rel_tol_;
};

/// Conjunction of verdicts; the id is given, the worst residual and the first
/// witnesses are carried over.
Verdict combine(std::string id, const std::vector<Verdict>& parts);

}  // namespace metalift
