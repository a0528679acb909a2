#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "metalift/evaluator.hpp"
#include "metalift/rational.hpp"

namespace metalift {

class ChartedManifold;

struct SamplePlan {
  std::size_t count = 10;
  std::uint64_t seed = 20240917;
  EvalMode mode = EvalMode::Exact;
  double rel_tol = 1e-9;
  /// Closed rational intervals, one per base / fiber coordinate.
  std::vector<std::pair<Rational, Rational>> base_ranges;
  std::vector<std::pair<Rational, Rational>> fiber_ranges;
  /// Sampled coordinates are multiples of 1/denominator.
  int denominator = 4;
  /// Draws per requested point before giving up.
  std::size_t max_attempts = 1000;
};

/// Deterministic admissible points (x, y) of TM.
///
/// A base point is admissible when every domain expression is strictly
/// positive, the metric determinant does not vanish and the extra
/// expressions evaluate without a pole. Fiber points are never all zero.
std::vector<Point> sample_points(const ChartedManifold& m, const SamplePlan& plan,
                                 const std::vector<Expr>& must_evaluate = {});

}  // namespace metalift
