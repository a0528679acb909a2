#pragma once

#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "metalift/expr.hpp"

namespace metalift {

enum class EvalMode { Exact, Float };

std::string to_string(EvalMode mode);
EvalMode eval_mode_from_string(const std::string& s);

/// Exact coordinates of a point of M (fiber empty) or of TM.
struct Point {
  std::vector<MetallicScalar> base;
  std::vector<MetallicScalar> fiber;

  const MetallicScalar& at(VarId v) const;
  std::string to_string() const;
};

namespace detail {
template <class T>
struct ScalarOps;
}

/// Evaluates expressions at one fixed point, memoizing shared subtrees.
///
/// T is MetallicScalar (exact mode; rational expressions only) or double.
template <class T>
class Evaluator {
 public:
  explicit Evaluator(const Point& point);

  T operator()(const Expr& e);

 private:
  T compute(const Expr& e);

  std::vector<T> base_;
  std::vector<T> fiber_;
  std::unordered_map<const ExprNode*, T> cache_;
};

extern template class Evaluator<MetallicScalar>;
extern template class Evaluator<double>;

using Value = std::variant<MetallicScalar, double>;

/// One-shot evaluation. Throws ModeError for non-rational input in exact mode
/// and EvaluationError on division by zero or a domain error at the point.
Value eval(const Expr& e, const Point& point, EvalMode mode);

double to_double(const Value& v);

}  // namespace metalift
