#include "metalift/evaluator.hpp"

#include <cmath>
#include <sstream>

#include "metalift/errors.hpp"

namespace metalift {

std::string to_string(EvalMode mode) { return mode == EvalMode::Exact ? "exact" : "float"; }

EvalMode eval_mode_from_string(const std::string& s) {
  if (s == "exact") return EvalMode::Exact;
  if (s == "float") return EvalMode::Float;
  throw ParameterError("unknown evaluation mode '" + s + "'");
}

const MetallicScalar& Point::at(VarId v) const {
  const auto& coords = v.kind == VarId::Kind::Base ? base : fiber;
  if (v.index < 1 || static_cast<std::size_t>(v.index) > coords.size()) {
    throw EvaluationError("point has no coordinate " + v.name());
  }
  return coords[static_cast<std::size_t>(v.index - 1)];
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < base.size(); ++i) os << (i ? ", " : "") << "x" << i + 1 << "=" << base[i];
  for (std::size_t i = 0; i < fiber.size(); ++i) os << ", y" << i + 1 << "=" << fiber[i];
  os << ")";
  return os.str();
}

namespace detail {

template <>
struct ScalarOps<MetallicScalar> {
  static MetallicScalar from(const MetallicScalar& s) { return s; }
  static bool is_zero(const MetallicScalar& s) { return s.is_zero(); }
  static MetallicScalar function(Op op, const MetallicScalar&) {
    throw ModeError("exact evaluation of a non-rational node (op " + std::to_string(static_cast<int>(op)) + ")");
  }
};

template <>
struct ScalarOps<double> {
  static double from(const MetallicScalar& s) { return s.to_double(); }
  static bool is_zero(double d) { return d == 0.0; }
  static double function(Op op, double x) {
    switch (op) {
      case Op::Sqrt:
        if (x < 0) throw EvaluationError("sqrt of a negative value");
        return std::sqrt(x);
      case Op::Exp:
        return std::exp(x);
      case Op::Log:
        if (x <= 0) throw EvaluationError("log of a non-positive value");
        return std::log(x);
      case Op::Sin:
        return std::sin(x);
      case Op::Cos:
        return std::cos(x);
      default:
        throw EvaluationError("not a function node");
    }
  }
};

}  // namespace detail

template <class T>
Evaluator<T>::Evaluator(const Point& point) {
  for (const auto& c : point.base) base_.push_back(detail::ScalarOps<T>::from(c));
  for (const auto& c : point.fiber) fiber_.push_back(detail::ScalarOps<T>::from(c));
}

template <class T>
T Evaluator<T>::operator()(const Expr& e) {
  if (auto it = cache_.find(e.id()); it != cache_.end()) return it->second;
  T value = compute(e);
  cache_.emplace(e.id(), value);
  return value;
}

template <class T>
T Evaluator<T>::compute(const Expr& e) {
  using Ops = detail::ScalarOps<T>;
  const auto& a = e.args();
  switch (e.op()) {
    case Op::Const:
      return Ops::from(e.constant());
    case Op::Var: {
      const VarId v = e.node().var;
      const auto& coords = v.kind == VarId::Kind::Base ? base_ : fiber_;
      if (static_cast<std::size_t>(v.index) > coords.size()) {
        throw EvaluationError("point has no coordinate " + v.name());
      }
      return coords[static_cast<std::size_t>(v.index - 1)];
    }
    case Op::Add: {
      T acc = (*this)(a[0]);
      for (std::size_t i = 1; i < a.size(); ++i) acc += (*this)(a[i]);
      return acc;
    }
    case Op::Mul: {
      T acc = (*this)(a[0]);
      for (std::size_t i = 1; i < a.size(); ++i) {
        if (Ops::is_zero(acc)) return acc;
        acc *= (*this)(a[i]);
      }
      return acc;
    }
    case Op::Div: {
      T den = (*this)(a[1]);
      if (Ops::is_zero(den)) throw EvaluationError("division by zero in " + e.to_string());
      T num = (*this)(a[0]);
      return num / den;
    }
    case Op::Pow: {
      T base = (*this)(a[0]);
      const int k = e.node().exponent;
      if (k < 0 && Ops::is_zero(base)) throw EvaluationError("zero raised to a negative power");
      if constexpr (std::is_same_v<T, double>) {
        return std::pow(base, k);
      } else {
        return base.pow(k);
      }
    }
    default:
      return Ops::function(e.op(), (*this)(a[0]));
  }
}

template class Evaluator<MetallicScalar>;
template class Evaluator<double>;

Value eval(const Expr& e, const Point& point, EvalMode mode) {
  if (mode == EvalMode::Exact) {
    if (!e.is_rational()) throw ModeError("exact evaluation requires a rational expression");
    return Evaluator<MetallicScalar>(point)(e);
  }
  return Evaluator<double>(point)(e);
}

double to_double(const Value& v) {
  return std::visit(
      [](const auto& x) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, double>) {
          return x;
        } else {
          return x.to_double();
        }
      },
      v);
}

}  // namespace metalift
