#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "metalift/metallic_scalar.hpp"

namespace metalift {

/// Coordinate on a chart of M (base, x^i) or of TM (fiber, y^i). Index is 1-based.
struct VarId {
  enum class Kind : std::uint8_t { Base, Fiber };

  Kind kind = Kind::Base;
  int index = 1;

  static VarId base(int i) { return {Kind::Base, i}; }
  static VarId fiber(int i) { return {Kind::Fiber, i}; }

  std::string name() const;
  std::uint64_t bit() const;

  friend bool operator==(const VarId&, const VarId&) = default;
};

enum class Op : std::uint8_t { Const, Var, Add, Mul, Div, Pow, Sqrt, Exp, Log, Sin, Cos };

inline constexpr int kDefaultMaxDerivativeOrder = 3;

class Expr;

struct ExprNode {
  Op op = Op::Const;
  MetallicScalar value;
  VarId var;
  int exponent = 0;
  std::vector<Expr> args;
  std::uint64_t vars = 0;      // free-variable bitmask
  bool rational = true;        // only Const/Var/Add/Mul/Div/Pow below
  std::uint8_t order = 0;      // number of symbolic differentiations applied
};

/// Immutable symbolic expression over base and fiber coordinates.
///
/// Nodes are shared; the builders below apply only local simplifications
/// (constant folding, neutral and absorbing elements, flattening of sums and
/// products), never algebraic normal forms.
class Expr {
 public:
  Expr();  // the constant 0
  Expr(MetallicScalar value);  // NOLINT(google-explicit-constructor)
  Expr(Rational value) : Expr(MetallicScalar(std::move(value))) {}  // NOLINT
  Expr(std::int64_t value) : Expr(MetallicScalar(value)) {}  // NOLINT
  Expr(int value) : Expr(static_cast<std::int64_t>(value)) {}  // NOLINT

  static Expr variable(VarId v);

  Op op() const { return node_->op; }
  const ExprNode& node() const { return *node_; }
  const ExprNode* id() const { return node_.get(); }
  const std::vector<Expr>& args() const { return node_->args; }

  bool is_constant() const { return node_->op == Op::Const; }
  bool is_zero() const { return is_constant() && node_->value.is_zero(); }
  bool is_one() const { return is_constant() && node_->value == MetallicScalar(1); }
  const MetallicScalar& constant() const { return node_->value; }
  bool is_rational() const { return node_->rational; }
  bool depends_on(VarId v) const { return (node_->vars & v.bit()) != 0; }
  std::uint64_t free_variables() const { return node_->vars; }
  int derivative_order() const { return node_->order; }

  std::string to_string() const;

 private:
  friend Expr make_node(ExprNode node);
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const ExprNode> node_;
};

Expr sum(std::vector<Expr> terms);
Expr product(std::vector<Expr> factors);
Expr quotient(const Expr& num, const Expr& den);
Expr power(const Expr& base, int exponent);
Expr sqrt(const Expr& arg);
Expr exp(const Expr& arg);
Expr log(const Expr& arg);
Expr sin(const Expr& arg);
Expr cos(const Expr& arg);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
inline Expr& operator+=(Expr& a, const Expr& b) { return a = a + b; }
inline Expr& operator-=(Expr& a, const Expr& b) { return a = a - b; }
inline Expr& operator*=(Expr& a, const Expr& b) { return a = a * b; }

/// Symbolic partial derivative ∂e/∂v.
///
/// Throws CapabilityError when the result would exceed `max_order` nested
/// differentiations of the original data.
Expr diff(const Expr& e, VarId v, int max_order = kDefaultMaxDerivativeOrder);

/// Same tree shape, operators and constants.
bool structurally_equal(const Expr& a, const Expr& b);

/// Number of distinct nodes reachable from e.
std::size_t dag_size(const Expr& e);

}  // namespace metalift
