#include "metalift/expr.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "metalift/errors.hpp"

namespace metalift {

std::string VarId::name() const {
  return (kind == Kind::Base ? "x" : "y") + std::to_string(index);
}

std::uint64_t VarId::bit() const {
  const int slot = (kind == Kind::Base ? 0 : 32) + index - 1;
  return std::uint64_t{1} << slot;
}

Expr make_node(ExprNode node) {
  for (const auto& a : node.args) {
    node.vars |= a.node().vars;
    node.rational = node.rational && a.node().rational;
    node.order = std::max(node.order, a.node().order);
  }
  switch (node.op) {
    case Op::Var:
      node.vars |= node.var.bit();
      break;
    case Op::Sqrt:
    case Op::Exp:
    case Op::Log:
    case Op::Sin:
    case Op::Cos:
      node.rational = false;
      break;
    default:
      break;
  }
  return Expr(std::make_shared<const ExprNode>(std::move(node)));
}

namespace {

Expr with_order(const Expr& e, int order) {
  if (e.derivative_order() >= order || e.is_constant()) return e;
  ExprNode copy = e.node();
  copy.order = static_cast<std::uint8_t>(order);
  return make_node(std::move(copy));
}

Expr unary(Op op, const Expr& arg) {
  ExprNode n;
  n.op = op;
  n.args = {arg};
  return make_node(std::move(n));
}

}  // namespace

Expr::Expr() : Expr(MetallicScalar(0)) {}

Expr::Expr(MetallicScalar value) {
  ExprNode n;
  n.op = Op::Const;
  n.value = std::move(value);
  node_ = make_node(std::move(n)).node_;
}

Expr Expr::variable(VarId v) {
  if (v.index < 1 || v.index > 32) throw ParameterError("variable index out of range: " + v.name());
  ExprNode n;
  n.op = Op::Var;
  n.var = v;
  return make_node(std::move(n));
}

Expr sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  flat.reserve(terms.size());
  MetallicScalar constant(0);
  int order = 0;
  for (auto& t : terms) {
    order = std::max(order, t.derivative_order());
    if (t.is_constant()) {
      constant += t.constant();
    } else if (t.op() == Op::Add) {
      for (const auto& inner : t.args()) {
        if (inner.is_constant()) {
          constant += inner.constant();
        } else {
          flat.push_back(inner);
        }
      }
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (!constant.is_zero()) flat.emplace_back(constant);
  if (flat.empty()) return Expr(0);
  if (flat.size() == 1) return with_order(flat.front(), order);
  ExprNode n;
  n.op = Op::Add;
  n.args = std::move(flat);
  n.order = static_cast<std::uint8_t>(order);
  return make_node(std::move(n));
}

Expr product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  flat.reserve(factors.size());
  MetallicScalar constant(1);
  int order = 0;
  for (auto& f : factors) {
    order = std::max(order, f.derivative_order());
    if (f.is_constant()) {
      constant *= f.constant();
    } else if (f.op() == Op::Mul) {
      for (const auto& inner : f.args()) {
        if (inner.is_constant()) {
          constant *= inner.constant();
        } else {
          flat.push_back(inner);
        }
      }
    } else {
      flat.push_back(std::move(f));
    }
    if (constant.is_zero()) return Expr(0);
  }
  if (flat.empty()) return Expr(constant);
  if (constant != MetallicScalar(1)) flat.insert(flat.begin(), Expr(constant));
  if (flat.size() == 1) return with_order(flat.front(), order);
  ExprNode n;
  n.op = Op::Mul;
  n.args = std::move(flat);
  n.order = static_cast<std::uint8_t>(order);
  return make_node(std::move(n));
}

Expr quotient(const Expr& num, const Expr& den) {
  if (den.is_zero()) throw ArithmeticError("symbolic division by the constant 0");
  if (num.is_zero()) return Expr(0);
  if (den.is_constant()) return product({Expr(MetallicScalar(1) / den.constant()), num});
  ExprNode n;
  n.op = Op::Div;
  n.args = {num, den};
  return make_node(std::move(n));
}

Expr power(const Expr& base, int exponent) {
  if (exponent == 0) return Expr(1);
  if (exponent == 1) return base;
  if (base.is_constant()) return Expr(base.constant().pow(exponent));
  ExprNode n;
  n.op = Op::Pow;
  n.exponent = exponent;
  n.args = {base};
  return make_node(std::move(n));
}

Expr sqrt(const Expr& arg) {
  if (arg.is_zero()) return Expr(0);
  if (arg.is_one()) return Expr(1);
  return unary(Op::Sqrt, arg);
}

Expr exp(const Expr& arg) {
  if (arg.is_zero()) return Expr(1);
  return unary(Op::Exp, arg);
}

Expr log(const Expr& arg) {
  if (arg.is_one()) return Expr(0);
  return unary(Op::Log, arg);
}

Expr sin(const Expr& arg) {
  if (arg.is_zero()) return Expr(0);
  return unary(Op::Sin, arg);
}

Expr cos(const Expr& arg) {
  if (arg.is_zero()) return Expr(1);
  return unary(Op::Cos, arg);
}

Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return sum({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return quotient(a, b); }
Expr operator-(const Expr& a) { return product({Expr(-1), a}); }

namespace {

class Differentiator {
 public:
  Differentiator(VarId v, int max_order) : v_(v), max_order_(max_order) {}

  Expr operator()(const Expr& e) {
    if (!e.depends_on(v_)) return Expr(0);
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    Expr d = compute(e);
    memo_.emplace(e.id(), d);
    return d;
  }

 private:
  Expr compute(const Expr& e) {
    const auto& a = e.args();
    switch (e.op()) {
      case Op::Const:
        return Expr(0);
      case Op::Var:
        return Expr(1);
      case Op::Add: {
        std::vector<Expr> terms;
        for (const auto& t : a) terms.push_back((*this)(t));
        return sum(std::move(terms));
      }
      case Op::Mul: {
        std::vector<Expr> terms;
        for (std::size_t i = 0; i < a.size(); ++i) {
          Expr di = (*this)(a[i]);
          if (di.is_zero()) continue;
          std::vector<Expr> factors = a;
          factors[i] = di;
          terms.push_back(product(std::move(factors)));
        }
        return sum(std::move(terms));
      }
      case Op::Div: {
        const Expr& num = a[0];
        const Expr& den = a[1];
        Expr dn = (*this)(num);
        if (!den.depends_on(v_)) return quotient(dn, den);
        Expr dd = (*this)(den);
        return quotient(dn * den - num * dd, power(den, 2));
      }
      case Op::Pow: {
        const int k = e.node().exponent;
        return product({Expr(k), power(a[0], k - 1), (*this)(a[0])});
      }
      case Op::Sqrt:
        return quotient((*this)(a[0]), product({Expr(2), e}));
      case Op::Exp:
        return product({e, (*this)(a[0])});
      case Op::Log:
        return quotient((*this)(a[0]), a[0]);
      case Op::Sin:
        return product({cos(a[0]), (*this)(a[0])});
      case Op::Cos:
        return product({Expr(-1), sin(a[0]), (*this)(a[0])});
    }
    throw EvaluationError("unknown expression node");
  }

  VarId v_;
  int max_order_;
  std::unordered_map<const ExprNode*, Expr> memo_;
};

}  // namespace

Expr diff(const Expr& e, VarId v, int max_order) {
  if (!e.depends_on(v)) return Expr(0);
  const int order = e.derivative_order() + 1;
  if (order > max_order) {
    throw CapabilityError("derivative order " + std::to_string(order) + " exceeds the cap of " +
                          std::to_string(max_order));
  }
  return with_order(Differentiator(v, max_order)(e), order);
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.id() == b.id()) return true;
  const auto& na = a.node();
  const auto& nb = b.node();
  if (na.op != nb.op || na.args.size() != nb.args.size()) return false;
  switch (na.op) {
    case Op::Const:
      return na.value == nb.value;
    case Op::Var:
      return na.var == nb.var;
    case Op::Pow:
      if (na.exponent != nb.exponent) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < na.args.size(); ++i) {
    if (!structurally_equal(na.args[i], nb.args[i])) return false;
  }
  return true;
}

std::size_t dag_size(const Expr& e) {
  std::unordered_set<const ExprNode*> seen;
  std::vector<Expr> stack{e};
  while (!stack.empty()) {
    Expr cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur.id()).second) continue;
    for (const auto& a : cur.args()) stack.push_back(a);
  }
  return seen.size();
}

}  // namespace metalift
