#include "metalift/parser.hpp"

#include <cctype>
#include <string>

#include "metalift/errors.hpp"

namespace metalift {
namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  Expr run() {
    Expr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_sum() {
    Expr lhs = parse_product();
    std::vector<Expr> terms{lhs};
    for (;;) {
      if (accept('+')) {
        terms.push_back(parse_product());
      } else if (accept('-')) {
        terms.push_back(-parse_product());
      } else {
        break;
      }
    }
    return terms.size() == 1 ? terms.front() : sum(std::move(terms));
  }

  Expr parse_product() {
    Expr lhs = parse_unary();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = lhs * parse_unary();
      } else if (accept('/')) {
        Expr rhs = parse_unary();
        if (rhs.is_zero()) {
          pos_ = at;
          fail("division by the constant 0");
        }
        lhs = lhs / rhs;
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return -parse_unary();
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t at = pos_;
    Expr exponent = parse_unary();
    if (!exponent.is_constant() || !exponent.constant().is_rational() ||
        !exponent.constant().rational_part().is_integer()) {
      pos_ = at;
      fail("exponent must be an integer constant");
    }
    const mpz_class k = exponent.constant().rational_part().numerator();
    if (!k.fits_sint_p()) {
      pos_ = at;
      fail("exponent out of range");
    }
    if (base.is_zero() && k < 0) {
      pos_ = at;
      fail("zero raised to a negative power");
    }
    return power(base, static_cast<int>(k.get_si()));
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not supported");
      return Expr(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if ((word[0] == 'x' || word[0] == 'y') && word.size() > 1 &&
          word.find_first_not_of("0123456789", 1) == std::string_view::npos) {
        const long idx = std::stol(std::string(word.substr(1)));
        if (idx < 1 || idx > n_) {
          pos_ = start;
          fail("unknown variable '" + std::string(word) + "' (dimension " + std::to_string(n_) + ")");
        }
        const int i = static_cast<int>(idx);
        return Expr::variable(word[0] == 'x' ? VarId::base(i) : VarId::fiber(i));
      }
      Expr (*fn)(const Expr&) = nullptr;
      if (word == "sqrt") fn = &metalift::sqrt;
      if (word == "exp") fn = &metalift::exp;
      if (word == "log") fn = &metalift::log;
      if (word == "sin") fn = &metalift::sin;
      if (word == "cos") fn = &metalift::cos;
      if (fn == nullptr) {
        pos_ = start;
        fail("unknown identifier '" + std::string(word) + "'");
      }
      if (!accept('(')) fail("expected '(' after " + std::string(word));
      Expr arg = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return fn(arg);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

// Printing precedence: 1 sum, 2 product/quotient, 3 unary minus, 4 power, 5 atom.
struct Printed {
  std::string text;
  int prec;
};

std::string wrap(const Printed& p, int need) { return p.prec < need ? "(" + p.text + ")" : p.text; }

Printed print(const Expr& e);

bool is_negative_term(const Expr& e) {
  if (e.is_constant()) return e.constant().is_rational() && e.constant().sign() < 0;
  return e.op() == Op::Mul && e.args().front().is_constant() &&
         e.args().front().constant().is_rational() && e.args().front().constant().sign() < 0;
}

Printed print_constant(const MetallicScalar& c) {
  if (!c.is_rational()) return {"(" + c.to_string() + ")", 5};
  const Rational& r = c.rational_part();
  if (r.sign() < 0) return {r.to_string(), r.is_integer() ? 3 : 2};
  return {r.to_string(), r.is_integer() ? 5 : 2};
}

Printed print(const Expr& e) {
  const auto& a = e.args();
  switch (e.op()) {
    case Op::Const:
      return print_constant(e.constant());
    case Op::Var:
      return {e.node().var.name(), 5};
    case Op::Add: {
      std::string out = wrap(print(a[0]), 1);
      for (std::size_t i = 1; i < a.size(); ++i) {
        if (is_negative_term(a[i])) {
          out += " - " + wrap(print(-a[i]), 2);
        } else {
          out += " + " + wrap(print(a[i]), 2);
        }
      }
      return {out, 1};
    }
    case Op::Mul: {
      std::size_t first = 0;
      std::string out;
      if (a[0].is_constant() && a[0].constant() == MetallicScalar(-1)) {
        out = "-";
        first = 1;
        out += wrap(print(a[1]), 4);
        first = 2;
      } else {
        out = wrap(print(a[0]), 2);
        first = 1;
      }
      for (std::size_t i = first; i < a.size(); ++i) out += "*" + wrap(print(a[i]), 4);
      return {out, 2};
    }
    case Op::Div:
      return {wrap(print(a[0]), 2) + "/" + wrap(print(a[1]), 4), 2};
    case Op::Pow: {
      const int k = e.node().exponent;
      const std::string ex = k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k);
      return {wrap(print(a[0]), 5) + "^" + ex, 4};
    }
    case Op::Sqrt:
      return {"sqrt(" + print(a[0]).text + ")", 5};
    case Op::Exp:
      return {"exp(" + print(a[0]).text + ")", 5};
    case Op::Log:
      return {"log(" + print(a[0]).text + ")", 5};
    case Op::Sin:
      return {"sin(" + print(a[0]).text + ")", 5};
    case Op::Cos:
      return {"cos(" + print(a[0]).text + ")", 5};
  }
  return {"?", 5};
}

}  // namespace

Expr parse(std::string_view text, int n) { return Parser(text, n).run(); }

std::string Expr::to_string() const { return print(*this).text; }

}  // namespace metalift
