#include "metalift/metallic_scalar.hpp"

#include <cmath>
#include <ostream>

#include "metalift/errors.hpp"

namespace metalift {
namespace {

// Returns r with r² = n when n is a perfect square, -1 otherwise.
long exact_sqrt(long n) {
  if (n < 0) return -1;
  mpz_class z(n), r;
  if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return -1;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r.get_si();
}

}  // namespace

MetallicScalar::MetallicScalar(Rational a) : a_(std::move(a)) {}

MetallicScalar::MetallicScalar(Rational a, Rational b, int p, int q)
    : a_(std::move(a)), b_(std::move(b)), p_(p), q_(q) {
  if (p < 1 || q < 1) throw ParameterError("metallic parameters must satisfy p >= 1, q >= 1");
  fold_rational_sigma();
}

void MetallicScalar::fold_rational_sigma() {
  if (b_.is_zero() || p_ == 0) return;
  const long root = exact_sqrt(static_cast<long>(p_) * p_ + 4L * q_);
  if (root < 0) return;
  a_ += b_ * Rational(p_ + root, 2);
  b_ = Rational(0);
}

void MetallicScalar::adopt_field(const MetallicScalar& other) {
  if (!other.bound()) return;
  if (!bound()) {
    p_ = other.p_;
    q_ = other.q_;
    return;
  }
  if (p_ != other.p_ || q_ != other.q_) {
    throw ArithmeticError("mixing scalars from Q(sigma_" + std::to_string(p_) + "," +
                          std::to_string(q_) + ") and Q(sigma_" + std::to_string(other.p_) +
                          "," + std::to_string(other.q_) + ")");
  }
}

int MetallicScalar::sign() const {
  if (b_.is_zero()) return a_.sign();
  // value = (u + b·√D) / 2 with u = 2a + b·p, D = p² + 4q.
  const Rational u = Rational(2) * a_ + b_ * Rational(p_);
  const int su = u.sign();
  const int sb = b_.sign();
  if (su == 0) return sb;
  if (su == sb) return su;
  const Rational disc(static_cast<std::int64_t>(p_) * p_ + 4LL * q_);
  const Rational lhs = u * u;
  const Rational rhs = b_ * b_ * disc;
  if (lhs == rhs) return 0;
  return lhs > rhs ? su : sb;
}

double MetallicScalar::to_double() const {
  if (b_.is_zero()) return a_.to_double();
  return a_.to_double() + b_.to_double() * sigma_value(p_, q_);
}

std::string MetallicScalar::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string out;
  if (!a_.is_zero()) out = a_.to_string();
  if (b_.sign() < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  const Rational mag = b_.abs();
  if (mag != Rational(1)) out += mag.to_string() + "*";
  out += "sigma";
  return out;
}

MetallicScalar MetallicScalar::conjugate() const {
  MetallicScalar out = *this;
  if (!b_.is_zero()) {
    out.a_ = a_ + b_ * Rational(p_);
    out.b_ = -b_;
  }
  return out;
}

Rational MetallicScalar::norm() const {
  if (b_.is_zero()) return a_ * a_;
  return a_ * a_ + a_ * b_ * Rational(p_) - b_ * b_ * Rational(q_);
}

MetallicScalar MetallicScalar::operator-() const {
  MetallicScalar out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

MetallicScalar& MetallicScalar::operator+=(const MetallicScalar& rhs) {
  adopt_field(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

MetallicScalar& MetallicScalar::operator-=(const MetallicScalar& rhs) {
  adopt_field(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

MetallicScalar& MetallicScalar::operator*=(const MetallicScalar& rhs) {
  adopt_field(rhs);
  if (b_.is_zero() && rhs.b_.is_zero()) {
    a_ *= rhs.a_;
    return *this;
  }
  // (a1 + b1σ)(a2 + b2σ) with σ² = pσ + q.
  const Rational bb = b_ * rhs.b_;
  Rational a = a_ * rhs.a_ + bb * Rational(q_);
  Rational b = a_ * rhs.b_ + b_ * rhs.a_ + bb * Rational(p_);
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

MetallicScalar& MetallicScalar::operator/=(const MetallicScalar& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  adopt_field(rhs);
  if (rhs.b_.is_zero()) {
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    return *this;
  }
  const Rational n = rhs.norm();
  if (n.is_zero()) throw ArithmeticError("division by an element of zero norm");
  *this *= rhs.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

MetallicScalar MetallicScalar::pow(int exponent) const {
  if (exponent < 0) return MetallicScalar(1) / pow(-exponent);
  if (b_.is_zero()) {
    MetallicScalar out = *this;
    out.a_ = a_.pow(exponent);
    return out;
  }
  MetallicScalar result(1);
  MetallicScalar base = *this;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    base *= base;
  }
  return result;
}

bool operator==(const MetallicScalar& x, const MetallicScalar& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  if (x.b_.is_zero()) return true;
  return x.p_ == y.p_ && x.q_ == y.q_;
}

MetallicScalar sigma(int p, int q) {
  if (p < 1 || q < 1) throw ParameterError("sigma requires p >= 1 and q >= 1");
  return MetallicScalar(Rational(0), Rational(1), p, q);
}

double sigma_value(int p, int q) {
  const double pd = p;
  return (pd + std::sqrt(pd * pd + 4.0 * q)) / 2.0;
}

std::ostream& operator<<(std::ostream& os, const MetallicScalar& s) { return os << s.to_string(); }

}  // namespace metalift
