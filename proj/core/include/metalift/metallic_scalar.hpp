#pragma once

#include <iosfwd>
#include <string>

#include "metalift/rational.hpp"

namespace metalift {

/// Element a + b·σ of the quadratic field ℚ(σ), σ the positive root of x² − p·x − q.
///
/// A scalar with p = q = 0 is a plain rational that has not been bound to a
/// field yet; it adopts the field of whatever it is combined with. Combining
/// scalars from two different fields is an error. When p² + 4q is a perfect
/// square σ is rational and the b-part is folded into a on construction, so
/// the (a, b) representation stays unique.
class MetallicScalar {
 public:
  MetallicScalar() = default;
  MetallicScalar(Rational a);  // NOLINT(google-explicit-constructor)
  MetallicScalar(std::int64_t a) : MetallicScalar(Rational(a)) {}  // NOLINT
  MetallicScalar(Rational a, Rational b, int p, int q);

  const Rational& rational_part() const { return a_; }
  const Rational& sigma_part() const { return b_; }
  int p() const { return p_; }
  int q() const { return q_; }
  bool bound() const { return p_ != 0; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  /// Exact sign of the real embedding (σ taken as the positive root).
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  /// a + b(p − σ); the other root substituted for σ.
  MetallicScalar conjugate() const;
  /// a² + abp − b²q, the product with the conjugate.
  Rational norm() const;

  MetallicScalar operator-() const;
  MetallicScalar& operator+=(const MetallicScalar& rhs);
  MetallicScalar& operator-=(const MetallicScalar& rhs);
  MetallicScalar& operator*=(const MetallicScalar& rhs);
  MetallicScalar& operator/=(const MetallicScalar& rhs);
  MetallicScalar pow(int exponent) const;
  MetallicScalar abs() const { return sign() < 0 ? -*this : *this; }

  friend MetallicScalar operator+(MetallicScalar l, const MetallicScalar& r) { return l += r; }
  friend MetallicScalar operator-(MetallicScalar l, const MetallicScalar& r) { return l -= r; }
  friend MetallicScalar operator*(MetallicScalar l, const MetallicScalar& r) { return l *= r; }
  friend MetallicScalar operator/(MetallicScalar l, const MetallicScalar& r) { return l /= r; }

  /// Componentwise; the field tags only matter when a σ-part is present.
  friend bool operator==(const MetallicScalar& x, const MetallicScalar& y);

 private:
  void adopt_field(const MetallicScalar& other);
  void fold_rational_sigma();

  Rational a_;
  Rational b_;
  int p_ = 0;
  int q_ = 0;
};

/// The metallic mean σ_{p,q} = (p + √(p² + 4q)) / 2 as the field element 0 + 1·σ.
MetallicScalar sigma(int p, int q);

/// Float value of σ_{p,q}.
double sigma_value(int p, int q);

std::ostream& operator<<(std::ostream& os, const MetallicScalar& s);

}  // namespace metalift
