#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace flatmod {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact element a + b*sqrt(3) of the quadratic field Q(sqrt 3).
///
/// Both components are kept canonical (lowest terms, positive denominator),
/// so structural equality is field equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational a, Rational b = 0);

  /// p/q + (r/s) sqrt 3.
  static Scalar fraction(long p, long q, long r = 0, long s = 1);
  static Scalar sqrt3() { return Scalar(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt3_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_integer() const { return is_rational() && a_.get_den() == 1; }

  /// Sign of the real number a + b sqrt 3, decided exactly.
  int sign() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  /// a - b sqrt 3.
  Scalar conjugate() const { return Scalar(a_, -b_); }
  /// a^2 - 3 b^2.
  Rational norm() const { return a_ * a_ - 3 * b_ * b_; }
  Scalar inverse() const;
  double to_double() const;
  /// Integer value; throws NonIntegerInput unless is_integer().
  Integer to_integer() const;
  /// Largest integer not exceeding the value, decided exactly.
  Integer floor() const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Order of the real numbers (not the lexicographic component order).
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Human readable form, e.g. "1/2", "-1/3*sqrt3", "1/2+1/2*sqrt3".
  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses the to_string() form and plain rationals.
Scalar parse_scalar(const std::string& text);

/// Canonical "p/q" text of a rational (denominator always present).
std::string rational_text(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace flatmod
