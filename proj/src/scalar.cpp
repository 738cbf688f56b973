#include "flatmod/scalar.hpp"

#include <cmath>
#include <ostream>

#include "flatmod/errors.hpp"

namespace flatmod {

Scalar::Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

Scalar Scalar::fraction(long p, long q, long r, long s) {
  if (q == 0 || s == 0) throw DivisionByZero("zero denominator");
  return Scalar(Rational(p, q), Rational(r, s));
}

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with 3 b^2, never equal since sqrt 3 is irrational
  return (a_ * a_ > 3 * b_ * b_) ? sa : sb;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  Rational n = norm();
  return Scalar(a_ / n, -b_ / n);
}

double Scalar::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(3.0);
}

Integer Scalar::to_integer() const {
  if (!is_integer()) throw NonIntegerInput("scalar " + to_string() + " is not an integer");
  return a_.get_num();
}

Integer Scalar::floor() const {
  if (is_rational()) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
    return q;
  }
  Integer k(std::floor(to_double()));
  while (Scalar(Rational(k)) > *this) --k;
  while (Scalar(Rational(k + 1)) <= *this) ++k;
  return k;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + 3 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero scalar");
  if (sgn(o.b_) == 0) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string irr = b_ == 1 ? "sqrt3" : (b_ == -1 ? "-sqrt3" : b_.get_str() + "*sqrt3");
  if (sgn(a_) == 0) return irr;
  return a_.get_str() + (sgn(b_) > 0 ? "+" : "") + irr;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::string rational_text(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  Rational q;
  if (q.set_str(text, 10) != 0) throw ParseError("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Scalar parse_scalar(const std::string& text) {
  auto pos = text.find("sqrt3");
  if (pos == std::string::npos) return Scalar(parse_rational(text));
  // split "<a><sign><b>*sqrt3" at the sign that starts the irrational term
  std::string head = text.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != 'e') {
      split = i;
      break;
    }
  }
  Rational a(0);
  std::string coeff = head;
  if (split != std::string::npos) {
    a = parse_rational(head.substr(0, split));
    coeff = head.substr(split);
  }
  if (!coeff.empty() && coeff[0] == '+') coeff.erase(0, 1);
  Rational b = (coeff.empty()) ? Rational(1) : (coeff == "-" ? Rational(-1) : parse_rational(coeff));
  return Scalar(a, b);
}

}  // namespace flatmod
