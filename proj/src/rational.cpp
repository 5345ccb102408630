#include "axial/rational.hpp"

#include <stdexcept>

namespace axial {

Rational::Rational(BigInt num, BigInt den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (den.signum() < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = gcd(num, den);
  if (!g.is_one() && !g.is_zero()) {
    num = num / g;
    den = den / g;
  }
  if (num.is_zero()) den = BigInt(1);
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational Rational::from_string(std::string_view text) {
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(text), BigInt(1));
  return Rational(BigInt::from_string(text.substr(0, slash)),
                  BigInt::from_string(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(den_, num_);
}

Rational Rational::abs() const { return signum() < 0 ? -*this : *this; }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return num_ * o.den_ <=> o.num_ * den_;
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace axial
