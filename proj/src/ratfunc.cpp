#include "axial/ratfunc.hpp"

#include <stdexcept>

namespace axial {

RatFunc::RatFunc(RatPoly num, RatPoly den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) {
    num_ = RatPoly();
    den_ = RatPoly(Rational(1));
    return;
  }
  RatPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = RatPoly::divmod(num, g).first;
    den = RatPoly::divmod(den, g).first;
  }
  Rational lead_inv = den.leading().inverse();
  num_ = num.scaled(lead_inv);
  den_ = den.scaled(lead_inv);
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("rational function is not constant");
  return num_.coefficient(0);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool RatFunc::operator<(const RatFunc& o) const {
  const auto &a = num_.coefficients(), &b = o.num_.coefficients();
  if (a != b)
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  const auto &c = den_.coefficients(), &d = o.den_.coefficients();
  return std::lexicographical_compare(c.begin(), c.end(), d.begin(), d.end());
}

Rational RatFunc::evaluate_at(const Rational& point) const {
  Rational den_value = den_.evaluate(point);
  if (den_value.is_zero())
    throw std::domain_error("pole of rational function at " + point.to_string());
  return num_.evaluate(point) / den_value;
}

std::string ratpoly_to_string(const RatPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (size_t k = 0; k < p.coefficients().size(); ++k) {
    const Rational& c = p.coefficients()[k];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.signum() < 0) s += "-";
      first = false;
    } else {
      s += c.signum() < 0 ? " - " : " + ";
    }
    if (k == 0) {
      s += mag.to_string();
    } else {
      if (!mag.is_one()) s += mag.to_string() + "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

std::string RatFunc::to_string(const std::string& var) const {
  // Display form clears coefficient denominators: scale numerator and
  // denominator to integer coefficients with overall content 1 and a
  // positive denominator leading coefficient.
  BigInt common_den(1);
  for (const Rational& c : num_.coefficients()) common_den = lcm(common_den, c.den());
  for (const Rational& c : den_.coefficients()) common_den = lcm(common_den, c.den());
  BigInt content;
  auto accumulate_content = [&](const RatPoly& p) {
    for (const Rational& c : p.coefficients()) {
      if (c.is_zero()) continue;
      content = gcd(content, c.num() * (common_den / c.den()));
    }
  };
  accumulate_content(num_);
  accumulate_content(den_);
  if (content.is_zero()) content = BigInt(1);
  Rational scale(common_den, content);
  return "(" + ratpoly_to_string(num_.scaled(scale), var) + ")/(" +
         ratpoly_to_string(den_.scaled(scale), var) + ")";
}

}  // namespace axial
