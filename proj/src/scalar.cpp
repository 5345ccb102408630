#include "axial/scalar.hpp"

namespace axial {

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

bool Scalar::is_one() const {
  return std::visit([](const auto& v) { return v.is_one(); }, value_);
}

const Rational& Scalar::rational() const {
  if (mode() != FieldMode::rational) throw mode_mismatch();
  return std::get<Rational>(value_);
}

const RatFunc& Scalar::ratfunc() const {
  if (mode() != FieldMode::symbolic) throw mode_mismatch();
  return std::get<RatFunc>(value_);
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(-v); }, value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (mode() == FieldMode::rational) return Scalar(std::get<Rational>(value_).inverse());
  return Scalar(std::get<RatFunc>(value_).inverse());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::check_same_mode(a, b);
  if (a.mode() == FieldMode::rational) return Scalar(a.rational() + b.rational());
  return Scalar(a.ratfunc() + b.ratfunc());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::check_same_mode(a, b);
  if (a.mode() == FieldMode::rational) return Scalar(a.rational() - b.rational());
  return Scalar(a.ratfunc() - b.ratfunc());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::check_same_mode(a, b);
  if (a.mode() == FieldMode::rational) return Scalar(a.rational() * b.rational());
  return Scalar(a.ratfunc() * b.ratfunc());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar::check_same_mode(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.mode() == FieldMode::rational) return Scalar(a.rational() / b.rational());
  return Scalar(a.ratfunc() / b.ratfunc());
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_mode(*this, o);
  if (mode() == FieldMode::rational) return rational() == o.rational();
  return ratfunc() == o.ratfunc();
}

bool Scalar::operator<(const Scalar& o) const {
  if (mode() != o.mode()) return mode() == FieldMode::rational;
  if (mode() == FieldMode::rational) return rational() < o.rational();
  return ratfunc() < o.ratfunc();
}

Rational Scalar::evaluate_at(const Rational& point) const {
  if (mode() == FieldMode::rational) return rational();
  return ratfunc().evaluate_at(point);
}

std::string Scalar::to_string() const {
  if (mode() == FieldMode::rational) return rational().to_string();
  return ratfunc().to_string();
}

}  // namespace axial
