#pragma once

#include <string>

#include "axial/polynomial.hpp"
#include "axial/rational.hpp"

namespace axial {

using RatPoly = Polynomial<Rational>;

// Rational function in the formal parameter over the rationals, kept in
// canonical form: numerator and denominator coprime, denominator monic,
// zero represented as 0/1.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(long long value) : num_(Rational(value)), den_(Rational(1)) {}
  RatFunc(Rational value) : num_(std::move(value)), den_(Rational(1)) {}
  RatFunc(RatPoly num) : num_(std::move(num)), den_(Rational(1)) {}
  RatFunc(RatPoly num, RatPoly den);  // reduces

  // The formal parameter itself.
  static RatFunc parameter() { return RatFunc(RatPoly::variable()); }

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational constant_value() const;  // requires is_constant()

  RatFunc operator-() const;
  RatFunc inverse() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  // canonical container ordering: lexicographic on (num, den) coefficients
  bool operator<(const RatFunc& o) const;

  // Exact specialisation of the parameter; throws on a pole.
  Rational evaluate_at(const Rational& point) const;

  // "(poly)/(poly)" with ascending powers, scaled to coprime integer
  // coefficients with a positive leading denominator coefficient.
  std::string to_string(const std::string& var = "a") const;

 private:
  RatPoly num_;
  RatPoly den_;
};

std::string ratpoly_to_string(const RatPoly& p, const std::string& var);

}  // namespace axial
