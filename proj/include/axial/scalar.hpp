#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "axial/ratfunc.hpp"
#include "axial/rational.hpp"

namespace axial {

enum class FieldMode { rational, symbolic };

struct mode_mismatch : std::domain_error {
  mode_mismatch() : std::domain_error("field mode mismatch") {}
};

// A field element: either a rational number or a rational function in the
// formal parameter. Arithmetic never mixes the two modes.
class Scalar {
 public:
  Scalar() : value_(Rational()) {}
  Scalar(Rational r) : value_(std::move(r)) {}
  Scalar(RatFunc f) : value_(std::move(f)) {}

  static Scalar zero(FieldMode mode) { return constant(Rational(0), mode); }
  static Scalar one(FieldMode mode) { return constant(Rational(1), mode); }
  static Scalar constant(const Rational& value, FieldMode mode) {
    if (mode == FieldMode::rational) return Scalar(value);
    return Scalar(RatFunc(value));
  }
  // The formal parameter as a symbolic scalar.
  static Scalar parameter() { return Scalar(RatFunc::parameter()); }

  FieldMode mode() const {
    return std::holds_alternative<Rational>(value_) ? FieldMode::rational : FieldMode::symbolic;
  }
  bool is_zero() const;
  bool is_one() const;

  const Rational& rational() const;  // requires rational mode
  const RatFunc& ratfunc() const;    // requires symbolic mode

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  // Equality requires matching modes (canonical forms compare structurally).
  bool operator==(const Scalar& o) const;
  // Canonical container ordering: numeric for rationals, coefficient order
  // for rational functions; rational mode sorts before symbolic.
  bool operator<(const Scalar& o) const;

  // Specialise a symbolic scalar at a rational parameter value; the identity
  // on rational-mode scalars.
  Rational evaluate_at(const Rational& point) const;

  std::string to_string() const;

 private:
  std::variant<Rational, RatFunc> value_;

  static void check_same_mode(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode()) throw mode_mismatch();
  }
};

}  // namespace axial
