#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "axial/bigint.hpp"

namespace axial {

// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;  // 0
  Rational(long long value) : num_(value), den_(1) {}
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(BigInt num, BigInt den);

  // Parses "p/q" or "p".
  static Rational from_string(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one(); }
  int signum() const { return num_.signum(); }

  Rational operator-() const;
  Rational inverse() const;
  Rational abs() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  std::string to_string() const;

 private:
  BigInt num_ = BigInt();   // reduced, carries the sign
  BigInt den_ = BigInt(1);  // positive
};

}  // namespace axial
