#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace axial {

// Arbitrary-precision signed integer. Limbs are base 10^9, little-endian,
// with no trailing zero limbs; zero is the empty limb vector with sign 0.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long value);
  static BigInt from_string(std::string_view text);

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
  int signum() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  // Truncated toward zero; remainder has the sign of the dividend.
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  bool operator==(const BigInt& o) const = default;
  std::strong_ordering operator<=>(const BigInt& o) const;

  bool fits_int64() const;
  long long to_int64() const;  // throws if out of range
  std::string to_string() const;

 private:
  static constexpr uint32_t kBase = 1000000000;

  int sign_ = 0;                 // -1, 0, +1
  std::vector<uint32_t> limbs_;  // |value|, base 10^9

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::pair<std::vector<uint32_t>, std::vector<uint32_t>> divmod_mag(
      const std::vector<uint32_t>& u, const std::vector<uint32_t>& v);
};

BigInt gcd(BigInt a, BigInt b);  // nonnegative
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned exponent);

}  // namespace axial
