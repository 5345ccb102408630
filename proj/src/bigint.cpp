#include "axial/bigint.hpp"

#include <numeric>
#include <stdexcept>

namespace axial {

namespace {
constexpr uint32_t kBase = 1000000000;
constexpr long long kInt64SafeMax = 9223372036854775807LL;
}  // namespace

BigInt::BigInt(long long value) {
  if (value == 0) return;
  sign_ = value > 0 ? 1 : -1;
  // avoid overflow on LLONG_MIN by working with unsigned magnitude
  unsigned long long mag = value > 0 ? static_cast<unsigned long long>(value)
                                     : 0ULL - static_cast<unsigned long long>(value);
  while (mag > 0) {
    limbs_.push_back(static_cast<uint32_t>(mag % kBase));
    mag /= kBase;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("BigInt: empty string");
  int sign = 1;
  size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    sign = text[0] == '-' ? -1 : 1;
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("BigInt: no digits");
  for (size_t i = pos; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("BigInt: invalid digit in \"" + std::string(text) + "\"");

  BigInt r;
  size_t n = text.size();
  for (size_t end = n; end > pos;) {
    size_t begin = end >= pos + 9 ? end - 9 : pos;
    uint32_t limb = 0;
    for (size_t i = begin; i < end; ++i) limb = limb * 10 + static_cast<uint32_t>(text[i] - '0');
    r.limbs_.push_back(limb);
    end = begin;
  }
  r.sign_ = sign;
  r.trim();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  const std::vector<uint32_t>& lo = a.size() >= b.size() ? b : a;
  const std::vector<uint32_t>& hi = a.size() >= b.size() ? a : b;
  std::vector<uint32_t> r;
  r.reserve(hi.size() + 1);
  uint32_t carry = 0;
  for (size_t i = 0; i < hi.size(); ++i) {
    uint32_t sum = hi[i] + carry;
    if (i < lo.size()) sum += lo[i];
    if (sum >= kBase) {
      sum -= kBase;
      carry = 1;
    } else {
      carry = 0;
    }
    r.push_back(sum);
  }
  if (carry) r.push_back(carry);
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r;
  r.reserve(a.size());
  int32_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (cur < 0) {
      cur += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.push_back(static_cast<uint32_t>(cur));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = r[k] + carry;
      r[k] = static_cast<uint32_t>(cur % kBase);
      carry = cur / kBase;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Schoolbook long division, one base-10^9 digit of quotient at a time.
// The digit is found by binary search; slow but simple, and the fast
// int64 path in divmod() keeps this off the hot paths.
std::pair<std::vector<uint32_t>, std::vector<uint32_t>> BigInt::divmod_mag(
    const std::vector<uint32_t>& u, const std::vector<uint32_t>& v) {
  if (v.empty()) throw std::domain_error("division by zero");
  if (cmp_mag(u, v) < 0) return {{}, u};

  std::vector<uint32_t> quotient(u.size(), 0);
  std::vector<uint32_t> rem;  // running remainder, little-endian
  for (size_t pos = u.size(); pos-- > 0;) {
    // rem = rem * base + u[pos]
    rem.insert(rem.begin(), u[pos]);
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (cmp_mag(rem, v) < 0) continue;
    uint32_t lo = 1, hi = kBase - 1, digit = 1;
    while (lo <= hi) {
      uint32_t mid = lo + (hi - lo) / 2;
      if (cmp_mag(mul_mag(v, {mid}), rem) <= 0) {
        digit = mid;
        lo = mid + 1;
      } else {
        hi = mid - 1;
      }
    }
    rem = sub_mag(rem, mul_mag(v, {digit}));
    quotient[pos] = digit;
  }
  while (!quotient.empty() && quotient.back() == 0) quotient.pop_back();
  return {quotient, rem};
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.sign_ = a.sign_;
    r.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
  } else {
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.sign_ = a.sign_;
      r.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
    } else {
      r.sign_ = b.sign_;
      r.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
    }
  }
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  if (a.fits_int64() && b.fits_int64()) {
    long long x = a.to_int64(), y = b.to_int64();
    // |x*y| <= 2^62 is safe
    if ((x < 0 ? -x : x) <= 2147483647LL && (y < 0 ? -y : y) <= 2147483647LL)
      return BigInt(x * y);
  }
  BigInt r;
  r.sign_ = a.sign_ * b.sign_;
  r.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
  return r;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
  if (b.sign_ == 0) throw std::domain_error("division by zero");
  if (a.fits_int64() && b.fits_int64()) {
    long long x = a.to_int64(), y = b.to_int64();
    return {BigInt(x / y), BigInt(x % y)};
  }
  auto [q, r] = divmod_mag(a.limbs_, b.limbs_);
  BigInt quo, rem;
  quo.limbs_ = std::move(q);
  quo.sign_ = quo.limbs_.empty() ? 0 : a.sign_ * b.sign_;
  rem.limbs_ = std::move(r);
  rem.sign_ = rem.limbs_.empty() ? 0 : a.sign_;
  return {quo, rem};
}

BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).first; }
BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).second; }

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ <=> o.sign_;
  int c = cmp_mag(limbs_, o.limbs_);
  if (sign_ < 0) c = -c;
  return c <=> 0;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() < 3) return true;
  if (limbs_.size() > 3) return false;
  // 3 limbs: value = l2*10^18 + rest, int64 max ~ 9.22*10^18
  unsigned long long hi = limbs_[2];
  if (hi > 9) return false;
  unsigned long long mag =
      hi * 1000000000000000000ULL + static_cast<unsigned long long>(limbs_[1]) * kBase + limbs_[0];
  return mag <= static_cast<unsigned long long>(kInt64SafeMax);
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt does not fit in int64");
  unsigned long long mag = 0;
  for (size_t i = limbs_.size(); i-- > 0;) mag = mag * kBase + limbs_[i];
  return sign_ < 0 ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::string s = sign_ < 0 ? "-" : "";
  s += std::to_string(limbs_.back());
  char buf[10];
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
    s += buf;
  }
  return s;
}

BigInt gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  if (a.fits_int64() && b.fits_int64()) return BigInt(std::gcd(a.to_int64(), b.to_int64()));
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
    if (a.fits_int64() && b.fits_int64()) return BigInt(std::gcd(a.to_int64(), b.to_int64()));
  }
  return a;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  return (a / gcd(a, b) * b).abs();
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt result(1), b = base;
  while (exponent) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace axial
