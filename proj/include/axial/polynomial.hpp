#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace axial {

// Dense univariate polynomial over a field F. Coefficients are stored in
// ascending order of degree with no trailing zeros; the zero polynomial has
// an empty coefficient vector and degree -1.
template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(F constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<F> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static Polynomial variable() { return Polynomial(std::vector<F>{F(0), F(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == F(1); }
  const std::vector<F>& coefficients() const { return coeffs_; }
  F coefficient(size_t power) const { return power < coeffs_.size() ? coeffs_[power] : F(0); }
  const F& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (F& c : r.coeffs_) c = -c;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<F> c(std::max(a.coeffs_.size(), b.coeffs_.size()), F(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<F> c(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }

  Polynomial scaled(const F& factor) const {
    Polynomial r;
    if (factor.is_zero()) return r;
    r.coeffs_ = coeffs_;
    for (F& c : r.coeffs_) c = c * factor;
    return r;
  }

  // Euclidean division; requires nonzero divisor.
  static std::pair<Polynomial, Polynomial> divmod(Polynomial num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial quotient;
    quotient.coeffs_.assign(
        num.degree() >= den.degree() ? num.degree() - den.degree() + 1 : 0, F(0));
    F lead_inv = F(1) / den.leading();
    while (!num.is_zero() && num.degree() >= den.degree()) {
      int shift = num.degree() - den.degree();
      F factor = num.leading() * lead_inv;
      quotient.coeffs_[shift] = factor;
      // num -= factor * x^shift * den
      for (size_t i = 0; i < den.coeffs_.size(); ++i)
        num.coeffs_[i + shift] = num.coeffs_[i + shift] - factor * den.coeffs_[i];
      num.trim();
    }
    quotient.trim();
    return {quotient, num};
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(F(1) / leading());
  }

  F evaluate(const F& point) const {
    F acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
    return acc;
  }

 private:
  std::vector<F> coeffs_;

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
};

// Monic gcd via the Euclidean algorithm; each remainder is renormalised to
// keep coefficient growth in check. gcd(0, 0) = 0.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    Polynomial<F> r = Polynomial<F>::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace axial
