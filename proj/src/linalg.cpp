#include "axial/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace axial {

ExactMatrix::ExactMatrix(int dimension, FieldMode mode)
    : dim_(dimension), mode_(mode), entries_(dimension * dimension, Scalar::zero(mode)) {
  if (dimension <= 0) throw std::invalid_argument("matrix dimension must be positive");
}

ExactMatrix ExactMatrix::identity(int dimension, FieldMode mode) {
  ExactMatrix m(dimension, mode);
  for (int i = 0; i < dimension; ++i) m.at(i, i) = Scalar::one(mode);
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  ExactMatrix r = a;
  for (size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
  return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  ExactMatrix r = a;
  for (size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
  return r;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  ExactMatrix r(a.dim_, a.mode_);
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.dim_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

ExactMatrix ExactMatrix::scaled(const Scalar& factor) const {
  ExactMatrix r = *this;
  for (Scalar& e : r.entries_) e *= factor;
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return dim_ == o.dim_ && mode_ == o.mode_ && entries_ == o.entries_;
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector dimension mismatch");
  std::vector<Scalar> r(dim_, Scalar::zero(mode_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

namespace linalg {

std::vector<int> rref(std::vector<std::vector<Scalar>>& rows, FieldMode mode) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  size_t width = rows[0].size();
  size_t pivot_row = 0;
  for (size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
    size_t found = pivot_row;
    while (found < rows.size() && rows[found][col].is_zero()) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    Scalar inv = rows[pivot_row][col].inverse();
    for (size_t j = col; j < width; ++j) rows[pivot_row][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || rows[i][col].is_zero()) continue;
      Scalar factor = rows[i][col];
      for (size_t j = col; j < width; ++j) rows[i][j] -= factor * rows[pivot_row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++pivot_row;
  }
  (void)mode;
  return pivots;
}

std::vector<std::vector<Scalar>> kernel(const ExactMatrix& m) {
  int n = m.dimension();
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(n, Scalar::zero(m.mode())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
  std::vector<int> pivots = rref(rows, m.mode());

  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(n, Scalar::zero(m.mode()));
    v[free_col] = Scalar::one(m.mode());
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const ExactMatrix& m, const std::vector<Scalar>& rhs) {
  int n = m.dimension();
  if (static_cast<int>(rhs.size()) != n) throw std::invalid_argument("rhs dimension mismatch");
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(n + 1, Scalar::zero(m.mode())));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
    rows[i][n] = rhs[i];
  }
  std::vector<int> pivots = rref(rows, m.mode());
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // 0 = 1 row
  std::vector<Scalar> x(n, Scalar::zero(m.mode()));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][n];
  return x;
}

ExactMatrix inverse(const ExactMatrix& m) {
  int n = m.dimension();
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(2 * n, Scalar::zero(m.mode())));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
    rows[i][n + i] = Scalar::one(m.mode());
  }
  std::vector<int> pivots = rref(rows, m.mode());
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw std::domain_error("matrix is singular");
  ExactMatrix inv(n, m.mode());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = rows[i][n + j];
  return inv;
}

bool in_span(const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& v,
             FieldMode mode) {
  if (basis.empty()) {
    for (const Scalar& c : v)
      if (!c.is_zero()) return false;
    return true;
  }
  // Rank comparison: appending v must not increase the rank of the basis.
  std::vector<std::vector<Scalar>> rows = basis;
  std::vector<int> before = rref(rows, mode);
  rows.push_back(v);
  std::vector<int> after = rref(rows, mode);
  return before.size() == after.size();
}

}  // namespace linalg

Polynomial<Rational> minimal_polynomial(const ExactMatrix& m) {
  if (m.mode() != FieldMode::rational)
    throw std::domain_error("minimal polynomial discovery requires rational mode");
  int n = m.dimension();
  int flat = n * n;

  // Vectorised powers of M, reduced incrementally against earlier pivots;
  // the combination bookkeeping recovers the dependence coefficients.
  struct Row {
    std::vector<Scalar> vec;
    std::vector<Rational> combo;  // coefficients of I, M, M^2, ...
    int pivot;
  };
  std::vector<Row> rows;
  ExactMatrix power = ExactMatrix::identity(n, FieldMode::rational);
  for (int k = 0;; ++k) {
    std::vector<Scalar> vec(flat, Scalar::zero(FieldMode::rational));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) vec[i * n + j] = power.at(i, j);
    std::vector<Rational> combo(k + 1, Rational(0));
    combo[k] = Rational(1);

    for (const Row& row : rows) {
      const Scalar& c = vec[row.pivot];
      if (c.is_zero()) continue;
      Rational factor = c.rational();
      for (int t = 0; t < flat; ++t)
        if (!row.vec[t].is_zero()) vec[t] -= Scalar(factor) * row.vec[t];
      for (size_t t = 0; t < row.combo.size(); ++t)
        combo[t] -= factor * row.combo[t];
    }
    int pivot = -1;
    for (int t = 0; t < flat; ++t)
      if (!vec[t].is_zero()) {
        pivot = t;
        break;
      }
    if (pivot < 0) {
      std::vector<Rational> coeffs(combo.begin(), combo.end());
      return Polynomial<Rational>(std::move(coeffs)).monic();
    }
    Rational inv = vec[pivot].rational().inverse();
    for (int t = 0; t < flat; ++t)
      if (!vec[t].is_zero()) vec[t] = Scalar(vec[t].rational() * inv);
    for (Rational& c : combo) c *= inv;
    rows.push_back(Row{std::move(vec), std::move(combo), pivot});
    power = power * m;
  }
}

namespace {

std::vector<long long> divisors_of(long long value) {
  if (value < 0) value = -value;
  std::vector<long long> divisors{1};
  for (long long p = 2; p * p <= value; ++p) {
    if (value % p) continue;
    int e = 0;
    while (value % p == 0) {
      value /= p;
      ++e;
    }
    size_t count = divisors.size();
    long long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  if (value > 1) {
    size_t count = divisors.size();
    for (size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * value);
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial<Rational>& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;

  Polynomial<Rational> work = p;
  // factor out t^k
  while (work.coefficient(0).is_zero()) {
    roots.push_back(Rational(0));
    std::vector<Rational> shifted(work.coefficients().begin() + 1, work.coefficients().end());
    work = Polynomial<Rational>(std::move(shifted));
    if (work.degree() <= 0) break;
  }
  // the minimal polynomials seen here are squarefree, so 0 appears at most once
  std::sort(roots.begin(), roots.end(), std::greater<>());
  if (work.degree() <= 0) return roots;

  // primitive integer coefficients
  BigInt common_den(1);
  for (const Rational& c : work.coefficients()) common_den = lcm(common_den, c.den());
  std::vector<BigInt> coeffs;
  BigInt content;
  for (const Rational& c : work.coefficients()) {
    coeffs.push_back(c.num() * (common_den / c.den()));
    content = gcd(content, coeffs.back());
  }
  for (BigInt& c : coeffs) c = c / content;

  if (!coeffs.front().fits_int64() || !coeffs.back().fits_int64())
    throw std::overflow_error("rational root search: coefficients too large to factor");
  std::vector<long long> nums = divisors_of(coeffs.front().to_int64());
  std::vector<long long> dens = divisors_of(coeffs.back().to_int64());

  std::vector<Rational> found;
  size_t max_roots = static_cast<size_t>(work.degree());
  for (long long den : dens) {
    for (long long num : nums) {
      if (std::gcd(num, den) != 1) continue;  // already covered in lower terms
      for (int sign : {1, -1}) {
        Rational candidate(sign * num, den);
        if (work.evaluate(candidate).is_zero()) found.push_back(candidate);
      }
      if (found.size() == max_roots) break;
    }
    if (found.size() == max_roots) break;
  }
  std::sort(found.begin(), found.end(), std::greater<>());
  // descending with any root 0 folded in order
  std::vector<Rational> all = std::move(roots);
  all.insert(all.end(), found.begin(), found.end());
  std::sort(all.begin(), all.end(), std::greater<>());
  return all;
}

}  // namespace axial
