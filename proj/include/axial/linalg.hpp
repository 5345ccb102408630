#pragma once

#include <optional>
#include <vector>

#include "axial/polynomial.hpp"
#include "axial/rational.hpp"
#include "axial/scalar.hpp"

namespace axial {

// Dense square matrix of scalars sharing one field mode.
class ExactMatrix {
 public:
  ExactMatrix(int dimension, FieldMode mode);
  static ExactMatrix identity(int dimension, FieldMode mode);

  int dimension() const { return dim_; }
  FieldMode mode() const { return mode_; }
  const Scalar& at(int row, int col) const { return entries_[row * dim_ + col]; }
  Scalar& at(int row, int col) { return entries_[row * dim_ + col]; }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix scaled(const Scalar& factor) const;
  bool operator==(const ExactMatrix& o) const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  int dim_;
  FieldMode mode_;
  std::vector<Scalar> entries_;
};

// Row echelon machinery shared by kernel, solving and inversion. Pivoting
// always takes the first nonzero entry in column order, so results are
// deterministic for a fixed basis order.
namespace linalg {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(std::vector<std::vector<Scalar>>& rows, FieldMode mode);

// Basis of the null space in reduced echelon form, one vector per free
// column, ordered by free column index.
std::vector<std::vector<Scalar>> kernel(const ExactMatrix& m);

// Solve M x = rhs exactly; nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const ExactMatrix& m, const std::vector<Scalar>& rhs);

// Inverse; throws std::domain_error when singular.
ExactMatrix inverse(const ExactMatrix& m);

// Whether v lies in the span of the given vectors.
bool in_span(const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& v,
             FieldMode mode);

}  // namespace linalg

// Monic annihilating polynomial of least degree, located via the first
// linear dependence among I, M, M^2, ... (rational mode only).
Polynomial<Rational> minimal_polynomial(const ExactMatrix& m);

// All rational roots of a rational-coefficient polynomial, descending.
std::vector<Rational> rational_roots(const Polynomial<Rational>& p);

}  // namespace axial
