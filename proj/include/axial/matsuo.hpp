#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "axial/root_system.hpp"
#include "axial/scalar.hpp"

namespace axial {

// Basis label: a transposition index plus a sign. The plain algebra uses
// only '+' labels; the hat double has an independent '-' copy of the basis.
struct BasisLabel {
  int index = 0;
  bool minus = false;

  bool operator==(const BasisLabel& o) const = default;
  bool operator<(const BasisLabel& o) const {
    if (minus != o.minus) return !minus;
    return index < o.index;
  }
};

class AlgebraSpace;

// Sparse vector over the algebra basis; zero coefficients are never stored.
class AlgVector {
 public:
  AlgVector() : mode_(FieldMode::rational) {}
  explicit AlgVector(FieldMode mode) : mode_(mode) {}

  FieldMode mode() const { return mode_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisLabel, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const BasisLabel& label) const;

  void add_term(const BasisLabel& label, const Scalar& coeff);

  AlgVector operator-() const;
  friend AlgVector operator+(const AlgVector& a, const AlgVector& b);
  friend AlgVector operator-(const AlgVector& a, const AlgVector& b);
  AlgVector scaled(const Scalar& factor) const;
  bool operator==(const AlgVector& o) const;

 private:
  FieldMode mode_;
  std::map<BasisLabel, Scalar> terms_;
};

enum class Provenance { axis, subalgebra_identity, coset_axis, user };

// An algebra element verified to square to itself at construction.
struct Idempotent {
  AlgVector vector;
  Provenance provenance = Provenance::user;
  bool degenerate = true;  // the zero vector: representable but not an axis
};

// The Matsuo algebra of a transposition set: basis indexed by the
// transpositions (doubled when hat is set), commutative product and bilinear
// form determined by the commuting structure and the parameter alpha.
class AlgebraSpace {
 public:
  static AlgebraSpace construct(std::shared_ptr<const TranspositionSet> transpositions,
                                Scalar alpha, bool hat);

  const TranspositionSet& transpositions() const { return *transpositions_; }
  std::shared_ptr<const TranspositionSet> transpositions_ptr() const { return transpositions_; }
  bool hat() const { return hat_; }
  const Scalar& alpha() const { return alpha_; }
  FieldMode mode() const { return mode_; }
  int dimension() const;

  BasisLabel label_at(int position) const;
  int position(const BasisLabel& label) const;
  std::string label_string(const BasisLabel& label) const;
  BasisLabel label_from_string(const std::string& text) const;

  AlgVector zero_vector() const { return AlgVector(mode_); }
  AlgVector basis_vector(const BasisLabel& label) const;
  std::vector<Scalar> to_coords(const AlgVector& v) const;
  AlgVector from_coords(const std::vector<Scalar>& coords) const;

  AlgVector multiply(const AlgVector& u, const AlgVector& v) const;
  Scalar gram(const AlgVector& u, const AlgVector& v) const;
  Scalar central_charge(const AlgVector& x) const;

  // The single-axis idempotent d^rho (always the '+' copy).
  Idempotent axis(int transposition_index) const;
  // Identity of the subalgebra spanned by a conjugation-closed regular
  // subset E of transpositions: (1/(1 + alpha*k/2)) * sum of E.
  Idempotent subalgebra_identity(const std::vector<int>& subset) const;
  Idempotent full_identity() const;
  // id_E - id_F for nested subsets F within E.
  Idempotent coset_axis(const std::vector<int>& outer, const std::vector<int>& inner) const;
  Idempotent make_idempotent(const AlgVector& v, Provenance provenance = Provenance::user) const;

 private:
  AlgebraSpace() = default;

  std::shared_ptr<const TranspositionSet> transpositions_;
  bool hat_ = false;
  Scalar alpha_;
  Scalar half_alpha_;
  FieldMode mode_ = FieldMode::rational;
};

// Coset-axis eigenvalue functions eta(m) = alpha*m / (2 + 2*alpha*(m-2))
// and the hat-double variant eta_hat(m) = alpha*(m-1) / (1 + alpha*(m-2)).
Scalar eta(int m, const Scalar& alpha);
Scalar eta_hat(int m, const Scalar& alpha);

// Samples random triples and checks <uv,w> = <u,vw>; an empirical report,
// not an asserted law of the algebra.
bool frobenius_holds_on_sample(const AlgebraSpace& space, int trials, unsigned seed);

}  // namespace axial
