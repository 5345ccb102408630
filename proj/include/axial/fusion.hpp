#pragma once

#include <set>
#include <string>
#include <vector>

#include "axial/spectral.hpp"

namespace axial {

// Empirical or reference fusion rules: a finite eigenvalue list and a
// symmetric map taking each pair of eigenvalues to a subset of them.
class FusionTable {
 public:
  explicit FusionTable(std::vector<Scalar> eigenvalues);

  int size() const { return static_cast<int>(eigenvalues_.size()); }
  const std::vector<Scalar>& eigenvalues() const { return eigenvalues_; }
  int index_of(const Scalar& value) const;  // -1 if absent

  void set_entry(int i, int j, std::set<int> values);
  void add_to_entry(int i, int j, int value);
  const std::set<int>& entry(int i, int j) const;
  std::set<Scalar> entry_values(const Scalar& a, const Scalar& b) const;

  // Entrywise containment after matching eigenvalues by value; false when
  // some eigenvalue of *this is missing from the reference.
  bool contained_in(const FusionTable& reference) const;
  bool operator==(const FusionTable& o) const;

  // Aligned text grid over the upper triangle, one row per eigenvalue.
  std::string to_text() const;

 private:
  std::vector<Scalar> eigenvalues_;
  std::vector<std::set<int>> entries_;  // triangular, index via pair_slot

  int pair_slot(int i, int j) const;
};

// Reference tables.
FusionTable phi_ass_table(FieldMode mode);
// (1, 0, alpha) with the standard Z/2-gradable rules.
FusionTable phi3_table(const Scalar& alpha);
// The five-eigenvalue coset-axis table in terms of eta(m) and eta(l).
FusionTable coset_axis_table(const Scalar& eta_m, const Scalar& eta_l, FieldMode mode);

// Empirical fusion table of a complete eigendecomposition: every product of
// basis eigenvectors is resolved exactly in the eigenbasis and the nonzero
// components are recorded.
FusionTable fusion_table(const AlgebraSpace& space, const Eigendecomposition& dec);

struct Grading {
  std::set<int> plus;   // indices into the table's eigenvalue list
  std::set<int> minus;

  bool trivial() const { return minus.empty(); }
  bool operator==(const Grading& o) const = default;
};

// All Z/2-gradings of the table, trivial one included. The eigenvalue 1 is
// pinned to the even part whenever 1*1 contains 1.
std::vector<Grading> find_z2_gradings(const FusionTable& table);

// The involution acting as +1 on even and -1 on odd eigenspaces, returned as
// a matrix on the algebra basis. Verified to be an algebra automorphism and
// an isometry of the form; failure is a hard error.
ExactMatrix miyamoto_involution(const AlgebraSpace& space, const Eigendecomposition& dec,
                                const Grading& grading);

// dim of the 1-eigenspace is exactly 1.
bool primitive(const Eigendecomposition& dec);

// For every pair c, d the Miyamoto involution of the axis d maps the axis c
// to the conjugated axis c^d (plain algebras only).
bool check_axial_representation(const AlgebraSpace& space);

}  // namespace axial
