#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "axial/linalg.hpp"
#include "axial/matsuo.hpp"

namespace axial {

struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

// Matrix of left-multiplication by x on the algebra basis.
ExactMatrix ad_matrix(const AlgebraSpace& space, const AlgVector& x);

struct EigenPair {
  Scalar eigenvalue;
  std::vector<AlgVector> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

// Eigenspace decomposition of ad(x) for an idempotent x, with a completeness
// certificate: complete when the eigenspace dimensions sum to dim A.
struct Eigendecomposition {
  Idempotent idempotent;
  std::vector<EigenPair> pairs;
  bool complete = false;
  int dimension = 0;

  const EigenPair* find(const Scalar& eigenvalue) const;
  std::vector<Scalar> eigenvalues() const;
  int total_eigenspace_dim() const;
};

// Rational mode without candidates discovers the spectrum from the minimal
// polynomial; symbolic mode requires candidate eigenvalues. Incompleteness
// is returned, never silently accepted; the zero idempotent is rejected.
Eigendecomposition eigendecompose(const AlgebraSpace& space, const Idempotent& x,
                                  const std::optional<std::vector<Scalar>>& candidates = {});

struct ContainmentReport {
  bool ad_maps_commute = false;
  bool one_in_one = false;        // 1-eigenspace of inner id inside that of outer id
  bool zero_in_zero = false;      // 0-eigenspace of outer id inside that of inner id
  bool eta_in_zero_eta = false;   // eta(m)-space of outer inside 0+eta(l) of inner
  std::optional<bool> hat_eta;    // hat mode, l = m-1: eta_hat(m) inside eta(l)+eta_hat(l)
  std::string details;

  bool passed() const {
    return ad_maps_commute && one_in_one && zero_in_zero && eta_in_zero_eta &&
           (!hat_eta.has_value() || *hat_eta);
  }
};

// Eigenspace containments between the identities of nested parabolic
// subalgebras of sizes m and l. Throws invariant_violation on failure.
ContainmentReport check_containments(const AlgebraSpace& space, const Eigendecomposition& outer,
                                     const Eigendecomposition& inner, int m, int l);

}  // namespace axial
