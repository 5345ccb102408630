#include "axial/spectral.hpp"

#include <algorithm>

namespace axial {

ExactMatrix ad_matrix(const AlgebraSpace& space, const AlgVector& x) {
  int n = space.dimension();
  ExactMatrix m(n, space.mode());
  for (int col = 0; col < n; ++col) {
    AlgVector image = space.multiply(x, space.basis_vector(space.label_at(col)));
    for (const auto& [label, coeff] : image.terms()) m.at(space.position(label), col) = coeff;
  }
  return m;
}

const EigenPair* Eigendecomposition::find(const Scalar& eigenvalue) const {
  for (const EigenPair& p : pairs)
    if (p.eigenvalue == eigenvalue) return &p;
  return nullptr;
}

std::vector<Scalar> Eigendecomposition::eigenvalues() const {
  std::vector<Scalar> values;
  values.reserve(pairs.size());
  for (const EigenPair& p : pairs) values.push_back(p.eigenvalue);
  return values;
}

int Eigendecomposition::total_eigenspace_dim() const {
  int total = 0;
  for (const EigenPair& p : pairs) total += p.dim();
  return total;
}

Eigendecomposition eigendecompose(const AlgebraSpace& space, const Idempotent& x,
                                  const std::optional<std::vector<Scalar>>& candidates) {
  if (x.degenerate)
    throw std::domain_error("cannot eigendecompose the zero idempotent");

  std::vector<Scalar> values;
  if (candidates) {
    values = *candidates;
    for (const Scalar& v : values)
      if (v.mode() != space.mode()) throw mode_mismatch();
    // drop duplicates, keep first occurrence
    std::vector<Scalar> unique;
    for (const Scalar& v : values)
      if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(v);
    values = std::move(unique);
  } else {
    if (space.mode() != FieldMode::symbolic) {
      // discovery path: rational roots of the minimal polynomial
      Polynomial<Rational> mu = minimal_polynomial(ad_matrix(space, x.vector));
      for (const Rational& r : rational_roots(mu)) values.push_back(Scalar(r));
    } else {
      throw std::domain_error(
          "symbolic eigendecomposition requires candidate eigenvalues (no root discovery over "
          "the function field)");
    }
  }
  if (space.mode() == FieldMode::rational)
    std::sort(values.begin(), values.end(),
              [](const Scalar& a, const Scalar& b) { return a.rational() > b.rational(); });

  ExactMatrix ad = ad_matrix(space, x.vector);
  Eigendecomposition dec;
  dec.idempotent = x;
  dec.dimension = space.dimension();
  for (const Scalar& value : values) {
    ExactMatrix shifted = ad - ExactMatrix::identity(ad.dimension(), space.mode()).scaled(value);
    std::vector<std::vector<Scalar>> coords = linalg::kernel(shifted);
    if (coords.empty()) continue;
    EigenPair pair{value, {}};
    for (auto& c : coords) {
      AlgVector v = space.from_coords(c);
      // exactness guard: x * v = value * v
      if (!(space.multiply(x.vector, v) == v.scaled(value)))
        throw invariant_violation("kernel vector fails the eigenvector equation");
      pair.basis.push_back(std::move(v));
    }
    dec.pairs.push_back(std::move(pair));
  }
  dec.complete = dec.total_eigenspace_dim() == dec.dimension;
  return dec;
}

namespace {

std::vector<std::vector<Scalar>> coords_of(const AlgebraSpace& space,
                                           const std::vector<AlgVector>& vectors) {
  std::vector<std::vector<Scalar>> out;
  out.reserve(vectors.size());
  for (const AlgVector& v : vectors) out.push_back(space.to_coords(v));
  return out;
}

bool space_contained(const AlgebraSpace& space, const std::vector<AlgVector>* sub,
                     const std::vector<std::vector<Scalar>>& big) {
  if (!sub) return true;  // empty eigenspace
  for (const AlgVector& v : *sub)
    if (!linalg::in_span(big, space.to_coords(v), space.mode())) return false;
  return true;
}

const std::vector<AlgVector>* basis_of(const Eigendecomposition& dec, const Scalar& value) {
  const EigenPair* p = dec.find(value);
  return p ? &p->basis : nullptr;
}

}  // namespace

ContainmentReport check_containments(const AlgebraSpace& space, const Eigendecomposition& outer,
                                     const Eigendecomposition& inner, int m, int l) {
  if (!outer.complete || !inner.complete)
    throw std::domain_error("containment check requires complete eigendecompositions");
  ContainmentReport report;

  ExactMatrix ad_outer = ad_matrix(space, outer.idempotent.vector);
  ExactMatrix ad_inner = ad_matrix(space, inner.idempotent.vector);
  report.ad_maps_commute = ad_outer * ad_inner == ad_inner * ad_outer;

  Scalar one = Scalar::one(space.mode());
  Scalar zero = Scalar::zero(space.mode());
  Scalar eta_m = eta(m, space.alpha());
  Scalar eta_l = eta(l, space.alpha());

  auto coords_of_space = [&](const Eigendecomposition& dec, const Scalar& value) {
    const std::vector<AlgVector>* basis = basis_of(dec, value);
    return coords_of(space, basis ? *basis : std::vector<AlgVector>{});
  };

  // A^{id_l}_1 inside A^{id_m}_1
  report.one_in_one = space_contained(space, basis_of(inner, one), coords_of_space(outer, one));
  // A^{id_m}_0 inside A^{id_l}_0
  report.zero_in_zero = space_contained(space, basis_of(outer, zero), coords_of_space(inner, zero));
  // A^{id_m}_{eta(m)} inside A^{id_l}_0 + A^{id_l}_{eta(l)}
  {
    std::vector<AlgVector> combined;
    if (const auto* b = basis_of(inner, zero)) combined.insert(combined.end(), b->begin(), b->end());
    if (const auto* b = basis_of(inner, eta_l)) combined.insert(combined.end(), b->begin(), b->end());
    report.eta_in_zero_eta =
        space_contained(space, basis_of(outer, eta_m), coords_of(space, combined));
  }
  // hat double, consecutive embedding: eta_hat(m)-space of the outer identity
  // splits into eta(l)- and eta_hat(l)-eigenvectors of the inner one
  if (space.hat() && l == m - 1) {
    Scalar eta_hat_m = eta_hat(m, space.alpha());
    Scalar eta_hat_l = eta_hat(l, space.alpha());
    std::vector<AlgVector> combined;
    if (const auto* b = basis_of(inner, eta_l)) combined.insert(combined.end(), b->begin(), b->end());
    if (const auto* b = basis_of(inner, eta_hat_l))
      combined.insert(combined.end(), b->begin(), b->end());
    report.hat_eta = space_contained(space, basis_of(outer, eta_hat_m), coords_of(space, combined));
  }

  if (!report.passed())
    throw invariant_violation("eigenspace containment failed for nested identities (m=" +
                              std::to_string(m) + ", l=" + std::to_string(l) + ")");
  return report;
}

}  // namespace axial
