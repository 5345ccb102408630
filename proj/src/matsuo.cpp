#include "axial/matsuo.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace axial {

Scalar AlgVector::coefficient(const BasisLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? Scalar::zero(mode_) : it->second;
}

void AlgVector::add_term(const BasisLabel& label, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(label, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgVector AlgVector::operator-() const {
  AlgVector r(mode_);
  for (const auto& [label, coeff] : terms_) r.terms_.emplace(label, -coeff);
  return r;
}

AlgVector operator+(const AlgVector& a, const AlgVector& b) {
  AlgVector r = a;
  for (const auto& [label, coeff] : b.terms_) r.add_term(label, coeff);
  return r;
}

AlgVector operator-(const AlgVector& a, const AlgVector& b) { return a + (-b); }

AlgVector AlgVector::scaled(const Scalar& factor) const {
  AlgVector r(mode_);
  if (factor.is_zero()) return r;
  for (const auto& [label, coeff] : terms_) r.terms_.emplace(label, coeff * factor);
  return r;
}

bool AlgVector::operator==(const AlgVector& o) const {
  return mode_ == o.mode_ && terms_ == o.terms_;
}

AlgebraSpace AlgebraSpace::construct(std::shared_ptr<const TranspositionSet> transpositions,
                                     Scalar alpha, bool hat) {
  if (!transpositions) throw std::invalid_argument("null transposition set");
  if (alpha.is_zero() || alpha.is_one())
    throw std::domain_error("alpha must avoid 0 and 1 (degenerate fusion eigenvalues)");
  AlgebraSpace space;
  space.transpositions_ = std::move(transpositions);
  space.hat_ = hat;
  space.mode_ = alpha.mode();
  space.half_alpha_ = alpha / Scalar::constant(Rational(2), space.mode_);
  space.alpha_ = std::move(alpha);
  return space;
}

int AlgebraSpace::dimension() const {
  return hat_ ? 2 * transpositions_->size() : transpositions_->size();
}

BasisLabel AlgebraSpace::label_at(int position) const {
  int n = transpositions_->size();
  if (position < 0 || position >= dimension()) throw std::out_of_range("basis position");
  return position < n ? BasisLabel{position, false} : BasisLabel{position - n, true};
}

int AlgebraSpace::position(const BasisLabel& label) const {
  int n = transpositions_->size();
  if (label.index < 0 || label.index >= n) throw std::out_of_range("basis label index");
  if (label.minus && !hat_) throw std::out_of_range("'-' label in a plain algebra");
  return label.minus ? n + label.index : label.index;
}

std::string AlgebraSpace::label_string(const BasisLabel& label) const {
  return (label.minus ? "-" : "+") + transpositions_->root(label.index).to_string();
}

BasisLabel AlgebraSpace::label_from_string(const std::string& text) const {
  if (text.size() < 2 || (text[0] != '+' && text[0] != '-'))
    throw std::invalid_argument("basis label must start with '+' or '-'");
  std::vector<int> coords;
  std::string body = text.substr(1);
  if (body.front() != '[' || body.back() != ']') throw std::invalid_argument("malformed root");
  size_t pos = 1;
  while (pos < body.size() - 1) {
    size_t next = body.find(',', pos);
    if (next == std::string::npos || next > body.size() - 1) next = body.size() - 1;
    coords.push_back(std::stoi(body.substr(pos, next - pos)));
    pos = next + 1;
  }
  int index = transpositions_->index_of(Transposition(coords));
  if (index < 0) throw std::invalid_argument("root does not belong to this algebra: " + text);
  return BasisLabel{index, text[0] == '-'};
}

AlgVector AlgebraSpace::basis_vector(const BasisLabel& label) const {
  position(label);  // bounds check
  AlgVector v(mode_);
  v.add_term(label, Scalar::one(mode_));
  return v;
}

std::vector<Scalar> AlgebraSpace::to_coords(const AlgVector& v) const {
  std::vector<Scalar> coords(dimension(), Scalar::zero(mode_));
  for (const auto& [label, coeff] : v.terms()) coords[position(label)] = coeff;
  return coords;
}

AlgVector AlgebraSpace::from_coords(const std::vector<Scalar>& coords) const {
  if (static_cast<int>(coords.size()) != dimension())
    throw std::invalid_argument("coordinate vector has wrong dimension");
  AlgVector v(mode_);
  for (int k = 0; k < dimension(); ++k) v.add_term(label_at(k), coords[k]);
  return v;
}

AlgVector AlgebraSpace::multiply(const AlgVector& u, const AlgVector& v) const {
  if (u.mode() != mode_ || v.mode() != mode_) throw mode_mismatch();
  const TranspositionSet& set = *transpositions_;
  AlgVector result(mode_);
  for (const auto& [c, cu] : u.terms()) {
    for (const auto& [d, cv] : v.terms()) {
      Scalar weight = cu * cv;
      if (c.index == d.index) {
        // equal signs: an idempotent basis element; opposite signs annihilate
        if (c.minus == d.minus) result.add_term(c, weight);
        continue;
      }
      if (!set.commutes(c.index, d.index)) {
        Scalar half = weight * half_alpha_;
        result.add_term(c, half);
        result.add_term(d, half);
        result.add_term(BasisLabel{set.conjugate(c.index, d.index), c.minus != d.minus}, -half);
      }
    }
  }
  return result;
}

Scalar AlgebraSpace::gram(const AlgVector& u, const AlgVector& v) const {
  if (u.mode() != mode_ || v.mode() != mode_) throw mode_mismatch();
  const TranspositionSet& set = *transpositions_;
  Scalar total = Scalar::zero(mode_);
  for (const auto& [c, cu] : u.terms()) {
    for (const auto& [d, cv] : v.terms()) {
      if (c.index == d.index) {
        if (c.minus == d.minus) total += cu * cv;
      } else if (!set.commutes(c.index, d.index)) {
        total += cu * cv * half_alpha_;
      }
    }
  }
  return total;
}

Scalar AlgebraSpace::central_charge(const AlgVector& x) const {
  return gram(x, x) / Scalar::constant(Rational(2), mode_);
}

Idempotent AlgebraSpace::make_idempotent(const AlgVector& v, Provenance provenance) const {
  if (!(multiply(v, v) == v)) throw std::domain_error("vector is not idempotent");
  return Idempotent{v, provenance, v.is_zero()};
}

Idempotent AlgebraSpace::axis(int transposition_index) const {
  AlgVector v = basis_vector(BasisLabel{transposition_index, false});
  return make_idempotent(v, Provenance::axis);
}

Idempotent AlgebraSpace::subalgebra_identity(const std::vector<int>& subset) const {
  const TranspositionSet& set = *transpositions_;
  // identity of the trivial subalgebra
  if (subset.empty()) return make_idempotent(zero_vector(), Provenance::subalgebra_identity);
  std::vector<bool> member(set.size(), false);
  for (int i : subset) member[i] = true;
  for (int i : subset)
    for (int j : subset)
      if (!member[set.conjugate(i, j)])
        throw std::domain_error("subset is not closed under conjugation");
  auto degree = set.regularity_degree(subset);
  if (!degree)
    throw std::domain_error("noncommuting graph on the subset is not regular; no identity formula");
  Scalar denom = Scalar::one(mode_) + half_alpha_ * Scalar::constant(Rational(*degree), mode_);
  if (denom.is_zero())
    throw std::domain_error("singular alpha: 1 + alpha*k/2 vanishes for k=" +
                            std::to_string(*degree));
  Scalar coeff = denom.inverse();
  AlgVector id(mode_);
  for (int i : subset) id.add_term(BasisLabel{i, false}, coeff);
  for (int i : subset) {
    AlgVector e = basis_vector(BasisLabel{i, false});
    if (!(multiply(id, e) == e)) throw std::logic_error("constructed identity fails id*x = x");
  }
  return make_idempotent(id, Provenance::subalgebra_identity);
}

Idempotent AlgebraSpace::full_identity() const {
  std::vector<int> all(transpositions_->size());
  for (int i = 0; i < transpositions_->size(); ++i) all[i] = i;
  return subalgebra_identity(all);
}

Idempotent AlgebraSpace::coset_axis(const std::vector<int>& outer,
                                    const std::vector<int>& inner) const {
  for (int i : inner)
    if (std::find(outer.begin(), outer.end(), i) == outer.end())
      throw std::domain_error("coset axis requires nested subsets");
  Idempotent id_outer = subalgebra_identity(outer);
  Idempotent id_inner = subalgebra_identity(inner);
  AlgVector x = id_outer.vector - id_inner.vector;
  if (!multiply(x, id_inner.vector).is_zero())
    throw std::logic_error("coset axis does not annihilate the inner identity");
  return make_idempotent(x, Provenance::coset_axis);
}

Scalar eta(int m, const Scalar& alpha) {
  FieldMode mode = alpha.mode();
  Scalar num = alpha * Scalar::constant(Rational(m), mode);
  Scalar den = Scalar::constant(Rational(2), mode) +
               Scalar::constant(Rational(2), mode) * alpha * Scalar::constant(Rational(m - 2), mode);
  return num / den;
}

Scalar eta_hat(int m, const Scalar& alpha) {
  FieldMode mode = alpha.mode();
  Scalar num = alpha * Scalar::constant(Rational(m - 1), mode);
  Scalar den = Scalar::one(mode) + alpha * Scalar::constant(Rational(m - 2), mode);
  return num / den;
}

bool frobenius_holds_on_sample(const AlgebraSpace& space, int trials, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick_coeff(-3, 3);
  auto random_vector = [&] {
    AlgVector v(space.mode());
    for (int k = 0; k < space.dimension(); ++k)
      v.add_term(space.label_at(k), Scalar::constant(Rational(pick_coeff(rng)), space.mode()));
    return v;
  };
  for (int t = 0; t < trials; ++t) {
    AlgVector u = random_vector(), v = random_vector(), w = random_vector();
    if (!(space.gram(space.multiply(u, v), w) == space.gram(u, space.multiply(v, w)))) return false;
  }
  return true;
}

}  // namespace axial
