#include "axial/fusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace axial {

FusionTable::FusionTable(std::vector<Scalar> eigenvalues) : eigenvalues_(std::move(eigenvalues)) {
  for (size_t i = 0; i < eigenvalues_.size(); ++i)
    for (size_t j = i + 1; j < eigenvalues_.size(); ++j)
      if (eigenvalues_[i] == eigenvalues_[j])
        throw std::invalid_argument("fusion table eigenvalues must be pairwise distinct");
  entries_.assign(eigenvalues_.size() * (eigenvalues_.size() + 1) / 2, {});
}

int FusionTable::index_of(const Scalar& value) const {
  for (int i = 0; i < size(); ++i)
    if (eigenvalues_[i] == value) return i;
  return -1;
}

int FusionTable::pair_slot(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= size()) throw std::out_of_range("fusion table index");
  return j * (j + 1) / 2 + i;
}

void FusionTable::set_entry(int i, int j, std::set<int> values) {
  for (int v : values)
    if (v < 0 || v >= size()) throw std::out_of_range("fusion entry value");
  entries_[pair_slot(i, j)] = std::move(values);
}

void FusionTable::add_to_entry(int i, int j, int value) {
  if (value < 0 || value >= size()) throw std::out_of_range("fusion entry value");
  entries_[pair_slot(i, j)].insert(value);
}

const std::set<int>& FusionTable::entry(int i, int j) const { return entries_[pair_slot(i, j)]; }

std::set<Scalar> FusionTable::entry_values(const Scalar& a, const Scalar& b) const {
  int i = index_of(a), j = index_of(b);
  if (i < 0 || j < 0) throw std::invalid_argument("eigenvalue not in fusion table");
  std::set<Scalar> values;
  for (int v : entry(i, j)) values.insert(eigenvalues_[v]);
  return values;
}

bool FusionTable::contained_in(const FusionTable& reference) const {
  std::vector<int> remap(size());
  for (int i = 0; i < size(); ++i) {
    remap[i] = reference.index_of(eigenvalues_[i]);
    if (remap[i] < 0) return false;
  }
  for (int i = 0; i < size(); ++i)
    for (int j = i; j < size(); ++j) {
      const std::set<int>& ref = reference.entry(remap[i], remap[j]);
      for (int v : entry(i, j))
        if (ref.find(remap[v]) == ref.end()) return false;
    }
  return true;
}

bool FusionTable::operator==(const FusionTable& o) const {
  if (size() != o.size()) return false;
  std::vector<int> remap(size());
  for (int i = 0; i < size(); ++i) {
    remap[i] = o.index_of(eigenvalues_[i]);
    if (remap[i] < 0) return false;
  }
  for (int i = 0; i < size(); ++i)
    for (int j = i; j < size(); ++j) {
      std::set<int> mapped;
      for (int v : entry(i, j)) mapped.insert(remap[v]);
      if (mapped != o.entry(remap[i], remap[j])) return false;
    }
  return true;
}

std::string FusionTable::to_text() const {
  auto entry_text = [&](int i, int j) {
    std::string s = "{";
    bool first = true;
    for (int v : entry(i, j)) {
      if (!first) s += ", ";
      s += eigenvalues_[v].to_string();
      first = false;
    }
    return s + "}";
  };
  std::vector<std::vector<std::string>> cells(size() + 1, std::vector<std::string>(size() + 1));
  cells[0][0] = "*";
  for (int i = 0; i < size(); ++i) {
    cells[0][i + 1] = eigenvalues_[i].to_string();
    cells[i + 1][0] = eigenvalues_[i].to_string();
    for (int j = 0; j < size(); ++j) cells[i + 1][j + 1] = j >= i ? entry_text(i, j) : "";
  }
  std::vector<size_t> widths(size() + 1, 0);
  for (const auto& row : cells)
    for (int c = 0; c <= size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    for (int c = 0; c <= size(); ++c) {
      std::string cell = row[c];
      cell.resize(widths[c], ' ');
      out += cell;
      if (c < size()) out += "  ";
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }
  return out;
}

FusionTable phi_ass_table(FieldMode mode) {
  FusionTable t({Scalar::one(mode), Scalar::zero(mode)});
  t.set_entry(0, 0, {0});
  t.set_entry(1, 1, {1});
  return t;
}

FusionTable phi3_table(const Scalar& alpha) {
  FieldMode mode = alpha.mode();
  FusionTable t({Scalar::one(mode), Scalar::zero(mode), alpha});
  t.set_entry(0, 0, {0});  // 1*1 = {1}
  t.set_entry(0, 2, {2});  // 1*alpha = {alpha}
  t.set_entry(1, 1, {1});  // 0*0 = {0}
  t.set_entry(1, 2, {2});  // 0*alpha = {alpha}
  t.set_entry(2, 2, {0, 1});
  return t;
}

FusionTable coset_axis_table(const Scalar& eta_m, const Scalar& eta_l, FieldMode mode) {
  Scalar one = Scalar::one(mode), zero = Scalar::zero(mode);
  // order: 1, 0, eta(m), 1-eta(l), eta(m)-eta(l)
  FusionTable t({one, zero, eta_m, one - eta_l, eta_m - eta_l});
  t.set_entry(0, 0, {0});
  t.set_entry(0, 2, {2});
  t.set_entry(0, 3, {3});
  t.set_entry(0, 4, {4});
  t.set_entry(1, 1, {1});
  t.set_entry(1, 2, {2});
  t.set_entry(1, 3, {3});
  t.set_entry(1, 4, {4});
  t.set_entry(2, 2, {0, 1, 2});
  t.set_entry(2, 3, {4});
  t.set_entry(2, 4, {3, 4});
  t.set_entry(3, 3, {0, 1, 3});
  t.set_entry(3, 4, {2, 4});
  t.set_entry(4, 4, {0, 1, 2, 3, 4});
  return t;
}

namespace {

struct EigenbasisResolver {
  std::vector<int> block_start;
  std::vector<int> block_of_column;
  ExactMatrix inverse_basis;

  EigenbasisResolver(const AlgebraSpace& space, const Eigendecomposition& dec)
      : inverse_basis(1, space.mode()) {
    int n = space.dimension();
    ExactMatrix basis(n, space.mode());
    int col = 0;
    for (size_t b = 0; b < dec.pairs.size(); ++b) {
      block_start.push_back(col);
      for (const AlgVector& v : dec.pairs[b].basis) {
        std::vector<Scalar> coords = space.to_coords(v);
        for (int row = 0; row < n; ++row) basis.at(row, col) = coords[row];
        block_of_column.push_back(static_cast<int>(b));
        ++col;
      }
    }
    if (col != n)
      throw std::invalid_argument("eigendecomposition does not span the algebra");
    inverse_basis = linalg::inverse(basis);
  }

  // indices of eigenvalue blocks with a nonzero component in v
  std::set<int> blocks_of(const AlgebraSpace& space, const AlgVector& v) const {
    std::vector<Scalar> c = inverse_basis.apply(space.to_coords(v));
    std::set<int> blocks;
    for (size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) blocks.insert(block_of_column[k]);
    return blocks;
  }
};

}  // namespace

FusionTable fusion_table(const AlgebraSpace& space, const Eigendecomposition& dec) {
  if (!dec.complete) throw std::domain_error("fusion table requires a complete eigendecomposition");
  EigenbasisResolver resolver(space, dec);
  FusionTable table(dec.eigenvalues());
  for (size_t i = 0; i < dec.pairs.size(); ++i)
    for (size_t j = i; j < dec.pairs.size(); ++j)
      for (const AlgVector& u : dec.pairs[i].basis)
        for (const AlgVector& v : dec.pairs[j].basis) {
          AlgVector product = space.multiply(u, v);
          if (product.is_zero()) continue;
          for (int block : resolver.blocks_of(space, product))
            table.add_to_entry(static_cast<int>(i), static_cast<int>(j), block);
        }
  return table;
}

namespace {

bool grading_valid(const FusionTable& table, const Grading& grading) {
  auto sign_of = [&](int idx) { return grading.plus.count(idx) ? +1 : -1; };
  for (int i = 0; i < table.size(); ++i)
    for (int j = i; j < table.size(); ++j) {
      int product_sign = sign_of(i) * sign_of(j);
      for (int v : table.entry(i, j))
        if (sign_of(v) != product_sign) return false;
    }
  return true;
}

}  // namespace

std::vector<Grading> find_z2_gradings(const FusionTable& table) {
  int n = table.size();
  // pin the eigenvalue 1 to the even part when 1*1 contains 1
  int pinned = -1;
  for (int i = 0; i < n; ++i)
    if (table.eigenvalues()[i].is_one() && table.entry(i, i).count(i)) {
      pinned = i;
      break;
    }
  std::vector<int> free_indices;
  for (int i = 0; i < n; ++i)
    if (i != pinned) free_indices.push_back(i);

  std::vector<Grading> gradings;
  for (unsigned mask = 0; mask < (1u << free_indices.size()); ++mask) {
    Grading g;
    if (pinned >= 0) g.plus.insert(pinned);
    for (size_t b = 0; b < free_indices.size(); ++b)
      (mask >> b & 1 ? g.minus : g.plus).insert(free_indices[b]);
    if (grading_valid(table, g)) gradings.push_back(std::move(g));
  }
  return gradings;
}

ExactMatrix miyamoto_involution(const AlgebraSpace& space, const Eigendecomposition& dec,
                                const Grading& grading) {
  if (!dec.complete)
    throw std::domain_error("Miyamoto involution requires a complete eigendecomposition");
  int n = space.dimension();
  ExactMatrix basis(n, space.mode());
  std::vector<Scalar> signs;
  int col = 0;
  for (size_t b = 0; b < dec.pairs.size(); ++b) {
    Scalar sign = grading.minus.count(static_cast<int>(b)) ? -Scalar::one(space.mode())
                                                           : Scalar::one(space.mode());
    for (const AlgVector& v : dec.pairs[b].basis) {
      std::vector<Scalar> coords = space.to_coords(v);
      for (int row = 0; row < n; ++row) basis.at(row, col) = coords[row];
      signs.push_back(sign);
      ++col;
    }
  }
  if (col != n) throw std::domain_error("eigendecomposition does not span the algebra");
  ExactMatrix signed_basis = basis;
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) signed_basis.at(r, c) *= signs[c];
  ExactMatrix tau = signed_basis * linalg::inverse(basis);

  if (!(tau * tau == ExactMatrix::identity(n, space.mode())))
    throw invariant_violation("Miyamoto map does not square to the identity");
  // automorphism and isometry, quantified over basis pairs
  std::vector<std::vector<Scalar>> images(n);
  std::vector<AlgVector> image_vectors;
  for (int c = 0; c < n; ++c) {
    std::vector<Scalar> e(n, Scalar::zero(space.mode()));
    e[c] = Scalar::one(space.mode());
    images[c] = tau.apply(e);
    image_vectors.push_back(space.from_coords(images[c]));
  }
  for (int i = 0; i < n; ++i) {
    AlgVector ei = space.basis_vector(space.label_at(i));
    for (int j = i; j < n; ++j) {
      AlgVector ej = space.basis_vector(space.label_at(j));
      AlgVector lhs = space.from_coords(tau.apply(space.to_coords(space.multiply(ei, ej))));
      AlgVector rhs = space.multiply(image_vectors[i], image_vectors[j]);
      if (!(lhs == rhs))
        throw invariant_violation("Miyamoto map fails to be an algebra automorphism");
      if (!(space.gram(image_vectors[i], image_vectors[j]) == space.gram(ei, ej)))
        throw invariant_violation("Miyamoto map fails to be a form isometry");
    }
  }
  return tau;
}

bool primitive(const Eigendecomposition& dec) {
  if (!dec.complete) throw std::domain_error("primitivity requires a complete eigendecomposition");
  for (const EigenPair& p : dec.pairs)
    if (p.eigenvalue.is_one()) return p.dim() == 1;
  return false;
}

bool check_axial_representation(const AlgebraSpace& space) {
  if (space.hat()) throw std::domain_error("axial representation check applies to plain algebras");
  const TranspositionSet& set = space.transpositions();
  int n = set.size();
  std::vector<Scalar> candidates = {Scalar::one(space.mode()), Scalar::zero(space.mode()),
                                    space.alpha()};
  for (int d = 0; d < n; ++d) {
    Eigendecomposition dec = eigendecompose(space, space.axis(d), candidates);
    if (!dec.complete) return false;
    FusionTable table = fusion_table(space, dec);
    if (!table.contained_in(phi3_table(space.alpha()))) return false;
    Grading grading;
    for (int b = 0; b < table.size(); ++b)
      (table.eigenvalues()[b] == space.alpha() ? grading.minus : grading.plus).insert(b);
    if (!grading_valid(table, grading)) return false;
    ExactMatrix tau = miyamoto_involution(space, dec, grading);
    for (int c = 0; c < n; ++c) {
      int target = set.conjugate(c, d);
      for (int row = 0; row < n; ++row) {
        const Scalar& value = tau.at(row, c);
        if (row == target ? !value.is_one() : !value.is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace axial
