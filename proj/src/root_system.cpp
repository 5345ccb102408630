#include "axial/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace axial {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  throw std::logic_error("unreachable");
}

Family family_from_string(const std::string& name) {
  if (name == "A" || name == "a") return Family::A;
  if (name == "D" || name == "d") return Family::D;
  if (name == "E" || name == "e") return Family::E;
  throw std::invalid_argument("unknown family \"" + name + "\" (expected A, D or E)");
}

void RootSystemId::validate() const {
  switch (family) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("A-type rank must be >= 1");
      return;
    case Family::D:
      if (rank < 4) throw std::invalid_argument("D-type rank must be >= 4");
      return;
    case Family::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("E-type rank must be 6, 7 or 8");
      return;
  }
}

int RootSystemId::coxeter_number() const {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::D: return 2 * rank - 2;
    case Family::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
  }
  throw std::logic_error("unreachable");
}

int RootSystemId::positive_root_count() const {
  switch (family) {
    case Family::A: return rank * (rank + 1) / 2;
    case Family::D: return rank * (rank - 1);
    case Family::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
  }
  throw std::logic_error("unreachable");
}

int RootSystemId::coordinate_dim() const {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::D: return rank;
    case Family::E: return 8;
  }
  throw std::logic_error("unreachable");
}

std::string RootSystemId::to_string() const { return family_name(family) + std::to_string(rank); }

namespace {

std::vector<int> normalize_coords(std::vector<int> coords) {
  for (int c : coords) {
    if (c > 0) break;
    if (c < 0) {
      for (int& x : coords) x = -x;
      break;
    }
  }
  return coords;
}

}  // namespace

Transposition::Transposition(std::vector<int> coords) : coords_(normalize_coords(std::move(coords))) {}

std::string Transposition::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + "]";
}

namespace {

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Bourbaki simple roots for E8, doubled so all coordinates are integral;
// E6 and E7 take the first 6 resp. 7 of them.
std::vector<std::vector<int>> e_simple_roots(int rank) {
  std::vector<std::vector<int>> simple = {
      {1, -1, -1, -1, -1, -1, -1, 1},
      {2, 2, 0, 0, 0, 0, 0, 0},
      {-2, 2, 0, 0, 0, 0, 0, 0},
      {0, -2, 2, 0, 0, 0, 0, 0},
      {0, 0, -2, 2, 0, 0, 0, 0},
      {0, 0, 0, -2, 2, 0, 0, 0},
      {0, 0, 0, 0, -2, 2, 0, 0},
      {0, 0, 0, 0, 0, -2, 2, 0},
  };
  simple.resize(rank);
  return simple;
}

std::vector<Transposition> enumerate_roots(const RootSystemId& id) {
  std::vector<Transposition> roots;
  int dim = id.coordinate_dim();
  switch (id.family) {
    case Family::A:
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
          std::vector<int> v(dim, 0);
          v[i] = 1;
          v[j] = -1;
          roots.emplace_back(std::move(v));
        }
      break;
    case Family::D:
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
          for (int sign : {-1, 1}) {
            std::vector<int> v(dim, 0);
            v[i] = 1;
            v[j] = sign;
            roots.emplace_back(std::move(v));
          }
      break;
    case Family::E: {
      // Orbit of the simple roots under the simple reflections. Doubled
      // coordinates make every true inner product 1/4 of the raw dot.
      auto simple = e_simple_roots(id.rank);
      std::set<std::vector<int>> seen(simple.begin(), simple.end());
      std::vector<std::vector<int>> queue(simple.begin(), simple.end());
      while (!queue.empty()) {
        std::vector<int> r = std::move(queue.back());
        queue.pop_back();
        for (const auto& s : simple) {
          int p = dot(r, s) / 4;
          std::vector<int> image = r;
          for (size_t k = 0; k < image.size(); ++k) image[k] -= p * s[k];
          if (seen.insert(image).second) queue.push_back(image);
        }
      }
      std::set<Transposition> positive;
      for (const auto& v : seen) positive.insert(Transposition(v));
      roots.assign(positive.begin(), positive.end());
      break;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::shared_ptr<const TranspositionSet> TranspositionSet::build(RootSystemId id) {
  id.validate();
  auto set = std::shared_ptr<TranspositionSet>(new TranspositionSet());
  set->id_ = id;
  set->pairing_scale_ = id.family == Family::E ? 4 : 1;
  set->roots_ = enumerate_roots(id);

  int n = set->size();
  if (n != id.positive_root_count())
    throw std::logic_error("root enumeration for " + id.to_string() + " produced " +
                           std::to_string(n) + " roots");

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[set->roots_[i].coords()] = i;

  set->neighbors_.assign(n, {});
  set->conj_.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int p = set->pairing(i, j);
      if (i != j && p != 0) set->neighbors_[i].push_back(j);
      std::vector<int> image = set->roots_[i].coords();
      const std::vector<int>& d = set->roots_[j].coords();
      for (size_t k = 0; k < image.size(); ++k) image[k] -= p * d[k];
      auto it = index.find(normalize_coords(std::move(image)));
      if (it == index.end()) throw std::logic_error("conjugation left the root set");
      set->conj_[i][j] = it->second;
    }
  }
  return set;
}

int TranspositionSet::index_of(const Transposition& t) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), t);
  if (it == roots_.end() || !(*it == t)) return -1;
  return static_cast<int>(it - roots_.begin());
}

int TranspositionSet::pairing(int i, int j) const {
  int raw = dot(roots_[i].coords(), roots_[j].coords());
  if (raw % pairing_scale_ != 0) throw std::logic_error("non-integral root pairing");
  return raw / pairing_scale_;
}

Transposition TranspositionSet::conjugate(const Transposition& c, const Transposition& d) const {
  int i = index_of(c), j = index_of(d);
  if (i < 0 || j < 0) throw std::invalid_argument("transposition does not belong to this set");
  return roots_[conj_[i][j]];
}

std::vector<int> TranspositionSet::parabolic_subset(const std::vector<int>& support) const {
  std::vector<bool> allowed(roots_.empty() ? 0 : roots_[0].coords().size(), false);
  for (int c : support) {
    if (c < 0 || c >= static_cast<int>(allowed.size()))
      throw std::invalid_argument("support index out of range");
    allowed[c] = true;
  }
  std::vector<int> result;
  for (int i = 0; i < size(); ++i) {
    const auto& coords = roots_[i].coords();
    bool inside = true;
    for (size_t k = 0; k < coords.size(); ++k)
      if (coords[k] != 0 && !allowed[k]) {
        inside = false;
        break;
      }
    if (inside) result.push_back(i);
  }
  return result;
}

std::optional<int> TranspositionSet::regularity_degree(const std::vector<int>& subset) const {
  if (subset.empty()) return std::nullopt;
  std::vector<bool> in(size(), false);
  for (int i : subset) in[i] = true;
  std::optional<int> degree;
  for (int i : subset) {
    int count = 0;
    for (int j : neighbors_[i])
      if (in[j]) ++count;
    if (!degree)
      degree = count;
    else if (*degree != count)
      return std::nullopt;
  }
  return degree;
}

}  // namespace axial
