#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "axial/scalar.hpp"

namespace axial {

enum class Family { A, D, E };

std::string family_name(Family f);
Family family_from_string(const std::string& name);

struct RootSystemId {
  Family family;
  int rank;

  void validate() const;  // A: rank >= 1, D: rank >= 4, E: rank in {6,7,8}
  int coxeter_number() const;
  // Every transposition has exactly 2h-4 noncommuting partners.
  int regularity() const { return 2 * coxeter_number() - 4; }
  int positive_root_count() const;
  // Dimension of the ambient coordinate space (A_n uses n+1 coordinates).
  int coordinate_dim() const;
  std::string to_string() const;
};

// A transposition, identified with a positive root. Coordinates are
// integers; E-type roots are stored doubled so that the spinor roots stay
// integral (their true inner products carry a factor 1/4).
class Transposition {
 public:
  explicit Transposition(std::vector<int> coords);

  const std::vector<int>& coords() const { return coords_; }
  bool operator==(const Transposition& o) const = default;
  bool operator<(const Transposition& o) const { return coords_ < o.coords_; }

  std::string to_string() const;  // "[1,-1,0,0]"

 private:
  std::vector<int> coords_;  // first nonzero coordinate positive
};

// The full set of transpositions of a simply-laced Weyl group, realised as
// the positive roots in canonical (lexicographic) order, together with the
// noncommuting relation and the conjugation table.
class TranspositionSet {
 public:
  static std::shared_ptr<const TranspositionSet> build(RootSystemId id);

  const RootSystemId& id() const { return id_; }
  int size() const { return static_cast<int>(roots_.size()); }
  const Transposition& root(int i) const { return roots_[i]; }
  const std::vector<Transposition>& roots() const { return roots_; }
  int index_of(const Transposition& t) const;  // -1 if absent

  // Normalised inner product of roots (each root has norm 2).
  int pairing(int i, int j) const;
  bool commutes(int i, int j) const { return i != j && pairing(i, j) == 0; }
  // c^d: reflect root i in root j and renormalise.
  int conjugate(int i, int j) const { return conj_[i][j]; }
  Transposition conjugate(const Transposition& c, const Transposition& d) const;

  // Noncommuting neighbours of i, ascending.
  const std::vector<int>& neighbors(int i) const { return neighbors_[i]; }

  // E = D restricted to roots supported inside the given coordinate indices
  // (0-based). Closed under internal conjugation.
  std::vector<int> parabolic_subset(const std::vector<int>& support) const;

  // k if the induced noncommuting graph on the subset is k-regular.
  std::optional<int> regularity_degree(const std::vector<int>& subset) const;

 private:
  TranspositionSet() = default;

  RootSystemId id_{};
  int pairing_scale_ = 1;  // squared coordinate scale: 1 for A/D, 4 for E
  std::vector<Transposition> roots_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> conj_;
};

}  // namespace axial
