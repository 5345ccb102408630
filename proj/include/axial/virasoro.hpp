#pragma once

#include <string>
#include <vector>

#include "axial/fusion.hpp"
#include "axial/rational.hpp"

namespace axial {

struct MinimalModel {
  int p = 0, q = 0;

  void validate() const;  // coprime, both >= 2
};

struct KacLabel {
  int r = 0, s = 0;

  bool operator==(const KacLabel& o) const = default;
  bool operator<(const KacLabel& o) const { return std::pair(r, s) < std::pair(o.r, o.s); }
};

// c(p,q) = 1 - 6(p-q)^2 / (pq)
Rational central_charge_pq(const MinimalModel& m);

// h_{r,s} = ((sp - rq)^2 - (p-q)^2) / (4pq); labels must satisfy
// 1 <= r < p, 1 <= s < q.
Rational kac_weight(const MinimalModel& m, const KacLabel& label);
bool kac_label_in_range(const MinimalModel& m, const KacLabel& label);

// Fusion of irreducible highest-weight modules on the level of Kac labels.
std::vector<KacLabel> vir_fusion(const MinimalModel& m, const KacLabel& a, const KacLabel& b);

// Fusion rules on {h/2 : h a Kac weight} plus the extra eigenvalue 1:
// weight entries are inherited from vir_fusion (weights deduplicated under
// the Kac symmetry), 1*1={1}, 1*0={}, 1*x={x}, and every diagonal x*x with
// x outside {0,1} picks up 1.
FusionTable derive_algebra_fusion_rules(const MinimalModel& m);

// Central charge of the m-th symmetric (A) resp. orthogonal (D) coset axis,
// as a function of alpha. The D-family value for m <= 4 is a formal
// evaluation of the same expression.
Scalar coset_cc_curve(Family family, const Scalar& alpha, int m);

struct KacObservation {
  std::string name;
  KacLabel label;               // right-hand side h_{r,s}
  bool skipped = false;         // label out of range for this m
  bool holds = false;
  std::string lhs, rhs;         // evaluated sides, for reports
};

// The alpha = 1/4 eigenvalue/Kac-weight identifications at c(m+3, m+2):
// 0 = h11/2, eta(m+1) = h31/2, 1 - eta(m) = h13/2, eta(m+1)-eta(m) = h33/2,
// and in the hat double eta^(m+1)-eta(m) = h53/2, eta^(m+1)-eta^(m) = h55/2.
// Out-of-range labels are skipped, never evaluated.
std::vector<KacObservation> match_kac_observations(int m);

struct AsymptoteReport {
  bool degrees_equal = false;
  bool leading_ratio_is_quarter_alpha_inverse = false;
  bool f1_equals_half = false;   // true for the A family
  std::string f1_value;          // observed f(1) in Q(alpha)
};

// Treats m as the polynomial variable over Q(alpha): the cc curve numerator
// and denominator have equal degree with leading ratio 1/(4 alpha), and the
// value at m = 1 is evaluated exactly.
AsymptoteReport asymptote_check(Family family);

// Markdown grid of Kac weights (optionally halved) with the c(p,q) header.
std::string kac_table_markdown(const MinimalModel& m, bool halved);

}  // namespace axial
