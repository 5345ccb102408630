#include "axial/virasoro.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "axial/matsuo.hpp"

namespace axial {

void MinimalModel::validate() const {
  if (p < 2 || q < 2) throw std::invalid_argument("minimal model requires p, q >= 2");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("minimal model requires coprime p, q");
}

Rational central_charge_pq(const MinimalModel& m) {
  m.validate();
  Rational diff(m.p - m.q);
  return Rational(1) - Rational(6) * diff * diff / Rational(static_cast<long long>(m.p) * m.q);
}

bool kac_label_in_range(const MinimalModel& m, const KacLabel& label) {
  return label.r >= 1 && label.r < m.p && label.s >= 1 && label.s < m.q;
}

Rational kac_weight(const MinimalModel& m, const KacLabel& label) {
  m.validate();
  if (!kac_label_in_range(m, label))
    throw std::out_of_range("Kac label (" + std::to_string(label.r) + "," +
                            std::to_string(label.s) + ") out of range for (p,q)=(" +
                            std::to_string(m.p) + "," + std::to_string(m.q) + ")");
  long long spread = static_cast<long long>(label.s) * m.p - static_cast<long long>(label.r) * m.q;
  long long offset = m.p - m.q;
  return Rational(spread * spread - offset * offset, 4LL * m.p * m.q);
}

std::vector<KacLabel> vir_fusion(const MinimalModel& m, const KacLabel& a, const KacLabel& b) {
  m.validate();
  if (!kac_label_in_range(m, a) || !kac_label_in_range(m, b))
    throw std::out_of_range("Kac label out of range");
  std::vector<KacLabel> result;
  int v_hi = std::min(a.r + b.r - 1, 2 * m.p - a.r - b.r - 1);
  int w_hi = std::min(a.s + b.s - 1, 2 * m.q - a.s - b.s - 1);
  for (int v = 1 + std::abs(a.r - b.r); v <= v_hi; ++v) {
    if ((v & 1) != ((1 + a.r + b.r) & 1)) continue;
    for (int w = 1 + std::abs(a.s - b.s); w <= w_hi; ++w) {
      if ((w & 1) != ((1 + a.s + b.s) & 1)) continue;
      result.push_back({v, w});
    }
  }
  return result;
}

FusionTable derive_algebra_fusion_rules(const MinimalModel& m) {
  m.validate();
  // group labels by halved weight; the Kac symmetry (r,s) ~ (p-r,q-s) folds
  // each module onto one representative, the lexicographically least label
  std::map<Rational, KacLabel> representative;
  for (int r = 1; r < m.p; ++r)
    for (int s = 1; s < m.q; ++s) {
      Rational half = kac_weight(m, {r, s}) / Rational(2);
      auto it = representative.find(half);
      if (it == representative.end() || KacLabel{r, s} < it->second)
        representative.insert_or_assign(half, KacLabel{r, s});
    }

  // canonical order: 1, 0, then the remaining halved weights descending
  std::vector<Rational> weights;
  for (const auto& [half, label] : representative)
    if (!half.is_zero()) weights.push_back(half);
  std::sort(weights.begin(), weights.end(), std::greater<>());
  std::vector<Scalar> eigenvalues = {Scalar(Rational(1)), Scalar(Rational(0))};
  for (const Rational& w : weights) eigenvalues.push_back(Scalar(w));

  FusionTable table(std::move(eigenvalues));
  auto index_of_half = [&](const Rational& half) {
    int idx = table.index_of(Scalar(half));
    if (idx < 0) throw std::logic_error("weight missing from fusion table");
    return idx;
  };

  // rules for the extra eigenvalue 1
  table.set_entry(0, 0, {0});
  for (int i = 2; i < table.size(); ++i) table.set_entry(0, i, {i});
  // weight-by-weight fusion
  for (auto ia = representative.begin(); ia != representative.end(); ++ia)
    for (auto ib = ia; ib != representative.end(); ++ib) {
      int i = index_of_half(ia->first), j = index_of_half(ib->first);
      std::set<int> values;
      for (const KacLabel& out : vir_fusion(m, ia->second, ib->second))
        values.insert(index_of_half(kac_weight(m, out) / Rational(2)));
      if (i == j && !ia->first.is_zero()) values.insert(0);  // diagonal picks up 1
      table.set_entry(i, j, std::move(values));
    }
  return table;
}

Scalar coset_cc_curve(Family family, const Scalar& alpha, int m) {
  FieldMode mode = alpha.mode();
  auto c = [&](long long v) { return Scalar::constant(Rational(v), mode); };
  Scalar one = Scalar::one(mode);
  switch (family) {
    case Family::A: {
      if (m < 1) throw std::invalid_argument("A-family coset index must be >= 1");
      Scalar num = c(m) * (c(2) + alpha * c(m - 3));
      Scalar den = c(4) * (one + alpha * c(m - 1)) * (one + alpha * c(m - 2));
      if (den.is_zero()) throw std::domain_error("cc curve denominator vanishes at this alpha");
      return num / den;
    }
    case Family::D: {
      // formal for m <= 4
      Scalar num = c(m - 1) * (one + alpha * c(m - 4));
      Scalar den = (one + alpha * c(2 * m - 4)) * (one + alpha * c(2 * m - 6));
      if (den.is_zero()) throw std::domain_error("cc curve denominator vanishes at this alpha");
      return num / den;
    }
    case Family::E:
      throw std::invalid_argument("cc curves are defined for the A and D families");
  }
  throw std::logic_error("unreachable");
}

std::vector<KacObservation> match_kac_observations(int m) {
  if (m < 2) throw std::invalid_argument("observation matching requires m >= 2");
  MinimalModel model{m + 3, m + 2};
  Scalar quarter(Rational(1, 4));
  Rational eta_m = eta(m, quarter).rational();
  Rational eta_m1 = eta(m + 1, quarter).rational();
  Rational hat_m = eta_hat(m, quarter).rational();
  Rational hat_m1 = eta_hat(m + 1, quarter).rational();

  struct Item {
    std::string name;
    KacLabel label;
    Rational lhs;
  };
  std::vector<Item> items = {
      {"0 = h(1,1)/2", {1, 1}, Rational(0)},
      {"eta(m+1) = h(3,1)/2", {3, 1}, eta_m1},
      {"1 - eta(m) = h(1,3)/2", {1, 3}, Rational(1) - eta_m},
      {"eta(m+1) - eta(m) = h(3,3)/2", {3, 3}, eta_m1 - eta_m},
      {"eta^(m+1) - eta(m) = h(5,3)/2", {5, 3}, hat_m1 - eta_m},
      {"eta^(m+1) - eta^(m) = h(5,5)/2", {5, 5}, hat_m1 - hat_m},
  };
  std::vector<KacObservation> report;
  for (const Item& item : items) {
    KacObservation obs;
    obs.name = item.name;
    obs.label = item.label;
    if (!kac_label_in_range(model, item.label)) {
      obs.skipped = true;
      obs.lhs = item.lhs.to_string();
      obs.rhs = "label out of range";
    } else {
      Rational rhs = kac_weight(model, item.label) / Rational(2);
      obs.holds = item.lhs == rhs;
      obs.lhs = item.lhs.to_string();
      obs.rhs = rhs.to_string();
    }
    report.push_back(std::move(obs));
  }
  return report;
}

AsymptoteReport asymptote_check(Family family) {
  using MPoly = Polynomial<RatFunc>;  // polynomials in m over Q(alpha)
  RatFunc a = RatFunc::parameter();
  RatFunc one(1);
  auto linear = [&](RatFunc constant, RatFunc slope) {
    return MPoly(std::vector<RatFunc>{std::move(constant), std::move(slope)});
  };
  MPoly num, den;
  switch (family) {
    case Family::A:
      // m(2 + alpha(m-3)) and 4(1 + alpha(m-1))(1 + alpha(m-2))
      num = linear(RatFunc(0), one) * linear(RatFunc(2) - RatFunc(3) * a, a);
      den = (linear(one - a, a) * linear(one - RatFunc(2) * a, a)).scaled(RatFunc(4));
      break;
    case Family::D:
      // (m-1)(1 + alpha(m-4)) and (1 + alpha(2m-4))(1 + alpha(2m-6))
      num = linear(RatFunc(-1), one) * linear(one - RatFunc(4) * a, a);
      den = linear(one - RatFunc(4) * a, RatFunc(2) * a) *
            linear(one - RatFunc(6) * a, RatFunc(2) * a);
      break;
    case Family::E:
      throw std::invalid_argument("cc curves are defined for the A and D families");
  }
  AsymptoteReport report;
  report.degrees_equal = num.degree() == den.degree();
  report.leading_ratio_is_quarter_alpha_inverse =
      num.leading() / den.leading() == one / (RatFunc(4) * a);
  RatFunc f1 = num.evaluate(one) / den.evaluate(one);
  report.f1_equals_half = f1 == RatFunc(Rational(1, 2));
  report.f1_value = f1.to_string();
  return report;
}

std::string kac_table_markdown(const MinimalModel& m, bool halved) {
  m.validate();
  std::string out = "Kac table for c(" + std::to_string(m.p) + "," + std::to_string(m.q) +
                    ") = " + central_charge_pq(m).to_string();
  out += halved ? " (halved weights h_{r,s}/2)\n\n" : "\n\n";
  out += "| r\\s |";
  for (int s = 1; s < m.q; ++s) out += " " + std::to_string(s) + " |";
  out += "\n|---|";
  for (int s = 1; s < m.q; ++s) out += "---|";
  out += "\n";
  for (int r = 1; r < m.p; ++r) {
    out += "| " + std::to_string(r) + " |";
    for (int s = 1; s < m.q; ++s) {
      Rational w = kac_weight(m, {r, s});
      if (halved) w = w / Rational(2);
      out += " " + w.to_string() + " |";
    }
    out += "\n";
  }
  return out;
}

}  // namespace axial
