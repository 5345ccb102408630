#include "axial/verification.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "axial/fusion.hpp"
#include "axial/json_io.hpp"
#include "axial/matsuo.hpp"
#include "axial/spectral.hpp"
#include "axial/virasoro.hpp"

namespace axial {

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

std::vector<int> range(int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = i;
  return v;
}

class Runner {
 public:
  explicit Runner(const VerifyOptions& options) : options_(options) {}

  std::vector<ClaimResult> results() && {
    std::sort(claims_.begin(), claims_.end(),
              [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
    return std::move(claims_);
  }

  bool has_alpha(const Rational& a) const {
    return std::find(options_.alphas.begin(), options_.alphas.end(), a) != options_.alphas.end();
  }

  // Run `body`, recording pass/fail (exceptions count as failures with the
  // message as the counterexample payload).
  void claim(const std::string& id, const std::string& statement,
             const std::function<bool(std::string&)>& body) {
    ClaimResult r{id, statement, ClaimStatus::fail, ""};
    try {
      std::string details;
      r.status = body(details) ? ClaimStatus::pass : ClaimStatus::fail;
      r.details = details;
    } catch (const std::exception& e) {
      r.status = ClaimStatus::fail;
      r.details = std::string("exception: ") + e.what();
    }
    claims_.push_back(std::move(r));
  }

  void skip(const std::string& id, const std::string& statement, const std::string& why) {
    claims_.push_back({id, statement, ClaimStatus::skipped, why});
  }

  std::shared_ptr<const TranspositionSet> set_of(Family family, int rank) {
    auto key = std::pair(family, rank);
    auto it = sets_.find(key);
    if (it != sets_.end()) return it->second;
    auto set = TranspositionSet::build({family, rank});
    sets_.emplace(key, set);
    return set;
  }

  const VerifyOptions& options() const { return options_; }

 private:
  VerifyOptions options_;
  std::vector<ClaimResult> claims_;
  std::map<std::pair<Family, int>, std::shared_ptr<const TranspositionSet>> sets_;
};

std::string alpha_tag(const Rational& a) { return "a=" + a.to_string(); }

std::vector<std::pair<Family, int>> benchmark_sets(int max_rank) {
  std::vector<std::pair<Family, int>> sets;
  for (int n = 1; n <= std::min(7, max_rank); ++n) sets.emplace_back(Family::A, n);
  for (int n = 4; n <= std::min(6, max_rank); ++n) sets.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) sets.emplace_back(Family::E, n);
  return sets;
}

// ---------- criterion 1: sizes and regularity ----------

void criterion_regularity(Runner& run) {
  for (auto [family, rank] : benchmark_sets(run.options().max_rank)) {
    RootSystemId id{family, rank};
    run.claim("c1.regularity." + id.to_string(),
              "noncommuting graph of " + id.to_string() + " is (2h-4)-regular with the stated size",
              [&, family = family, rank = rank](std::string& details) {
                auto set = run.set_of(family, rank);
                if (set->size() != set->id().positive_root_count()) {
                  details = "size " + std::to_string(set->size());
                  return false;
                }
                auto degree = set->regularity_degree(range(set->size()));
                if (!degree || *degree != set->id().regularity()) {
                  details = "degree " + (degree ? std::to_string(*degree) : std::string("none"));
                  return false;
                }
                details = "|D| = " + std::to_string(set->size()) + ", k = " + std::to_string(*degree);
                return true;
              });
  }
}

// ---------- criterion 2: unital law and identity ----------

void criterion_unital(Runner& run) {
  for (auto [family, rank] : benchmark_sets(run.options().max_rank)) {
    RootSystemId id{family, rank};
    for (const Rational& alpha : run.options().alphas) {
      run.claim(
          "c2.unital." + id.to_string() + "." + alpha_tag(alpha),
          "d * sum(D) = (1 + alpha k/2) d for every d, and id * x = x on the basis",
          [&, family = family, rank = rank](std::string&) {
            AlgebraSpace A = AlgebraSpace::construct(run.set_of(family, rank), Scalar(alpha), false);
            Scalar factor = Scalar::one(A.mode()) +
                            A.alpha() / Scalar(rat(2)) *
                                Scalar(rat(A.transpositions().id().regularity()));
            AlgVector sum(A.mode());
            for (int i = 0; i < A.dimension(); ++i)
              sum.add_term(A.label_at(i), Scalar::one(A.mode()));
            for (int d = 0; d < A.dimension(); ++d) {
              AlgVector axis = A.basis_vector(A.label_at(d));
              if (!(A.multiply(axis, sum) == axis.scaled(factor))) return false;
            }
            // subalgebra_identity verifies id * x = x eagerly
            Idempotent identity = A.full_identity();
            return !identity.degenerate;
          });
    }
  }
}

// ---------- criterion 3: identity eigenvalues and explicit eigenvectors ----------

void criterion_identity_spectra(Runner& run) {
  Rational quarter = rat(1, 4);
  int max_n = std::min(7, run.options().max_rank + 1);
  for (int n = 3; n <= max_n; ++n) {
    for (int m = 2; m < n; ++m) {
      std::string id = "c3.spectrum.n" + std::to_string(n) + ".m" + std::to_string(m);
      std::string statement = "id_Sym(" + std::to_string(m) + ") in the quarter A" +
                              std::to_string(n - 1) + " algebra has spectrum {1,0,eta(m)} with "
                              "dims m(m-1)/2, (n-m)(n-m+1)/2, (m-1)(n-m)";
      if (!run.has_alpha(quarter)) {
        run.skip(id, statement, "alpha=1/4 not requested");
        continue;
      }
      run.claim(id, statement, [&, n = n, m = m](std::string& details) {
        AlgebraSpace A =
            AlgebraSpace::construct(run.set_of(Family::A, n - 1), Scalar(quarter), false);
        Idempotent idm = A.subalgebra_identity(A.transpositions().parabolic_subset(range(m)));
        Eigendecomposition dec = eigendecompose(A, idm);
        if (!dec.complete) {
          details = "incomplete decomposition";
          return false;
        }
        Scalar eta_m = eta(m, A.alpha());
        std::map<std::string, int> dims;
        for (const EigenPair& p : dec.pairs) {
          if (!(p.eigenvalue == Scalar(rat(1))) && !(p.eigenvalue == Scalar(rat(0))) &&
              !(p.eigenvalue == eta_m)) {
            details = "unexpected eigenvalue " + p.eigenvalue.to_string();
            return false;
          }
          dims[p.eigenvalue.to_string()] = p.dim();
        }
        int one_dim = dims.count("1") ? dims["1"] : 0;
        int zero_dim = dims.count("0") ? dims["0"] : 0;
        int eta_dim = dec.find(eta_m) ? dec.find(eta_m)->dim() : 0;
        bool ok = one_dim == m * (m - 1) / 2 && zero_dim == (n - m) * (n - m + 1) / 2 &&
                  eta_dim == (m - 1) * (n - m) &&
                  one_dim + zero_dim + eta_dim == n * (n - 1) / 2;
        std::ostringstream os;
        os << "dims {" << one_dim << ", " << zero_dim << ", " << eta_dim << "}";
        details = os.str();
        return ok;
      });
    }
  }

  // explicit eigenvector families over Q(alpha)
  for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {5, 4}}) {
    run.claim(
        "c3.eigenvectors.n" + std::to_string(n) + ".m" + std::to_string(m),
        "explicit 0- and eta(m)-eigenvectors of id_Sym(m) verify symbolically in Q(alpha)",
        [&, n = n, m = m](std::string& details) {
          AlgebraSpace A =
              AlgebraSpace::construct(run.set_of(Family::A, n - 1), Scalar::parameter(), false);
          const auto& set = A.transpositions();
          Scalar alpha = Scalar::parameter();
          Idempotent idm = A.subalgebra_identity(set.parabolic_subset(range(m)));
          auto root = [&](int i, int j) {
            std::vector<int> coords(n, 0);
            coords[i] = 1;
            coords[j] = -1;
            return set.index_of(Transposition(coords));
          };
          // 0-eigenvector: sum_{c in support} (c z) - alpha id, z a fixed point
          int z = n - 1;
          AlgVector v0 = A.zero_vector();
          for (int c = 0; c < m; ++c) v0.add_term({root(c, z), false}, Scalar::one(A.mode()));
          v0 = v0 - idm.vector.scaled(alpha);
          if (!A.multiply(idm.vector, v0).is_zero()) {
            details = "0-eigenvector family failed";
            return false;
          }
          // eta(m)-eigenvector: the 1-component of (az)-(bz) is cancelled by
          // the multiple -alpha/(2+alpha(m-4)) of the 1-eigenvector sum; in
          // scaled form (2+alpha(m-4))((az)-(bz)) - alpha sum_c ((ac)-(bc)).
          // (The typeset coefficient pair 2(1+alpha(m-2)), +alpha(m-2) does
          // not satisfy the eigenvector equation; see the misprint note.)
          Scalar lead = Scalar::constant(rat(2), A.mode()) +
                        alpha * Scalar::constant(rat(m - 4), A.mode());
          int a = 0, b = 1;
          AlgVector veta = A.zero_vector();
          veta.add_term({root(a, z), false}, lead);
          veta.add_term({root(b, z), false}, -lead);
          for (int c = 0; c < m; ++c) {
            if (c == a || c == b) continue;
            veta.add_term({root(std::min(a, c), std::max(a, c)), false}, -alpha);
            veta.add_term({root(std::min(b, c), std::max(b, c)), false}, alpha);
          }
          if (!(A.multiply(idm.vector, veta) == veta.scaled(eta(m, alpha)))) {
            details = "eta(m)-eigenvector family failed";
            return false;
          }
          details = "verified with the proof-derived correction multiple -alpha/(2+alpha(m-4))";
          return true;
        });
  }
}

// ---------- criterion 4: coset-axis spectra, fusion containment, containments ----------

void criterion_coset_axes(Runner& run) {
  for (auto [n, m, l] : std::vector<std::tuple<int, int, int>>{{6, 4, 3}, {6, 5, 4}}) {
    for (const Rational& alpha : {rat(1, 4), rat(1, 7)}) {
      std::string tag = "n" + std::to_string(n) + ".m" + std::to_string(m) + ".l" +
                        std::to_string(l) + "." + alpha_tag(alpha);
      std::string statement = "x_{Sym(m)/Sym(l)} has exactly the five formula eigenvalues, its "
                              "fusion table is contained in the reference, and the eigenspace "
                              "containments hold";
      if (!run.has_alpha(alpha)) {
        run.skip("c4.coset." + tag, statement, "alpha not requested");
        continue;
      }
      run.claim("c4.coset." + tag, statement, [&, n = n, m = m, l = l,
                                               alpha = alpha](std::string& details) {
        AlgebraSpace A =
            AlgebraSpace::construct(run.set_of(Family::A, n - 1), Scalar(alpha), false);
        const auto& set = A.transpositions();
        auto outer = set.parabolic_subset(range(m));
        auto inner = set.parabolic_subset(range(l));
        Idempotent x = A.coset_axis(outer, inner);
        Eigendecomposition dec = eigendecompose(A, x);
        if (!dec.complete) {
          details = "incomplete decomposition";
          return false;
        }
        Scalar one = Scalar::one(A.mode()), zero = Scalar::zero(A.mode());
        Scalar eta_m = eta(m, A.alpha()), eta_l = eta(l, A.alpha());
        std::vector<Scalar> expected = {one, zero, eta_m, one - eta_l, eta_m - eta_l};
        if (dec.pairs.size() != expected.size()) {
          details = "found " + std::to_string(dec.pairs.size()) + " eigenvalues";
          return false;
        }
        for (const Scalar& value : expected)
          if (!dec.find(value)) {
            details = "missing eigenvalue " + value.to_string();
            return false;
          }
        FusionTable table = fusion_table(A, dec);
        if (!table.contained_in(coset_axis_table(eta_m, eta_l, A.mode()))) {
          details = "fusion table not contained in the reference";
          return false;
        }
        Eigendecomposition dec_m =
            eigendecompose(A, A.subalgebra_identity(outer));
        Eigendecomposition dec_l =
            eigendecompose(A, A.subalgebra_identity(inner));
        ContainmentReport report = check_containments(A, dec_m, dec_l, m, l);
        return report.passed();
      });
    }
  }
}

// ---------- criterion 5: primitivity exactly at consecutive embeddings ----------

void criterion_primitivity(Runner& run) {
  Rational quarter = rat(1, 4);
  for (int n = 4; n <= std::min(6, run.options().max_rank + 1); ++n) {
    std::string id = "c5.primitivity.n" + std::to_string(n);
    std::string statement =
        "dim of the 1-eigenspace of x_{Sym(m)/Sym(l)} is 1 exactly when m = l+1 (3 <= l < m <= " +
        std::to_string(n) + ")";
    if (!run.has_alpha(quarter)) {
      run.skip(id, statement, "alpha=1/4 not requested");
      continue;
    }
    run.claim(id, statement, [&, n = n](std::string& details) {
      AlgebraSpace A =
          AlgebraSpace::construct(run.set_of(Family::A, n - 1), Scalar(quarter), false);
      const auto& set = A.transpositions();
      for (int l = 3; l < n; ++l)
        for (int m = l + 1; m <= n; ++m) {
          auto outer = set.parabolic_subset(range(m));
          auto inner = set.parabolic_subset(range(l));
          Idempotent x = A.coset_axis(outer, inner);
          Eigendecomposition dec = eigendecompose(A, x);
          if (!dec.complete) {
            details = "incomplete decomposition";
            return false;
          }
          bool is_primitive = primitive(dec);
          if (is_primitive != (m == l + 1)) {
            details = "m=" + std::to_string(m) + " l=" + std::to_string(l) + " primitive=" +
                      (is_primitive ? "yes" : "no");
            return false;
          }
          // cross-check the 1-eigenspace dimension against the independent
          // count |S_m - S_l| + |C_{D cap Sym(m)}(D cap Sym(l))|
          int centralising = 0;
          for (int c : outer) {
            bool commutes_with_all = true;
            for (int f : inner)
              if (c == f || !set.commutes(c, f)) {
                commutes_with_all = false;
                break;
              }
            if (commutes_with_all) ++centralising;
          }
          int expected_dim = (m - l) + centralising;
          const EigenPair* one = dec.find(Scalar::one(A.mode()));
          if (!one || one->dim() != expected_dim) {
            details = "m=" + std::to_string(m) + " l=" + std::to_string(l) +
                      ": dim A^x_1 = " + std::to_string(one ? one->dim() : 0) + ", count gives " +
                      std::to_string(expected_dim);
            return false;
          }
        }
      return true;
    });
  }
}

// ---------- criterion 6: central charges ----------

void criterion_central_charges(Runner& run) {
  for (auto [family, rank] : benchmark_sets(run.options().max_rank)) {
    RootSystemId rsid{family, rank};
    for (const Rational& alpha : run.options().alphas) {
      run.claim("c6.cc-id." + rsid.to_string() + "." + alpha_tag(alpha),
                "cc(id) by Gram sum equals |D|/(2 + alpha k)",
                [&, family = family, rank = rank](std::string&) {
                  AlgebraSpace A =
                      AlgebraSpace::construct(run.set_of(family, rank), Scalar(alpha), false);
                  Rational expected = Rational(A.transpositions().size()) /
                                      (rat(2) + alpha * Rational(A.transpositions().id().regularity()));
                  return A.central_charge(A.full_identity().vector) == Scalar(expected);
                });
    }
  }

  for (const Rational& alpha : run.options().alphas) {
    run.claim("c6.assoc-ids.A." + alpha_tag(alpha),
              "<id_E, id_F> = <id_F, id_F> along parabolic chains",
              [&](std::string&) {
                int rank = std::min(6, run.options().max_rank);
                AlgebraSpace A =
                    AlgebraSpace::construct(run.set_of(Family::A, rank), Scalar(alpha), false);
                const auto& set = A.transpositions();
                for (int l = 2; l <= rank; ++l)
                  for (int m = l + 1; m <= rank + 1; ++m) {
                    Idempotent idE = A.subalgebra_identity(set.parabolic_subset(range(m)));
                    Idempotent idF = A.subalgebra_identity(set.parabolic_subset(range(l)));
                    if (!(A.gram(idE.vector, idF.vector) == A.gram(idF.vector, idF.vector)))
                      return false;
                  }
                return true;
              });
    if (run.options().max_rank >= 5)
      run.claim("c6.assoc-ids.D." + alpha_tag(alpha),
                "<id_E, id_F> = <id_F, id_F> for the D4 subsystem of D5",
                [&](std::string&) {
                  AlgebraSpace A =
                      AlgebraSpace::construct(run.set_of(Family::D, 5), Scalar(alpha), false);
                  auto inner = A.transpositions().parabolic_subset(range(4));
                  Idempotent idF = A.subalgebra_identity(inner);
                  Idempotent idE = A.full_identity();
                  return A.gram(idE.vector, idF.vector) == A.gram(idF.vector, idF.vector);
                });

    run.claim("c6.cc-coset." + alpha_tag(alpha),
              "Gram central charge of x_{A_m/A_{m-1}} equals the closed-form curve, m <= 6",
              [&](std::string&) {
                int rank = std::min(6, run.options().max_rank);
                AlgebraSpace A =
                    AlgebraSpace::construct(run.set_of(Family::A, rank), Scalar(alpha), false);
                const auto& set = A.transpositions();
                for (int m = 1; m <= rank; ++m) {
                  Idempotent x = A.coset_axis(set.parabolic_subset(range(m + 1)),
                                              set.parabolic_subset(range(m)));
                  if (!(A.central_charge(x.vector) ==
                        coset_cc_curve(Family::A, A.alpha(), m)))
                    return false;
                }
                return true;
              });
  }

  run.claim("c6.quarter-curves", "fA_{1/4}(m) = 1 - 6/((m+2)(m+3)) and fD_{1/4}(m) = 1, m = 2..8",
            [&](std::string&) {
              Scalar quarter(rat(1, 4));
              for (int m = 2; m <= 8; ++m) {
                Rational expected = rat(1) - rat(6) / rat(static_cast<long long>(m + 2) * (m + 3));
                if (!(coset_cc_curve(Family::A, quarter, m) == Scalar(expected))) return false;
                if (!(coset_cc_curve(Family::D, quarter, m) == Scalar(rat(1)))) return false;
              }
              return true;
            });

  run.claim("c6.cc-1/32", "fA_{1/32}(2) = 21/22, matching c(12,11)",
            [&](std::string&) {
              return coset_cc_curve(Family::A, Scalar(rat(1, 32)), 2) == Scalar(rat(21, 22)) &&
                     central_charge_pq({12, 11}) == rat(21, 22);
            });

  run.claim("c6.asymptote", "both cc curves tend to 1/(4 alpha) and fA(1) = 1/2 in Q(alpha)",
            [&](std::string& details) {
              AsymptoteReport a = asymptote_check(Family::A);
              AsymptoteReport d = asymptote_check(Family::D);
              details = "fD(1) observed = " + d.f1_value;
              return a.degrees_equal && a.leading_ratio_is_quarter_alpha_inverse &&
                     a.f1_equals_half && d.degrees_equal &&
                     d.leading_ratio_is_quarter_alpha_inverse;
            });
}

// ---------- criterion 7: the hat double ----------

void criterion_hat(Runner& run) {
  for (int n = 3; n <= std::min(5, run.options().max_rank + 1); ++n) {
    run.claim("c7.minus-action.n" + std::to_string(n),
              "d_- * id = alpha/(2+alpha k) (k d_- + sum over neighbours (c_+ - c_-)), in Q(alpha)",
              [&, n = n](std::string&) {
                AlgebraSpace A = AlgebraSpace::construct(run.set_of(Family::A, n - 1),
                                                         Scalar::parameter(), true);
                const auto& set = A.transpositions();
                Scalar alpha = Scalar::parameter();
                Scalar k = Scalar::constant(rat(set.id().regularity()), A.mode());
                Scalar factor = alpha / (Scalar::constant(rat(2), A.mode()) + alpha * k);
                Idempotent id = A.full_identity();
                for (int d = 0; d < set.size(); ++d) {
                  AlgVector expected = A.zero_vector();
                  expected.add_term({d, true}, factor * k);
                  for (int c : set.neighbors(d)) {
                    expected.add_term({c, false}, factor);
                    expected.add_term({c, true}, -factor);
                  }
                  if (!(A.multiply(A.basis_vector({d, true}), id.vector) == expected)) return false;
                }
                return true;
              });
  }

  for (int m : {4, 5}) {
    run.claim("c7.extra-eigenvector.m" + std::to_string(m),
              "equal-support commuting quadruple gives an eta_hat(m)-eigenvector of id, in Q(alpha)",
              [&, m = m](std::string&) {
                AlgebraSpace A = AlgebraSpace::construct(run.set_of(Family::A, m - 1),
                                                         Scalar::parameter(), true);
                const auto& set = A.transpositions();
                auto root = [&](int i, int j) {
                  std::vector<int> coords(m, 0);
                  coords[i] = 1;
                  coords[j] = -1;
                  return set.index_of(Transposition(coords));
                };
                Scalar alpha = Scalar::parameter();
                Scalar rest = Scalar::one(A.mode()) - alpha;
                AlgVector v = A.zero_vector();
                for (auto [i, j, sign] : std::vector<std::tuple<int, int, int>>{
                         {0, 1, 1}, {2, 3, 1}, {0, 2, -1}, {1, 3, -1}}) {
                  Scalar s = Scalar::constant(rat(sign), A.mode());
                  v.add_term({root(i, j), false}, alpha * s);
                  v.add_term({root(i, j), true}, rest * s);
                }
                Idempotent id = A.full_identity();
                return A.multiply(id.vector, v) == v.scaled(eta_hat(m, alpha));
              });
  }

  {
    Rational quarter = rat(1, 4);
    std::string statement = "x_4 in the quarter hat A4 algebra has exactly the seven stated "
                            "eigenvalues with a complete decomposition";
    if (!run.has_alpha(quarter)) {
      run.skip("c7.hat-x4", statement, "alpha=1/4 not requested");
    } else {
      run.claim("c7.hat-x4", statement, [&](std::string& details) {
        AlgebraSpace A =
            AlgebraSpace::construct(run.set_of(Family::A, 4), Scalar(quarter), true);
        const auto& set = A.transpositions();
        Idempotent x = A.coset_axis(set.parabolic_subset(range(5)), set.parabolic_subset(range(4)));
        Eigendecomposition dec = eigendecompose(A, x);
        std::vector<Rational> expected = {rat(1),     rat(2, 3),  rat(5, 14), rat(5, 21),
                                          rat(1, 14), rat(1, 42), rat(0)};
        if (!dec.complete || dec.pairs.size() != expected.size()) {
          details = "incomplete or wrong eigenvalue count";
          return false;
        }
        for (const Rational& value : expected)
          if (!dec.find(Scalar(value))) {
            details = "missing eigenvalue " + value.to_string();
            return false;
          }
        details = "dimension " + std::to_string(dec.dimension) +
                  " = 2|D(A4)| (the stated 40 miscounts |D(A4)| = 10)";
        return dec.total_eigenspace_dim() == dec.dimension && dec.dimension == 20;
      });
    }
  }

  run.claim("c7.hat-quarter-closed-forms",
            "eta^(m+1)-eta(m) = m(m+1)/(2(m+2)(m+3)) and eta^(m+1)-eta^(m) = 3/((m+2)(m+3)), m=2..6",
            [&](std::string&) {
              Scalar quarter(rat(1, 4));
              for (int m = 2; m <= 6; ++m) {
                Rational lhs1 = (eta_hat(m + 1, quarter) - eta(m, quarter)).rational();
                Rational lhs2 = (eta_hat(m + 1, quarter) - eta_hat(m, quarter)).rational();
                if (lhs1 != rat(static_cast<long long>(m) * (m + 1), 2LL * (m + 2) * (m + 3)))
                  return false;
                if (lhs2 != rat(3, static_cast<long long>(m + 2) * (m + 3))) return false;
              }
              return true;
            });

  {
    Rational quarter = rat(1, 4);
    std::string statement =
        "eta_hat(5)-eigenspace of id_Sym(5) splits into eta(4)- and eta_hat(4)-eigenvectors";
    if (!run.has_alpha(quarter)) {
      run.skip("c7.hat-containment.m4", statement, "alpha=1/4 not requested");
    } else {
      run.claim("c7.hat-containment.m4", statement, [&](std::string&) {
        AlgebraSpace A =
            AlgebraSpace::construct(run.set_of(Family::A, 4), Scalar(quarter), true);
        const auto& set = A.transpositions();
        Eigendecomposition dec5 =
            eigendecompose(A, A.subalgebra_identity(set.parabolic_subset(range(5))));
        Eigendecomposition dec4 =
            eigendecompose(A, A.subalgebra_identity(set.parabolic_subset(range(4))));
        ContainmentReport report = check_containments(A, dec5, dec4, 5, 4);
        return report.passed() && report.hat_eta.has_value() && *report.hat_eta;
      });
    }
  }
}

// ---------- criterion 8: Virasoro kit ----------

void criterion_virasoro(Runner& run) {
  run.claim("c8.v53-table", "derived fusion rules for (5,3) reproduce the printed table exactly",
            [&](std::string&) {
              FusionTable derived = derive_algebra_fusion_rules({5, 3});
              std::vector<Scalar> values = {Scalar(rat(1)), Scalar(rat(0)), Scalar(rat(3, 8)),
                                            Scalar(rat(1, 10)), Scalar(rat(-1, 40))};
              FusionTable printed(values);
              auto idx = [&](const Rational& v) { return printed.index_of(Scalar(v)); };
              int one = idx(rat(1)), zero = idx(rat(0)), te = idx(rat(3, 8)),
                  tenth = idx(rat(1, 10)), forty = idx(rat(-1, 40));
              printed.set_entry(one, one, {one});
              printed.set_entry(one, tenth, {tenth});
              printed.set_entry(one, forty, {forty});
              printed.set_entry(one, te, {te});
              printed.set_entry(zero, zero, {zero});
              printed.set_entry(zero, tenth, {tenth});
              printed.set_entry(zero, forty, {forty});
              printed.set_entry(zero, te, {te});
              printed.set_entry(tenth, tenth, {one, zero, tenth});
              printed.set_entry(tenth, forty, {forty, te});
              printed.set_entry(tenth, te, {forty});
              printed.set_entry(forty, forty, {one, zero, tenth});
              printed.set_entry(forty, te, {tenth});
              printed.set_entry(te, te, {one, zero});
              // byte-for-byte in the canonical serialisation
              return fusion_table_to_json(derived).dump() == fusion_table_to_json(printed).dump();
            });

  for (int m = 2; m <= 8; ++m) {
    run.claim("c8.kac-observations.m" + std::to_string(m),
              "eigenvalue/Kac-weight identifications at c(m+3,m+2) hold exactly (hat rows "
              "range-guarded)",
              [&, m = m](std::string& details) {
                auto report = match_kac_observations(m);
                for (const KacObservation& obs : report) {
                  bool must_skip = (obs.label == KacLabel{5, 3} && m < 3) ||
                                   (obs.label == KacLabel{5, 5} && m < 4);
                  if (must_skip != obs.skipped) {
                    details = obs.name + ": wrong skip behaviour";
                    return false;
                  }
                  if (!obs.skipped && !obs.holds) {
                    details = obs.name + ": " + obs.lhs + " != " + obs.rhs;
                    return false;
                  }
                }
                return true;
              });
  }
}

// ---------- criterion 9: axiality of the generating axes ----------

void criterion_axiality(Runner& run) {
  std::vector<std::pair<Family, int>> sets;
  for (int n = 1; n <= std::min(5, run.options().max_rank); ++n) sets.emplace_back(Family::A, n);
  if (run.options().max_rank >= 4) sets.emplace_back(Family::D, 4);
  for (auto [family, rank] : sets) {
    RootSystemId rsid{family, rank};
    for (const Rational& alpha : run.options().alphas) {
      run.claim(
          "c9.axiality." + rsid.to_string() + "." + alpha_tag(alpha),
          "every axis is a primitive axis for the three-eigenvalue rules and its Miyamoto "
          "involution intertwines conjugation",
          [&, family = family, rank = rank](std::string& details) {
            AlgebraSpace A =
                AlgebraSpace::construct(run.set_of(family, rank), Scalar(alpha), false);
            std::vector<Scalar> candidates = {Scalar::one(A.mode()), Scalar::zero(A.mode()),
                                              A.alpha()};
            FusionTable reference = phi3_table(A.alpha());
            for (int d = 0; d < A.dimension(); ++d) {
              Eigendecomposition dec = eigendecompose(A, A.axis(d), candidates);
              if (!dec.complete) {
                details = "axis " + std::to_string(d) + ": incomplete";
                return false;
              }
              if (!primitive(dec)) {
                details = "axis " + std::to_string(d) + ": not primitive";
                return false;
              }
              if (!fusion_table(A, dec).contained_in(reference)) {
                details = "axis " + std::to_string(d) + ": fusion not contained";
                return false;
              }
            }
            // automorphism + isometry + equivariance, all axes and pairs
            if (!check_axial_representation(A)) {
              details = "conjugation equivariance failed";
              return false;
            }
            return true;
          });
    }
  }
}

// ---------- empirical reports: recorded outcomes, not asserted results ----------

void reports(Runner& run) {
  run.claim("r1.frobenius-form",
            "<uv, w> = <u, vw> sampled on random triples (recorded outcome; not asserted by the "
            "source results)",
            [&](std::string& details) {
              std::string outcome;
              for (int rank = 2; rank <= std::min(4, run.options().max_rank); ++rank)
                for (bool hatted : {false, true}) {
                  AlgebraSpace A = AlgebraSpace::construct(run.set_of(Family::A, rank),
                                                           Scalar(rat(1, 4)), hatted);
                  bool holds = frobenius_holds_on_sample(A, 20, 7u * rank + hatted);
                  outcome += std::string(hatted ? "hat-A" : "A") + std::to_string(rank) + ":" +
                             (holds ? "holds " : "fails ");
                }
              details = outcome;
              return true;  // a report: the outcome itself is the payload
            });

  run.claim("r2.degenerate-coset-spectra",
            "observed spectra of coset axes with l < 3 (no closed form asserted)",
            [&](std::string& details) {
              if (!run.has_alpha(rat(1, 4))) {
                details = "alpha=1/4 not requested";
                return true;
              }
              std::ostringstream os;
              for (auto [n, m, l] : std::vector<std::tuple<int, int, int>>{{5, 3, 2}, {6, 4, 2}}) {
                AlgebraSpace A = AlgebraSpace::construct(run.set_of(Family::A, n - 1),
                                                         Scalar(rat(1, 4)), false);
                const auto& set = A.transpositions();
                Idempotent x =
                    A.coset_axis(set.parabolic_subset(range(m)), set.parabolic_subset(range(l)));
                Eigendecomposition dec = eigendecompose(A, x);
                os << "Sym(" << m << ")/Sym(" << l << ") in A" << (n - 1) << ": {";
                for (size_t i = 0; i < dec.pairs.size(); ++i)
                  os << (i ? ", " : "") << dec.pairs[i].eigenvalue.to_string();
                os << "} ";
              }
              details = os.str();
              return true;
            });

  run.claim("r3.fD-at-1",
            "observed value of the D-family cc curve at m = 1 (the 1/2 note presumes the "
            "degenerate rank-1 counting convention)",
            [&](std::string& details) {
              AsymptoteReport d = asymptote_check(Family::D);
              details = "fD(1) = " + d.f1_value + " in Q(alpha); equals 1/2 only under the D1 ~ A1 "
                        "transposition count, which the curve's (m-1) factor does not encode";
              return !d.f1_equals_half;
            });
}

}  // namespace

std::vector<ClaimResult> run_verification(const VerifyOptions& options) {
  Runner run(options);
  criterion_regularity(run);
  criterion_unital(run);
  criterion_identity_spectra(run);
  criterion_coset_axes(run);
  criterion_primitivity(run);
  criterion_central_charges(run);
  criterion_hat(run);
  criterion_virasoro(run);
  criterion_axiality(run);
  reports(run);
  return std::move(run).results();
}

const std::map<int, std::string>& criterion_titles() {
  static const std::map<int, std::string> titles = {
      {1, "transposition counts and (2h-4)-regularity"},
      {2, "unital law and subalgebra identities"},
      {3, "identity eigenvalues, dimensions and explicit eigenvectors"},
      {4, "coset-axis spectra, fusion containment and eigenspace containments"},
      {5, "primitivity exactly at consecutive embeddings"},
      {6, "central charges, cc curves and asymptotes"},
      {7, "hat double: minus action, extra eigenvalues, containment"},
      {8, "Virasoro kit: (5,3) fusion table and Kac-weight identifications"},
      {9, "axiality of the generating axes"},
  };
  return titles;
}

int criterion_of(const ClaimResult& claim) {
  if (claim.id.size() < 2 || claim.id[0] != 'c') return 0;
  size_t dot = claim.id.find('.');
  if (dot == std::string::npos) return 0;
  try {
    return std::stoi(claim.id.substr(1, dot - 1));
  } catch (...) {
    return 0;
  }
}

bool all_passed(const std::vector<ClaimResult>& claims) {
  for (const ClaimResult& c : claims)
    if (c.status == ClaimStatus::fail) return false;
  return true;
}

}  // namespace axial
