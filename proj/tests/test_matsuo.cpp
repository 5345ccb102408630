#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "axial/matsuo.hpp"

using namespace axial;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

AlgebraSpace plain(Family f, int rank, const Scalar& alpha) {
  return AlgebraSpace::construct(TranspositionSet::build({f, rank}), alpha, false);
}

AlgebraSpace hat(Family f, int rank, const Scalar& alpha) {
  return AlgebraSpace::construct(TranspositionSet::build({f, rank}), alpha, true);
}

Scalar quarter() { return Scalar(rat(1, 4)); }

// supports use 0-based coordinate indices
std::vector<int> range(int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("alpha 0 and 1 are rejected") {
  auto set = TranspositionSet::build({Family::A, 2});
  CHECK_THROWS_AS(AlgebraSpace::construct(set, Scalar(rat(0)), false), std::domain_error);
  CHECK_THROWS_AS(AlgebraSpace::construct(set, Scalar(rat(1)), false), std::domain_error);
  CHECK_THROWS_AS(
      AlgebraSpace::construct(set, Scalar::constant(rat(1), FieldMode::symbolic), false),
      std::domain_error);
}

TEST_CASE("basis products of the plain algebra") {
  AlgebraSpace A = plain(Family::A, 2, quarter());
  const auto& set = A.transpositions();
  int d12 = set.index_of(Transposition({1, -1, 0}));
  int d13 = set.index_of(Transposition({1, 0, -1}));
  int d23 = set.index_of(Transposition({0, 1, -1}));

  AlgVector d = A.basis_vector({d12, false});
  CHECK(A.multiply(d, d) == d);  // axes are idempotent

  // noncommuting pair: (alpha/2)(a + b - a^b)
  AlgVector a = A.basis_vector({d13, false});
  AlgVector b = A.basis_vector({d23, false});
  AlgVector expected(A.mode());
  expected.add_term({d13, false}, Scalar(rat(1, 8)));
  expected.add_term({d23, false}, Scalar(rat(1, 8)));
  expected.add_term({d12, false}, Scalar(rat(-1, 8)));
  CHECK(A.multiply(a, b) == expected);
}

TEST_CASE("commuting axes annihilate") {
  AlgebraSpace A = plain(Family::A, 3, quarter());
  const auto& set = A.transpositions();
  int d12 = set.index_of(Transposition({1, -1, 0, 0}));
  int d34 = set.index_of(Transposition({0, 0, 1, -1}));
  CHECK(A.multiply(A.basis_vector({d12, false}), A.basis_vector({d34, false})).is_zero());
}

TEST_CASE("square of a difference of noncommuting axes") {
  // (a - b)^2 = (1 - alpha)(a + b) + alpha*d, symbolically
  AlgebraSpace A = plain(Family::A, 2, Scalar::parameter());
  const auto& set = A.transpositions();
  int d12 = set.index_of(Transposition({1, -1, 0}));
  int d13 = set.index_of(Transposition({1, 0, -1}));
  int d23 = set.index_of(Transposition({0, 1, -1}));
  Scalar alpha = Scalar::parameter();
  Scalar one = Scalar::one(FieldMode::symbolic);

  AlgVector diff = A.basis_vector({d13, false}) - A.basis_vector({d23, false});
  AlgVector expected(A.mode());
  expected.add_term({d13, false}, one - alpha);
  expected.add_term({d23, false}, one - alpha);
  expected.add_term({d12, false}, alpha);
  CHECK(A.multiply(diff, diff) == expected);
  CHECK(A.multiply(diff, A.zero_vector()).is_zero());
}

TEST_CASE("multiplication is commutative on all basis pairs, plain and hat") {
  for (bool hatted : {false, true}) {
    AlgebraSpace A = hatted ? hat(Family::A, 3, quarter()) : plain(Family::A, 3, quarter());
    for (int i = 0; i < A.dimension(); ++i)
      for (int j = 0; j < A.dimension(); ++j) {
        AlgVector u = A.basis_vector(A.label_at(i));
        AlgVector v = A.basis_vector(A.label_at(j));
        CHECK(A.multiply(u, v) == A.multiply(v, u));
      }
  }
}

TEST_CASE("bilinear form values") {
  AlgebraSpace A = plain(Family::A, 2, Scalar::parameter());
  const auto& set = A.transpositions();
  AlgVector d = A.basis_vector({0, false});
  CHECK(A.gram(d, d) == Scalar::one(FieldMode::symbolic));
  int d13 = set.index_of(Transposition({1, 0, -1}));
  AlgVector c = A.basis_vector({d13, false});
  Scalar half_alpha = Scalar::parameter() / Scalar::constant(rat(2), FieldMode::symbolic);
  CHECK(A.gram(d, c) == half_alpha);

  AlgebraSpace B = plain(Family::A, 3, quarter());
  int e12 = B.transpositions().index_of(Transposition({1, -1, 0, 0}));
  int e34 = B.transpositions().index_of(Transposition({0, 0, 1, -1}));
  CHECK(B.gram(B.basis_vector({e12, false}), B.basis_vector({e34, false})).is_zero());
}

TEST_CASE("hat algebra: signed basis behaviour") {
  AlgebraSpace A = hat(Family::A, 2, quarter());
  CHECK(A.dimension() == 6);
  AlgVector dplus = A.basis_vector({0, false});
  AlgVector dminus = A.basis_vector({0, true});
  CHECK(A.multiply(dplus, dminus).is_zero());  // opposite signs annihilate
  CHECK(A.multiply(dminus, dminus) == dminus);
  CHECK(A.gram(dplus, dminus).is_zero());
  CHECK(A.gram(dminus, dminus) == Scalar(rat(1)));

  // noncommuting mixed signs produce the sign-product conjugate
  const auto& set = A.transpositions();
  int d12 = set.index_of(Transposition({1, -1, 0}));
  int d13 = set.index_of(Transposition({1, 0, -1}));
  int d23 = set.index_of(Transposition({0, 1, -1}));
  AlgVector a = A.basis_vector({d13, false});
  AlgVector bm = A.basis_vector({d23, true});
  AlgVector expected(A.mode());
  expected.add_term({d13, false}, Scalar(rat(1, 8)));
  expected.add_term({d23, true}, Scalar(rat(1, 8)));
  expected.add_term({d12, true}, Scalar(rat(-1, 8)));
  CHECK(A.multiply(a, bm) == expected);
}

TEST_CASE("unital law: d * sum(D) = (1 + alpha*k/2) d") {
  for (auto [family, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::A, 4}, {Family::D, 4}}) {
    AlgebraSpace A = plain(family, rank, Scalar::parameter());
    Scalar alpha = Scalar::parameter();
    Scalar k = Scalar::constant(rat(A.transpositions().id().regularity()), FieldMode::symbolic);
    Scalar factor = Scalar::one(FieldMode::symbolic) +
                    alpha / Scalar::constant(rat(2), FieldMode::symbolic) * k;
    AlgVector sum(A.mode());
    for (int i = 0; i < A.dimension(); ++i)
      sum.add_term(A.label_at(i), Scalar::one(FieldMode::symbolic));
    for (int i = 0; i < A.dimension(); ++i) {
      AlgVector d = A.basis_vector(A.label_at(i));
      CHECK(A.multiply(d, sum) == d.scaled(factor));
    }
  }
}

TEST_CASE("subalgebra identities") {
  AlgebraSpace A = plain(Family::A, 4, Scalar::parameter());

  SUBCASE("full identity of A(n-1) has coefficient 1/(1+alpha(n-2))") {
    // A4 corresponds to Sym(5): full set has k = 2*5-4 = 6, so 1/(1+3a)
    Idempotent id = A.full_identity();
    Scalar expected = (Scalar::one(FieldMode::symbolic) +
                       Scalar::constant(rat(3), FieldMode::symbolic) * Scalar::parameter())
                          .inverse();
    for (const auto& [label, coeff] : id.vector.terms()) CHECK(coeff == expected);
    CHECK(static_cast<int>(id.vector.terms().size()) == 10);
    for (int i = 0; i < A.dimension(); ++i) {
      AlgVector e = A.basis_vector(A.label_at(i));
      CHECK(A.multiply(id.vector, e) == e);
    }
  }

  SUBCASE("single transposition gives the axis itself") {
    Idempotent id = A.subalgebra_identity({0});
    CHECK(id.vector == A.basis_vector({0, false}));
  }

  SUBCASE("non-closed subsets are rejected, commuting pairs are fine") {
    const auto& set = A.transpositions();
    int e12 = set.index_of(Transposition({1, -1, 0, 0, 0}));
    int e23 = set.index_of(Transposition({0, 1, -1, 0, 0}));
    CHECK_THROWS_AS(A.subalgebra_identity({e12, e23}), std::domain_error);  // e12^e23 missing
    int e34 = set.index_of(Transposition({0, 0, 1, -1, 0}));
    CHECK(A.subalgebra_identity({e12, e34}).vector.terms().size() == 2);  // 0-regular
  }

  SUBCASE("irregular closed subsets are rejected") {
    // Sym(3) x Sym(2): closed under conjugation, valences 2 and 0
    const auto& set = A.transpositions();
    auto sym3 = set.parabolic_subset({0, 1, 2});
    int e45 = set.index_of(Transposition({0, 0, 0, 1, -1}));
    std::vector<int> mixed = sym3;
    mixed.push_back(e45);
    CHECK_THROWS_AS(A.subalgebra_identity(mixed), std::domain_error);
  }

  SUBCASE("singular alpha is rejected") {
    // k = 6 for full A4, so alpha = -1/3 makes 1 + alpha*k/2 = 0
    AlgebraSpace B = plain(Family::A, 4, Scalar(rat(-1, 3)));
    CHECK_THROWS_AS(B.full_identity(), std::domain_error);
  }
}

TEST_CASE("identity of E7 has coefficient 1/(1+16a)") {
  AlgebraSpace A = plain(Family::E, 7, Scalar::parameter());
  Idempotent id = A.full_identity();
  Scalar expected = (Scalar::one(FieldMode::symbolic) +
                     Scalar::constant(rat(16), FieldMode::symbolic) * Scalar::parameter())
                        .inverse();
  CHECK(static_cast<int>(id.vector.terms().size()) == 63);
  for (const auto& [label, coeff] : id.vector.terms()) CHECK(coeff == expected);
}

TEST_CASE("coset axes") {
  AlgebraSpace A = plain(Family::A, 3, quarter());
  auto sym4 = range(4);  // all of Sym(4)
  auto sym3 = range(3);

  SUBCASE("degenerate coset axis is flagged") {
    auto outer = A.transpositions().parabolic_subset(sym3);
    Idempotent x = A.coset_axis(outer, outer);
    CHECK(x.degenerate);
    CHECK(x.vector.is_zero());
  }

  SUBCASE("x_{Sym(4)/Sym(3)} is idempotent and annihilates id_{Sym(3)}") {
    auto outer = A.transpositions().parabolic_subset(sym4);
    auto inner = A.transpositions().parabolic_subset(sym3);
    Idempotent x = A.coset_axis(outer, inner);
    CHECK(!x.degenerate);
    CHECK(A.multiply(x.vector, x.vector) == x.vector);
    Idempotent id3 = A.subalgebra_identity(inner);
    CHECK(A.multiply(x.vector, id3.vector).is_zero());
  }

  SUBCASE("nesting is enforced") {
    auto outer = A.transpositions().parabolic_subset(sym3);
    auto other = A.transpositions().parabolic_subset({1, 2, 3});
    CHECK_THROWS_AS(A.coset_axis(outer, other), std::domain_error);
  }
}

TEST_CASE("chain of coset axes pairwise annihilates and sums to the identity") {
  AlgebraSpace A = plain(Family::A, 4, quarter());
  const auto& set = A.transpositions();
  std::vector<Idempotent> axes;
  for (int m = 2; m <= 5; ++m) {
    auto outer = set.parabolic_subset(range(m));
    auto inner = set.parabolic_subset(range(m - 1));
    axes.push_back(A.coset_axis(outer, inner));
  }
  AlgVector total = A.zero_vector();
  for (const auto& x : axes) total = total + x.vector;
  CHECK(total == A.full_identity().vector);
  for (size_t i = 0; i < axes.size(); ++i)
    for (size_t j = i + 1; j < axes.size(); ++j)
      CHECK(A.multiply(axes[i].vector, axes[j].vector).is_zero());
}

TEST_CASE("central charges") {
  SUBCASE("an axis has central charge 1/2") {
    AlgebraSpace A = plain(Family::A, 3, quarter());
    CHECK(A.central_charge(A.axis(0).vector) == Scalar(rat(1, 2)));
  }

  SUBCASE("identity of the A2 algebra: 3/(2+2a) by Gram sum") {
    AlgebraSpace A = plain(Family::A, 2, Scalar::parameter());
    Scalar cc = A.central_charge(A.full_identity().vector);
    Scalar expected = Scalar::constant(rat(3), FieldMode::symbolic) /
                      (Scalar::constant(rat(2), FieldMode::symbolic) +
                       Scalar::constant(rat(2), FieldMode::symbolic) * Scalar::parameter());
    CHECK(cc == expected);
  }

  SUBCASE("x_{A2/A1} at alpha = 1/32 has central charge 21/22") {
    AlgebraSpace A = plain(Family::A, 3, Scalar(rat(1, 32)));
    auto outer = A.transpositions().parabolic_subset(range(3));
    auto inner = A.transpositions().parabolic_subset(range(2));
    Idempotent x = A.coset_axis(outer, inner);
    CHECK(A.central_charge(x.vector) == Scalar(rat(21, 22)));
  }
}

TEST_CASE("coset-axis central charge is the difference of the identity terms") {
  // cc(id_E - id_F) = |E|/(2 + alpha k_E) - |F|/(2 + alpha k_F), symbolically,
  // on the D4-inside-D5 chain
  AlgebraSpace A = plain(Family::D, 5, Scalar::parameter());
  const auto& set = A.transpositions();
  auto inner = set.parabolic_subset(range(4));  // D(D4)
  auto outer = range(set.size());               // all of D(D5)
  Idempotent x = A.coset_axis(outer, inner);
  auto identity_term = [&](const std::vector<int>& subset) {
    Scalar size = Scalar::constant(rat(static_cast<long long>(subset.size())), A.mode());
    Scalar k = Scalar::constant(rat(*set.regularity_degree(subset)), A.mode());
    return size / (Scalar::constant(rat(2), A.mode()) + Scalar::parameter() * k);
  };
  CHECK(A.central_charge(x.vector) == identity_term(outer) - identity_term(inner));
}

TEST_CASE("form pairing of nested identities collapses to the inner one") {
  // <id_E, id_F> = <id_F, id_F> along parabolic chains
  AlgebraSpace A = plain(Family::A, 5, quarter());
  const auto& set = A.transpositions();
  for (int l = 2; l <= 5; ++l)
    for (int m = l + 1; m <= 6; ++m) {
      Idempotent idE = A.subalgebra_identity(set.parabolic_subset(range(m)));
      Idempotent idF = A.subalgebra_identity(set.parabolic_subset(range(l)));
      CHECK(A.gram(idE.vector, idF.vector) == A.gram(idF.vector, idF.vector));
    }
}

TEST_CASE("central charge of identity matches |D|/(2+alpha k)") {
  for (auto [family, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 4}, {Family::D, 4}, {Family::E, 6}}) {
    AlgebraSpace A = plain(family, rank, quarter());
    Rational size(A.transpositions().size());
    Rational k(A.transpositions().id().regularity());
    Rational expected = size / (rat(2) + rat(1, 4) * k);
    CHECK(A.central_charge(A.full_identity().vector) == Scalar(expected));
  }
}

TEST_CASE("mode mismatch between algebra and vectors") {
  AlgebraSpace A = plain(Family::A, 2, quarter());
  AlgVector symbolic(FieldMode::symbolic);
  symbolic.add_term({0, false}, Scalar::one(FieldMode::symbolic));
  CHECK_THROWS_AS(A.multiply(symbolic, symbolic), mode_mismatch);
  CHECK_THROWS_AS(A.gram(symbolic, symbolic), mode_mismatch);
}

TEST_CASE("non-idempotent vectors are rejected by make_idempotent") {
  AlgebraSpace A = plain(Family::A, 2, quarter());
  AlgVector v = A.basis_vector({0, false}).scaled(Scalar(rat(2)));
  CHECK_THROWS_AS(A.make_idempotent(v), std::domain_error);
}

TEST_CASE("eta helpers") {
  CHECK(eta(3, Scalar(rat(1, 4))) == Scalar(rat(3, 10)));
  CHECK(eta(4, Scalar(rat(1, 4))) == Scalar(rat(1, 3)));
  CHECK(eta_hat(4, Scalar(rat(1, 4))) == Scalar(rat(1, 2)));
  CHECK(eta_hat(5, Scalar(rat(1, 4))) == Scalar(rat(4, 7)));
  // eta(2) = alpha for every alpha
  CHECK(eta(2, Scalar::parameter()) == Scalar::parameter());
}

TEST_CASE("form is Frobenius on sampled triples (reported, not asserted by theory)") {
  for (bool hatted : {false, true}) {
    AlgebraSpace A = hatted ? hat(Family::A, 3, quarter()) : plain(Family::A, 3, quarter());
    bool holds = frobenius_holds_on_sample(A, 25, 2024);
    MESSAGE("frobenius on A3 ", (hatted ? "hat" : "plain"), ": ", (holds ? "holds" : "fails"),
            " over the sample");
    CHECK(holds);  // observed to hold; recorded as an empirical outcome
  }
}

TEST_CASE("label serialisation round trip") {
  AlgebraSpace A = hat(Family::A, 2, quarter());
  for (int i = 0; i < A.dimension(); ++i) {
    BasisLabel label = A.label_at(i);
    CHECK(A.label_from_string(A.label_string(label)) == label);
  }
  CHECK(A.label_string({0, false}) == "+[0,1,-1]");
  CHECK(A.label_string({0, true}) == "-[0,1,-1]");
}
