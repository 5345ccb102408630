#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "axial/fusion.hpp"

using namespace axial;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

AlgebraSpace plain(Family f, int rank, const Scalar& alpha) {
  return AlgebraSpace::construct(TranspositionSet::build({f, rank}), alpha, false);
}

std::vector<int> range(int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("empirical axis table equals the three-eigenvalue reference exactly") {
  AlgebraSpace A = plain(Family::A, 2, Scalar(rat(1, 4)));
  Eigendecomposition dec = eigendecompose(A, A.axis(0));
  FusionTable table = fusion_table(A, dec);
  FusionTable reference = phi3_table(Scalar(rat(1, 4)));
  CHECK(table == reference);
  CHECK(table.contained_in(reference));
  CHECK(table.entry_values(Scalar(rat(1)), Scalar(rat(0))).empty());
  CHECK(table.entry_values(Scalar(rat(1, 4)), Scalar(rat(1, 4))) ==
        std::set<Scalar>{Scalar(rat(0)), Scalar(rat(1))});
}

TEST_CASE("identity element has the associative table on its spectrum") {
  AlgebraSpace A = plain(Family::A, 3, Scalar(rat(1, 4)));
  Eigendecomposition dec = eigendecompose(A, A.full_identity());
  FusionTable table = fusion_table(A, dec);
  REQUIRE(table.size() == 1);
  CHECK(table.eigenvalues()[0] == Scalar(rat(1)));
  CHECK(table.entry_values(Scalar(rat(1)), Scalar(rat(1))) == std::set<Scalar>{Scalar(rat(1))});
}

TEST_CASE("coset axis table is contained in the five-eigenvalue reference") {
  // x_{Sym(4)/Sym(3)} inside the quarter A5 algebra
  AlgebraSpace A = plain(Family::A, 5, Scalar(rat(1, 4)));
  const auto& set = A.transpositions();
  Idempotent x = A.coset_axis(set.parabolic_subset(range(4)), set.parabolic_subset(range(3)));
  Eigendecomposition dec = eigendecompose(A, x);
  REQUIRE(dec.complete);
  FusionTable table = fusion_table(A, dec);
  FusionTable reference =
      coset_axis_table(eta(4, Scalar(rat(1, 4))), eta(3, Scalar(rat(1, 4))), FieldMode::rational);
  CHECK(table.contained_in(reference));
}

TEST_CASE("gradings of the three-eigenvalue rules") {
  FusionTable table = phi3_table(Scalar(rat(1, 4)));
  auto gradings = find_z2_gradings(table);
  REQUIRE(gradings.size() == 2);
  bool found_standard = false;
  for (const Grading& g : gradings) {
    if (g.trivial()) continue;
    CHECK(g.minus == std::set<int>{2});  // {alpha} is the odd part
    CHECK(g.plus == std::set<int>{0, 1});
    found_standard = true;
  }
  CHECK(found_standard);
}

TEST_CASE("five-eigenvalue reference admits only the trivial grading") {
  FusionTable reference =
      coset_axis_table(eta(4, Scalar(rat(1, 4))), eta(3, Scalar(rat(1, 4))), FieldMode::rational);
  auto gradings = find_z2_gradings(reference);
  REQUIRE(gradings.size() == 1);
  CHECK(gradings[0].trivial());
}

TEST_CASE("associative rules admit only the trivial grading") {
  auto gradings = find_z2_gradings(phi_ass_table(FieldMode::rational));
  REQUIRE(gradings.size() == 1);
  CHECK(gradings[0].trivial());
}

TEST_CASE("Miyamoto involution of an axis") {
  AlgebraSpace A = plain(Family::A, 2, Scalar(rat(1, 4)));
  const auto& set = A.transpositions();
  for (int d = 0; d < set.size(); ++d) {
    Eigendecomposition dec = eigendecompose(A, A.axis(d));
    FusionTable table = fusion_table(A, dec);
    Grading grading;
    for (int b = 0; b < table.size(); ++b)
      (table.eigenvalues()[b] == A.alpha() ? grading.minus : grading.plus).insert(b);
    ExactMatrix tau = miyamoto_involution(A, dec, grading);
    // fixes d, swaps the other two axes
    for (int c = 0; c < set.size(); ++c) {
      int target = set.conjugate(c, d);
      for (int row = 0; row < set.size(); ++row)
        CHECK(tau.at(row, c) == (row == target ? Scalar(rat(1)) : Scalar(rat(0))));
    }
  }
}

TEST_CASE("trivial grading gives the identity involution") {
  AlgebraSpace A = plain(Family::A, 2, Scalar(rat(1, 4)));
  Eigendecomposition dec = eigendecompose(A, A.axis(0));
  Grading trivial;
  for (int b = 0; b < static_cast<int>(dec.pairs.size()); ++b) trivial.plus.insert(b);
  CHECK(miyamoto_involution(A, dec, trivial) ==
        ExactMatrix::identity(A.dimension(), FieldMode::rational));
}

TEST_CASE("Miyamoto involutions square to the identity on A3") {
  AlgebraSpace A = plain(Family::A, 3, Scalar(rat(1, 4)));
  for (int d = 0; d < A.transpositions().size(); ++d) {
    Eigendecomposition dec = eigendecompose(A, A.axis(d));
    FusionTable table = fusion_table(A, dec);
    Grading grading;
    for (int b = 0; b < table.size(); ++b)
      (table.eigenvalues()[b] == A.alpha() ? grading.minus : grading.plus).insert(b);
    ExactMatrix tau = miyamoto_involution(A, dec, grading);
    CHECK(tau * tau == ExactMatrix::identity(A.dimension(), FieldMode::rational));
  }
}

TEST_CASE("axial representation property") {
  CHECK(check_axial_representation(plain(Family::A, 3, Scalar(rat(1, 4)))));
  CHECK(check_axial_representation(plain(Family::A, 2, Scalar(rat(1, 3)))));
  CHECK(check_axial_representation(plain(Family::D, 4, Scalar(rat(1, 4)))));
}

TEST_CASE("primitivity") {
  SUBCASE("axes are primitive") {
    AlgebraSpace A = plain(Family::A, 3, Scalar(rat(1, 4)));
    CHECK(primitive(eigendecompose(A, A.axis(0))));
  }

  SUBCASE("consecutive coset axis is primitive") {
    AlgebraSpace A = plain(Family::A, 4, Scalar(rat(1, 4)));
    const auto& set = A.transpositions();
    Idempotent x = A.coset_axis(set.parabolic_subset(range(4)), set.parabolic_subset(range(3)));
    CHECK(primitive(eigendecompose(A, x)));
  }

  SUBCASE("skipping a step loses primitivity with 1-eigenspace dim 3") {
    AlgebraSpace A = plain(Family::A, 5, Scalar(rat(1, 4)));
    const auto& set = A.transpositions();
    Idempotent x = A.coset_axis(set.parabolic_subset(range(5)), set.parabolic_subset(range(3)));
    Eigendecomposition dec = eigendecompose(A, x);
    CHECK(!primitive(dec));
    const EigenPair* one = dec.find(Scalar(rat(1)));
    REQUIRE(one != nullptr);
    CHECK(one->dim() == 3);
  }
}

TEST_CASE("fusion table text rendering is aligned and deterministic") {
  FusionTable table = phi_ass_table(FieldMode::rational);
  std::string text = table.to_text();
  CHECK(text == table.to_text());
  CHECK(text.find("{1}") != std::string::npos);
  CHECK(text.find("{0}") != std::string::npos);
}
