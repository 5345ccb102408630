#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "axial/bigint.hpp"
#include "axial/polynomial.hpp"
#include "axial/ratfunc.hpp"
#include "axial/rational.hpp"
#include "axial/scalar.hpp"

using namespace axial;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

RatFunc alpha_poly(std::vector<Rational> ascending) {
  return RatFunc(RatPoly(std::move(ascending)));
}

}  // namespace

TEST_CASE("bigint arithmetic matches int64 on random small values") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  for (int t = 0; t < 2000; ++t) {
    long long a = dist(rng), b = dist(rng);
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
    CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
    CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
    if (b != 0) {
      auto [q, r] = BigInt::divmod(BigInt(a), BigInt(b));
      CHECK(q == BigInt(a / b));
      CHECK(r == BigInt(a % b));
    }
    CHECK((BigInt(a) < BigInt(b)) == (a < b));
  }
}

TEST_CASE("bigint multi-limb multiplication and division") {
  // force the slow path with ~40-digit operands built from powers
  BigInt a = pow(BigInt(1234567891), 4);
  BigInt b = pow(BigInt(987654321), 3);
  BigInt p = a * b;
  auto [q, r] = BigInt::divmod(p, b);
  CHECK(q == a);
  CHECK(r.is_zero());
  auto [q2, r2] = BigInt::divmod(p + BigInt(17), b);
  CHECK(q2 == a);
  CHECK(r2 == BigInt(17));
  CHECK(BigInt::from_string(p.to_string()) == p);
  CHECK(gcd(a * b, b) == b.abs());
}

TEST_CASE("bigint string round trip and signs") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-1002003004).to_string() == "-1002003004");
  CHECK(BigInt::from_string("-000123") == BigInt(-123));
  CHECK_THROWS_AS(BigInt::from_string("12x3"), std::invalid_argument);
  CHECK(BigInt::from_string("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
}

TEST_CASE("rational canonical form") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, -4) == rat(1, 2));
  CHECK(rat(2, -4) == rat(-1, 2));
  CHECK(rat(0, 7) == rat(0));
  CHECK(rat(0).den() == BigInt(1));
  CHECK(rat(3, 1).to_string() == "3");
  CHECK(rat(-3, 6).to_string() == "-1/2");
  CHECK(Rational::from_string("21/22") == rat(21, 22));
  CHECK_THROWS_AS(rat(1, 0), std::domain_error);
}

TEST_CASE("field ops rational examples") {
  CHECK(rat(1, 4) + rat(1, 4) == rat(1, 2));
  CHECK(rat(3, 10) * rat(10, 3) == rat(1));
  CHECK(rat(1, 2) / rat(1, 4) == rat(2));
  CHECK_THROWS_AS(rat(1) / rat(0), std::domain_error);
}

TEST_CASE("field axioms on random rational triples") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> num(-20, 20);
  std::uniform_int_distribution<long long> den(1, 12);
  for (int t = 0; t < 300; ++t) {
    Rational a = rat(num(rng), den(rng)), b = rat(num(rng), den(rng)), c = rat(num(rng), den(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == rat(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == rat(1));
  }
}

TEST_CASE("polynomial gcd reduction") {
  // (a^2 - a, a) -> (a - 1, 1)
  RatFunc f(RatPoly({rat(0), rat(-1), rat(1)}), RatPoly({rat(0), rat(1)}));
  CHECK(f == alpha_poly({rat(-1), rat(1)}));
  // (2a, 2) -> (a, 1)
  RatFunc g(RatPoly({rat(0), rat(2)}), RatPoly({rat(2)}));
  CHECK(g == alpha_poly({rat(0), rat(1)}));
  CHECK_THROWS_AS(RatFunc(RatPoly(rat(1)), RatPoly()), std::domain_error);
}

TEST_CASE("reduce(p*q, q) = reduce(p, 1) for random polynomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> coeff(-4, 4);
  auto random_poly = [&](int max_deg) {
    std::vector<Rational> c;
    int deg = static_cast<int>(rng() % (max_deg + 1));
    for (int i = 0; i <= deg; ++i) c.push_back(rat(coeff(rng)));
    return RatPoly(std::move(c));
  };
  int checked = 0;
  while (checked < 50) {
    RatPoly p = random_poly(4), q = random_poly(3);
    if (q.is_zero()) continue;
    CHECK(RatFunc(p * q, q) == RatFunc(p));
    ++checked;
  }
}

TEST_CASE("eta(3) reduces to 3a/(2+2a) and serialises like it") {
  // alpha*3 / (2 + 2*alpha*(3-2))
  RatFunc eta3(RatPoly({rat(0), rat(3)}), RatPoly({rat(2), rat(2)}));
  CHECK(eta3.to_string() == "(3*a)/(2 + 2*a)");
  CHECK(eta3.den().leading() == rat(1));  // canonical form is monic
  CHECK(eta3.evaluate_at(rat(1, 4)) == rat(3, 10));
}

TEST_CASE("rational function field inverse") {
  RatFunc a = RatFunc::parameter();
  CHECK(a * a.inverse() == RatFunc(rat(1)));
  CHECK((a * RatFunc(rat(3))) / a == RatFunc(rat(3)));
}

TEST_CASE("evaluate_at specialisations") {
  // eta(m) = alpha*m/(2 + 2*alpha*(m-2)) at alpha=1/4, m=3 -> 3/10
  RatFunc eta3(RatPoly({rat(0), rat(3)}), RatPoly({rat(2), rat(2)}));
  CHECK(eta3.evaluate_at(rat(1, 4)) == rat(3, 10));
  // eta_hat(m) = alpha*(m-1)/(1 + alpha*(m-2)) at alpha=1/4, m=4 -> 1/2
  RatFunc eta_hat4(RatPoly({rat(0), rat(3)}), RatPoly({rat(1), rat(2)}));
  CHECK(eta_hat4.evaluate_at(rat(1, 4)) == rat(1, 2));
  // constant-term ratio at 0
  RatFunc h(RatPoly({rat(3), rat(5)}), RatPoly({rat(7), rat(1)}));
  CHECK(h.evaluate_at(rat(0)) == rat(3, 7));
  // pole detection
  RatFunc pole(RatPoly(rat(1)), RatPoly({rat(-1), rat(1)}));  // 1/(a-1)
  CHECK_THROWS_AS(pole.evaluate_at(rat(1)), std::domain_error);
}

TEST_CASE("evaluate_at is a ring homomorphism") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<long long> coeff(-3, 3);
  auto random_ratfunc = [&] {
    std::vector<Rational> n, d;
    for (int i = 0; i <= static_cast<int>(rng() % 3); ++i) n.push_back(rat(coeff(rng)));
    d.push_back(rat(1 + static_cast<long long>(rng() % 3)));
    d.push_back(rat(1));
    return RatFunc(RatPoly(std::move(n)), RatPoly(std::move(d)));
  };
  Rational point = rat(1, 4);
  for (int t = 0; t < 100; ++t) {
    RatFunc f = random_ratfunc(), g = random_ratfunc();
    CHECK((f * g).evaluate_at(point) == f.evaluate_at(point) * g.evaluate_at(point));
    CHECK((f + g).evaluate_at(point) == f.evaluate_at(point) + g.evaluate_at(point));
  }
}

TEST_CASE("numerator of fA(1) - 1/2 vanishes") {
  // fA_alpha(m) = m(2 + alpha(m-3)) / (4(1 + alpha(m-1))(1 + alpha(m-2)))
  // at m = 1: (2 - 2*alpha) / (4*(1)*(1 - alpha))
  RatFunc f(RatPoly({rat(2), rat(-2)}), RatPoly({rat(4), rat(-4)}));
  CHECK(f - RatFunc(rat(1, 2)) == RatFunc());
  CHECK((f - RatFunc(rat(1, 2))).num().is_zero());
}

TEST_CASE("scalar modes never mix") {
  Scalar r(rat(1, 2));
  Scalar s = Scalar::parameter();
  CHECK(r.mode() == FieldMode::rational);
  CHECK(s.mode() == FieldMode::symbolic);
  CHECK_THROWS_AS(r + s, mode_mismatch);
  CHECK_THROWS_AS((void)(r == s), mode_mismatch);
  CHECK(Scalar::constant(rat(1, 2), FieldMode::symbolic).mode() == FieldMode::symbolic);
}

TEST_CASE("scalar canonical equality in both modes") {
  CHECK(Scalar(rat(2, 4)) == Scalar(rat(1, 2)));
  Scalar a = Scalar::parameter();
  Scalar two = Scalar::constant(rat(2), FieldMode::symbolic);
  CHECK((a + a) / two == a);
  CHECK((a * a - a) / a == a - Scalar::one(FieldMode::symbolic));
}

TEST_CASE("scalar field axioms, symbolic mode") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long long> coeff(-3, 3);
  auto random_symbolic = [&] {
    std::vector<Rational> n;
    for (int i = 0; i <= static_cast<int>(rng() % 3); ++i) n.push_back(rat(coeff(rng)));
    return Scalar(RatFunc(RatPoly(std::move(n)), RatPoly({rat(1), rat(1)})));
  };
  for (int t = 0; t < 60; ++t) {
    Scalar a = random_symbolic(), b = random_symbolic(), c = random_symbolic();
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(FieldMode::symbolic));
  }
}

TEST_CASE("scalar serialisation") {
  CHECK(Scalar(rat(21, 22)).to_string() == "21/22");
  CHECK(Scalar(rat(-3)).to_string() == "-3");
  RatFunc eta3(RatPoly({rat(0), rat(3)}), RatPoly({rat(2), rat(2)}));
  CHECK(Scalar(eta3).to_string() == "(3*a)/(2 + 2*a)");
  CHECK(Scalar::parameter().to_string() == "(a)/(1)");
}
