#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace qheis;

namespace {
Scalar rs(long n, long d = 1) { return Scalar::rational(Rational(n, d)); }

TriPoly lam_monomial(const Scalar& c) { return TriPoly::monomial(MonoXLM{0, 1, 0}, c); }
TriPoly mu_monomial(const Scalar& c) { return TriPoly::monomial(MonoXLM{0, 0, 1}, c); }
} // namespace

TEST_CASE("unipoly ring operations") {
  const UniPoly x_plus_1 = UniPoly::from_coeffs({rs(1), rs(1)});
  const UniPoly x_minus_1 = UniPoly::from_coeffs({rs(-1), rs(1)});
  CHECK(x_plus_1 * x_minus_1 == UniPoly::from_coeffs({rs(-1), rs(0), rs(1)}));
  CHECK(x_plus_1 + UniPoly() == x_plus_1);
  CHECK((x_plus_1 - x_plus_1).is_zero());
  CHECK(x_plus_1.eval(rs(3)) == rs(4));
}

TEST_CASE("tripoly ring operations") {
  // (lam - X) * mu = lam*mu - X*mu
  const TriPoly lhs = lam_monomial(rs(1)) - TriPoly::monomial(MonoXLM{1, 0, 0}, rs(1));
  const TriPoly got = lhs * mu_monomial(rs(1));
  TriPoly expect;
  expect.add_term(MonoXLM{0, 1, 1}, rs(1));
  expect.add_term(MonoXLM{1, 0, 1}, rs(-1));
  CHECK(got == expect);
}

TEST_CASE("scale_argument") {
  const QParam q2 = QParam::numeric(Rational(2));
  const UniPoly p = UniPoly::from_coeffs({rs(1), rs(0), rs(1)}); // X^2 + 1
  CHECK(scale_argument(q2, p, 1) == UniPoly::from_coeffs({rs(1), rs(0), rs(4)}));
  CHECK(scale_argument(q2, p, 0) == p);
  const QParam qs = QParam::symbolic();
  const UniPoly x = UniPoly::monomial(1, Scalar::one(QMode::symbolic));
  CHECK(scale_argument(qs, x, 3) ==
        UniPoly::monomial(1, Scalar::laurent(QLaurent::monomial(3, Rational(1)))));
}

TEST_CASE("determinant worked examples") {
  // [[-lam, 1], [-mu, 1]] -> mu - lam
  TriMatrix m2(2);
  m2.at(0, 0) = lam_monomial(rs(-1));
  m2.at(0, 1) = TriPoly::constant(rs(1));
  m2.at(1, 0) = mu_monomial(rs(-1));
  m2.at(1, 1) = TriPoly::constant(rs(1));
  const TriPoly det2 = determinant(m2);
  CHECK(det2 == mu_monomial(rs(1)) - lam_monomial(rs(1)));

  // [[-lam,1,0],[0,-lam,1],[-mu,0,1]] -> lam^2 - mu
  TriMatrix m3(3);
  m3.at(0, 0) = lam_monomial(rs(-1));
  m3.at(0, 1) = TriPoly::constant(rs(1));
  m3.at(1, 1) = lam_monomial(rs(-1));
  m3.at(1, 2) = TriPoly::constant(rs(1));
  m3.at(2, 0) = mu_monomial(rs(-1));
  m3.at(2, 2) = TriPoly::constant(rs(1));
  const TriPoly det3 = determinant(m3);
  CHECK(det3 == TriPoly::monomial(MonoXLM{0, 2, 0}, rs(1)) - mu_monomial(rs(1)));

  TriMatrix id(4);
  for (int i = 0; i < 4; ++i) id.at(i, i) = TriPoly::constant(rs(1));
  CHECK(determinant(id) == TriPoly::constant(rs(1)));
  CHECK(determinant_bareiss(id) == TriPoly::constant(rs(1)));
}

TEST_CASE("determinant: minor expansion vs Bareiss vs evaluation") {
  test::Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const QMode mode = trial % 2 ? QMode::numeric : QMode::symbolic;
    const int n = static_cast<int>(rng.pick(2, 6));
    const TriMatrix m = rng.trimatrix(mode, n);
    const TriPoly a = determinant(m);
    const TriPoly b = determinant_bareiss(m);
    CHECK(a == b);
    for (int pt = 0; pt < 1; ++pt) {
      const Rational x0 = rng.rational(7), l0 = rng.rational(7), m0 = rng.rational(7);
      Rational q0 = rng.nonzero_rational(5);
      const Rational lhs =
          a.eval(Scalar::rational(x0), Scalar::rational(l0), Scalar::rational(m0)).eval_at_q(q0);
      CHECK(lhs == determinant_evaluated(m, x0, l0, m0, q0));
    }
  }
}

TEST_CASE("determinant multilinearity") {
  test::Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = static_cast<int>(rng.pick(2, 5));
    TriMatrix m = rng.trimatrix(QMode::numeric, n);
    const TriPoly base = determinant(m);
    // swapping two rows negates
    TriMatrix swapped = m;
    for (int c = 0; c < n; ++c) std::swap(swapped.at(0, c), swapped.at(1, c));
    CHECK(determinant(swapped) == -base);
    // a repeated row kills it
    TriMatrix repeated = m;
    for (int c = 0; c < n; ++c) repeated.at(1, c) = repeated.at(0, c);
    CHECK(determinant(repeated).is_zero());
  }
}

TEST_CASE("extract_x_coefficients") {
  // lam^2 - mu has X-degree 0
  TriPoly p = TriPoly::monomial(MonoXLM{0, 2, 0}, rs(1)) - mu_monomial(rs(1));
  auto parts = extract_x_coefficients(p);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == BiPoly::monomial(2, 0, rs(1)) - BiPoly::monomial(0, 1, rs(1)));

  // q X^2 (lam^2 - mu) at q = 2 -> [0, 0, 2 lam^2 - 2 mu]
  TriPoly p2;
  p2.add_term(MonoXLM{2, 2, 0}, rs(2));
  p2.add_term(MonoXLM{2, 0, 1}, rs(-2));
  auto parts2 = extract_x_coefficients(p2);
  REQUIRE(parts2.size() == 3);
  CHECK(parts2[0].is_zero());
  CHECK(parts2[1].is_zero());
  CHECK(parts2[2] == BiPoly::monomial(2, 0, rs(2)) - BiPoly::monomial(0, 1, rs(2)));

  CHECK(extract_x_coefficients(TriPoly()).empty());
}

TEST_CASE("extract_x_coefficients round-trips") {
  test::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const TriPoly p = rng.tripoly(trial % 2 ? QMode::numeric : QMode::symbolic, 4);
    TriPoly rebuilt;
    const auto parts = extract_x_coefficients(p);
    for (size_t i = 0; i < parts.size(); ++i)
      rebuilt = rebuilt + TriPoly::from_bipoly(parts[i], static_cast<int>(i));
    CHECK(rebuilt == p);
  }
}

TEST_CASE("tripoly exact division round-trips") {
  test::Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const QMode mode = trial % 2 ? QMode::numeric : QMode::symbolic;
    const TriPoly a = rng.tripoly(mode);
    TriPoly b = rng.tripoly(mode);
    while (b.is_zero()) b = rng.tripoly(mode);
    CHECK((a * b).divide_exact(b) == a);
  }
}

TEST_CASE("q_falling composition stays exact in symbolic mode") {
  const QParam qs = QParam::symbolic();
  const UniPoly r3 = q_falling(qs, 3);
  CHECK(r3.degree() == 3);
  // spot value: r_3({3}_q) = {3}{2}{1} with everything as Laurent polynomials
  const Scalar expect = q_int(qs, 3) * q_int(qs, 2) * q_int(qs, 1);
  CHECK(r3.eval(q_int(qs, 3)) == expect);
}
