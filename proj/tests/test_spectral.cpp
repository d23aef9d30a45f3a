#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qheis/spectral.hpp"
#include "support.hpp"

using namespace qheis;

namespace {
AlgebraElement elem_ba(const QParam& q) {
  return multiply(AlgebraElement::gen_b(q), AlgebraElement::gen_a(q));
}

AlgebraElement b_minus(const QParam& q, long c) {
  return AlgebraElement::gen_b(q) - AlgebraElement::constant(q, Scalar::from_int(q.mode, c));
}
} // namespace

TEST_CASE("band profiles of the generators") {
  const QParam q = QParam::numeric(Rational(2));
  const Scalar one = Scalar::one(q.mode);

  const BandProfile a = band_profile(AlgebraElement::gen_a(q));
  CHECK(a.occurring == std::set<int>{-1});
  CHECK(a.beta.at(-1) == UniPoly::monomial(1, one)); // beta_{-1}(Z) = Z
  CHECK(a.with_differentiation.at(-1));

  const BandProfile b = band_profile(AlgebraElement::gen_b(q));
  CHECK(b.occurring == std::set<int>{1});
  CHECK(b.beta.at(1) == UniPoly::constant(one));
  CHECK_FALSE(b.with_differentiation.at(1));

  const BandProfile ba = band_profile(elem_ba(q));
  CHECK(ba.occurring == std::set<int>{0});
  CHECK(ba.beta.at(0) == UniPoly::monomial(1, one));
  CHECK(ba.d_max == 0);
  CHECK(ba.d_min == 0);

  CHECK_THROWS_AS(band_profile(AlgebraElement::zero(q)), Error);
}

TEST_CASE("boundary zeros") {
  const QParam q = QParam::numeric(Rational(2));
  const BoundaryZeros za = boundary_zeros(AlgebraElement::gen_a(q));
  CHECK(za.upper == std::vector<long>{0}); // {k}_2 = 0 iff k = 0
  CHECK(za.lower == std::vector<long>{0});

  const BoundaryZeros zb = boundary_zeros(AlgebraElement::gen_b(q));
  CHECK(zb.upper.empty());
  CHECK(zb.lower.empty());

  // BA - 1: beta_0(Z) = Z - 1, zero at {k}_2 = 1, i.e. k = 1
  const AlgebraElement bam1 = elem_ba(q) - AlgebraElement::one(q);
  const BoundaryZeros zc = boundary_zeros(bam1);
  CHECK(zc.upper == std::vector<long>{1});

  CHECK_THROWS_AS(boundary_zeros(AlgebraElement::gen_a(QParam::symbolic())), Error);
}

TEST_CASE("boundary zeros at q = 1 use the divisor test") {
  const QParam q1 = QParam::numeric(Rational(1));
  // beta_0 of BA - 6 at q = 1 is k - 6
  const AlgebraElement e = elem_ba(q1) - AlgebraElement::constant(q1, Scalar::from_int(q1.mode, 6));
  CHECK(boundary_zeros(e).upper == std::vector<long>{6});
}

TEST_CASE("kernel dimensions of the worked elements") {
  const QParam q = QParam::numeric(Rational(2));
  CHECK(kernel_dimension(AlgebraElement::gen_a(q)).dim == 1); // constants
  CHECK(kernel_dimension(AlgebraElement::gen_b(q)).dim == 0); // M injective
  const KernelReport r = kernel_dimension(b_minus(q, 2));
  CHECK(r.dim == 1);
  CHECK(r.lower == 1);
  CHECK(r.d_max == 1);
  CHECK(r.d_min == 0);
  CHECK_THROWS_AS(kernel_dimension(AlgebraElement::zero(q)), Error);
  CHECK_THROWS_AS(kernel_dimension(AlgebraElement::gen_a(QParam::symbolic())), Error);
}

TEST_CASE("kernel basis windows") {
  const QParam q2 = QParam::numeric(Rational(2));

  // ker A = constants
  auto basis = kernel_basis_window(AlgebraElement::gen_a(q2), -10, 10);
  REQUIRE(basis.size() == 1);
  for (long n = -10; n <= 10; ++n)
    CHECK(basis[0].at(n) == (n == 0 ? Scalar::one(QMode::numeric) : Scalar()));

  // ker BA = constants as well
  basis = kernel_basis_window(elem_ba(q2), -10, 10);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].at(0).is_one());
  CHECK(basis[0].at(3).is_zero());

  // ker (B - 2) at q = 3 is Psi_{2,1}: coefficients 2^{-n}
  const QParam q3 = QParam::numeric(Rational(3));
  basis = kernel_basis_window(b_minus(q3, 2), -8, 8);
  REQUIRE(basis.size() == 1);
  for (long n = -8; n <= 8; ++n) CHECK(basis[0].at(n).rat() == rat_pow(Rational(2), -n));

  // each window really is annihilated on its trusted interval
  const LaurentWindow img = act(b_minus(q3, 2), basis[0]);
  CHECK(window_is_zero(img));
}

TEST_CASE("spectrum samples") {
  const QParam q = QParam::numeric(Rational(2));
  // sigma(BA) starts 0, 1, 3, 7, 15 = {k}_2
  const std::vector<Rational> expect{Rational(0), Rational(1), Rational(3), Rational(7),
                                     Rational(15)};
  CHECK(spectrum_sample(elem_ba(q), 5) == expect);

  // every lambda is an eigenvalue of A; three samples must all certify
  CHECK(spectrum_sample(AlgebraElement::gen_a(q), 3).size() == 3);

  // shifted spectrum: BA + 1 gives {k}_2 + 1
  const AlgebraElement ba1 = elem_ba(q) + AlgebraElement::one(q);
  const std::vector<Rational> expect2{Rational(1), Rational(2), Rational(4)};
  CHECK(spectrum_sample(ba1, 3) == expect2);

  CHECK_THROWS_AS(spectrum_sample(AlgebraElement::one(q), 1), Error);
}

TEST_CASE("uniform bound on eigenspace dimensions") {
  const QParam q = QParam::numeric(Rational(2));
  CHECK(uniform_bound_check(elem_ba(q), {Rational(0), Rational(1), Rational(3)}));
  CHECK(uniform_bound_check(AlgebraElement::gen_a(q), {Rational(0), Rational(5)}));
  const AlgebraElement b2a =
      multiply(AlgebraElement::gen_b(q), multiply(AlgebraElement::gen_b(q), AlgebraElement::gen_a(q)));
  CHECK(uniform_bound_check(b2a, {Rational(0)}));
}

TEST_CASE("negative rational q is admissible") {
  const QParam q = QParam::numeric(Rational(-2));
  CHECK(kernel_dimension(AlgebraElement::gen_a(q)).dim == 1);
  CHECK(kernel_dimension(b_minus(q, 2)).dim == 1);
  // {k}_{-2} = 0 only at k = 0
  CHECK(boundary_zeros(AlgebraElement::gen_a(q)).upper == std::vector<long>{0});
}

TEST_CASE("kernel dimension sits between the a-priori bounds") {
  test::Rng rng(555);
  int checked = 0;
  for (const auto& q : test::numeric_qs()) {
    for (int i = 0; i < 13 && checked < 50; ++i) {
      const AlgebraElement p = rng.nonzero_element(q, 3, 3, 3);
      const KernelReport r = kernel_dimension(p);
      CHECK(r.lower <= r.dim);
      CHECK(r.dim <= r.upper);
      CHECK(r.upper <= r.lower + *p.order());
      ++checked;
    }
  }
  CHECK(checked == 50);
}

TEST_CASE("window stability: a padded finite submatrix has the same nullity") {
  test::Rng rng(777);
  int checked = 0;
  for (const auto& q : test::numeric_qs()) {
    for (int i = 0; i < 40 && checked < 20; ++i) {
      const AlgebraElement p = rng.nonzero_element(q, 3, 3, 3);
      const BandProfile bp = band_profile(p);
      if (bp.d_max == bp.d_min) continue;
      const FiniteSubmatrix tight = finite_submatrix(p);
      const FiniteSubmatrix wide = finite_submatrix(p, 5);
      CHECK(tight.m.cols() - tight.m.rank() == wide.m.cols() - wide.m.rank());
      ++checked;
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("kernel windows are annihilated and independent") {
  test::Rng rng(888);
  for (const auto& q : test::numeric_qs()) {
    for (int i = 0; i < 8; ++i) {
      const AlgebraElement p = rng.nonzero_element(q, 2, 2, 2);
      const KernelReport r = kernel_dimension(p);
      if (r.dim == 0) continue;
      long lo = -24, hi = 24;
      if (r.d_max != r.d_min) {
        const FiniteSubmatrix fs = finite_submatrix(p);
        lo = std::min(lo, fs.col_lo - 4);
        hi = std::max(hi, fs.col_hi + 4);
      }
      const auto basis = kernel_basis_window(p, lo, hi);
      CHECK(static_cast<long>(basis.size()) == r.dim);
      for (const auto& v : basis) CHECK(window_is_zero(act(p, v)));
      // independence: rank over the common trusted interval
      RationalMatrix m(static_cast<int>(basis.size()), static_cast<int>(hi - lo + 1));
      for (size_t row = 0; row < basis.size(); ++row)
        for (long n = lo; n <= hi; ++n)
          m.at(static_cast<int>(row), static_cast<int>(n - lo)) = basis[row].at(n).rat();
      CHECK(m.rank() == static_cast<int>(basis.size()));
    }
  }
}

TEST_CASE("action through beta values matches the direct action") {
  test::Rng rng(999);
  for (const auto& q : test::numeric_qs()) {
    for (int i = 0; i < 10; ++i) {
      const AlgebraElement p = rng.nonzero_element(q, 3, 3, 2);
      const BandProfile bp = band_profile(p);
      for (long k = -8; k <= 8; ++k) {
        const test::Series direct = test::oracle_act(p, test::monomial_series(q, k));
        test::Series via_beta;
        for (const auto& [d, poly] : bp.beta)
          test::series_add(via_beta, d + k, Scalar::rational(beta_value(q, bp, d, k)));
        CHECK(direct == via_beta);
      }
    }
  }
}

TEST_CASE("nonconstant beta_0 takes each value at most m times") {
  test::Rng rng(1234);
  for (const auto& q : test::numeric_qs()) {
    for (int trial = 0; trial < 10; ++trial) {
      // random element supported in homogeneous degree zero only
      AlgebraElement p = AlgebraElement::zero(q);
      const int order = static_cast<int>(rng.pick(1, 3));
      for (int j = 0; j <= order; ++j) {
        long c = rng.pick(-3, 3);
        if (j == order && c == 0) c = 1;
        p = p + AlgebraElement::monomial(q, j, UniPoly::monomial(j, Scalar::from_int(q.mode, c)));
      }
      const BandProfile bp = band_profile(p);
      REQUIRE(bp.occurring == std::set<int>{0});
      const int m = *p.order();
      std::map<Rational, int> counts;
      for (long k = -20; k <= 20; ++k) counts[beta_value(q, bp, 0, k)]++;
      for (const auto& [value, count] : counts) CHECK(count <= m);
    }
  }
}
