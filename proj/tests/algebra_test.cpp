#include <gtest/gtest.h>

#include "opuc/algebra.hpp"
#include "opuc/dunkl.hpp"
#include "opuc/errors.hpp"
#include "support.hpp"

using namespace opuc;

TEST(Canonical, RoundTrip) {
  fixtures::Gen gen(61);
  for (int trial = 0; trial < 200; ++trial) {
    const CanonicalForm c{gen.rational(), gen.rational(), gen.nonzero(), gen.rational()};
    if ((c.alpha + c.beta + Rational(1)).is_zero()) continue;
    const auto back = canonicalize(relations_of(c));
    EXPECT_EQ(back.alpha, c.alpha);
    EXPECT_EQ(back.beta, c.beta);
    EXPECT_EQ(back.mu, c.mu);
    EXPECT_EQ(back.nu, c.nu);
  }
}

TEST(Canonical, IdentityScaling) {
  const AlgebraParams g{Rational(-2), Rational(-2), Rational(-1), Rational(-1)};
  // {K,M1} = -2 M1 - 2 I means alpha+beta+1 = 2 with mu = 1, nu = 0 after the shift.
  const auto c = canonicalize(g);
  EXPECT_EQ(c.mu, Rational(1));
  EXPECT_EQ(c.alpha + c.beta + Rational(1), Rational(2));
  EXPECT_EQ(c.alpha - c.beta, Rational(-1));
  EXPECT_EQ(c.nu, Rational(2));
}

TEST(Canonical, Degenerate) {
  EXPECT_THROW(canonicalize({Rational(1), Rational(2), Rational(1), Rational(0)}), Degenerate);
  EXPECT_THROW(canonicalize({Rational(1), Rational(0), Rational(2), Rational(0)}), Degenerate);
  // The free case has alpha + beta + 1 = 0, so g2 vanishes.
  EXPECT_THROW(canonicalize(relations_of({Rational(-1, 2), Rational(-1, 2), Rational(1), Rational(0)})), Degenerate);
}

TEST(CentralExtension, Constants) {
  const auto ext = central_extension(Rational(1), Rational(2));
  EXPECT_EQ(ext.qj.a, Rational(2));
  EXPECT_EQ(ext.qj.d, Rational(0));
  EXPECT_EQ(ext.qj.e1, Rational(-8));
  EXPECT_EQ(ext.qj.c, Rational(15));
  EXPECT_EQ(ext.qj.e2, Rational(-8));
  EXPECT_EQ(ext.m1_coefficient, Rational(2));
}

TEST(Representation, ReproducesClosedForms) {
  for (const auto& [a, b] : fixtures::grid()) {
    const auto rep = derive_representation(a, b, 40);
    ASSERT_EQ(rep.lambda.size(), 41u);
    EXPECT_EQ(rep.lambda[0], Rational(0));
    for (int n = 0; n <= 40; ++n) {
      EXPECT_EQ(rep.lambda[n], lambda_n(a, b, n)) << n;
      EXPECT_EQ(rep.a[n], verblunsky_jacobi(a, b, n)) << n;
    }
  }
}

TEST(Representation, AdjacentEigenvalueSums) {
  const Rational a(3, 7), b(-2, 5);
  const auto rep = derive_representation(a, b, 20);
  for (int k = 0; 2 * k + 2 <= 20; ++k) {
    EXPECT_EQ(rep.lambda[2 * k] + rep.lambda[2 * k + 1], a + b + Rational(2));
    EXPECT_EQ(rep.lambda[2 * k + 1] + rep.lambda[2 * k + 2], a + b + Rational(1));
  }
}

TEST(Representation, DegenerateParameter) {
  // alpha = -1, beta = 0 forces a_0 = 1.
  EXPECT_THROW(derive_representation(Rational(-1), Rational(0), 3), Degenerate);
}

TEST(RepresentationProperty, RandomParameters) {
  fixtures::Gen gen(62);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = gen.jacobi_param(), b = gen.jacobi_param();
    const auto rep = derive_representation(a, b, 12);
    for (int n = 0; n <= 12; ++n) {
      EXPECT_EQ(rep.lambda[n], lambda_n(a, b, n));
      EXPECT_EQ(rep.a[n], verblunsky_jacobi(a, b, n));
    }
  }
}

TEST(Relations, BothRealizationsOnGrid) {
  for (const auto& [a, b] : fixtures::grid()) {
    EXPECT_TRUE(verify_relations_functional(a, b, 10).passed()) << a << "," << b;
    EXPECT_TRUE(verify_relations_matrix(a, b, 21).passed()) << a << "," << b;
    EXPECT_TRUE(verify_central_extension(a, b, 10, 21).passed()) << a << "," << b;
  }
}

TEST(Relations, MatrixChecksCoverInteriorRows) {
  const auto report = verify_relations_matrix(Rational(1), Rational(2), 21);
  for (const auto& c : report.checks()) {
    EXPECT_GE(c.indices_checked.size(), 19u) << c.identity;
    EXPECT_LE(c.skipped.size(), 2u) << c.identity;
  }
}

TEST(Relations, WrongConstantsFail) {
  // The relations hold for one (alpha, beta) only; K from a different pair breaks them.
  const auto f = functional_realization(Rational(1), Rational(2));
  const auto g = functional_realization(Rational(1), Rational(3));
  const LaurentPoly z3 = z_pow(3);
  const LaurentPoly lhs = f.K(f.M1(z3)) + f.M1(f.K(z3));
  const LaurentPoly rhs = Rational(4) * (f.M1(z3) - z3);
  EXPECT_EQ(lhs, rhs);
  EXPECT_NE(g.K(g.M1(z3)) + g.M1(g.K(z3)), rhs);
}

TEST(Realization, MatrixKIsDiagonalEigenvalues) {
  const auto m = matrix_realization(Rational(1, 2), Rational(-1, 2), 6);
  for (std::size_t n = 0; n < 6; ++n) EXPECT_EQ(m.K.at(n, n), lambda_n(Rational(1, 2), Rational(-1, 2), int(n)));
  EXPECT_EQ(m.K.bandwidth(), 0u);
}

TEST(Realization, CrossCheckOnGrid) {
  for (const auto& [a, b] : fixtures::grid()) {
    EXPECT_TRUE(verify_xy_cross_realization(build_family(JacobiParams(a, b), 16)).passed()) << a << "," << b;
  }
}

TEST(YEigen, OnGrid) {
  for (const auto& [a, b] : fixtures::grid()) {
    const auto fam = build_family(JacobiParams(a, b), szego_family_size(10));
    const auto pair = build_szego_pair(fam, 10);
    const auto report = y_eigencheck(fam, pair);
    EXPECT_TRUE(report.passed()) << a << "," << b;
    EXPECT_NE(report.find("YF"), nullptr);
  }
}
