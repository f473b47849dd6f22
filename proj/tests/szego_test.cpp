#include <gtest/gtest.h>

#include <sstream>

#include "opuc/errors.hpp"
#include "opuc/szego.hpp"
#include "support.hpp"

using namespace opuc;

namespace {

OPUCFamily family(const Rational& a, const Rational& b, int N) {
  return build_family(JacobiParams(a, b), szego_family_size(N));
}

const LaurentPoly kX = z_pow(1) + z_pow(-1);

}  // namespace

TEST(SymmetricLaurent, Validation) {
  EXPECT_NO_THROW(SymmetricLaurent(kX * kX));
  EXPECT_THROW(SymmetricLaurent(z_pow(1)), std::invalid_argument);
  const auto s = SymmetricLaurent::from_x_coefficients({Rational(-2), Rational(0), Rational(1)});
  EXPECT_EQ(s.poly(), kX * kX - LaurentPoly(Rational(2)));
  EXPECT_EQ(s.degree(), 2);
  EXPECT_TRUE(s.is_monic());
  EXPECT_EQ(s.x_coefficients(), (std::vector<Rational>{Rational(-2), Rational(0), Rational(1)}));
}

TEST(SzegoMap, Examples) {
  const auto sm = family(Rational(1, 2), Rational(-1, 2), 3);
  EXPECT_EQ(build_p(sm, 1).poly(), kX + LaurentPoly(Rational(1)));
  EXPECT_EQ(build_p(family(Rational(0), Rational(0), 2), 1).poly(), kX);
  for (const auto& [a, b] : fixtures::grid()) EXPECT_EQ(build_q(family(a, b, 1), 0).poly(), LaurentPoly(Rational(1)));
  EXPECT_THROW(build_p(build_family(JacobiParams(Rational(0), Rational(0)), 2), 3), std::out_of_range);
}

TEST(RecCoeffs, Examples) {
  const auto legendre = rec_coeffs(family(Rational(0), Rational(0), 3), 3);
  EXPECT_EQ(legendre.u[1], Rational(4, 3));
  EXPECT_EQ(legendre.b[0], Rational(0));
  const auto sm = rec_coeffs(family(Rational(1, 2), Rational(-1, 2), 3), 3);
  EXPECT_EQ(sm.b[0], Rational(-1));
  const auto free = rec_coeffs(family(Rational(-1, 2), Rational(-1, 2), 5), 5);
  for (int n = 0; n <= 5; ++n) EXPECT_TRUE(free.b[n].is_zero());
  EXPECT_EQ(free.u[1], Rational(2));
  EXPECT_EQ(free.u[2], Rational(1));
}

TEST(RecCoeffs, Csv) {
  std::ostringstream os;
  write_rec_coeffs_csv(os, rec_coeffs(family(Rational(0), Rational(0), 1), 1));
  EXPECT_EQ(os.str().substr(0, 19), "n,b_n,u_n,bt_n,ut_n");
}

TEST(Oracle, Examples) {
  EXPECT_EQ(classical_jacobi_oracle(Rational(0), Rational(0), 0).poly(), LaurentPoly(Rational(1)));
  EXPECT_EQ(classical_jacobi_oracle(Rational(0), Rational(0), 1).poly(), kX);
  EXPECT_EQ(classical_jacobi_oracle(Rational(0), Rational(0), 2).poly(), kX * kX - LaurentPoly(Rational(4, 3)));
  const Rational a(3, 4), b(-1, 3);
  EXPECT_EQ(classical_jacobi_oracle(a, b, 1).poly(),
            kX - LaurentPoly(Rational(2) * (b - a) / (a + b + Rational(2))));
  EXPECT_THROW(classical_jacobi_oracle(Rational(-1), Rational(0), 2), ParamOutOfRange);
}

TEST(OracleProperty, RecurrenceOracleMatchesExplicitSum) {
  fixtures::Gen gen(71);
  for (int trial = 0; trial < 30; ++trial) {
    const Rational a = gen.jacobi_param(), b = gen.jacobi_param();
    for (int n = 0; n <= 8; ++n) {
      EXPECT_EQ(classical_jacobi_oracle(a, b, n).poly(), fixtures::jacobi_explicit(a, b, n)) << a << "," << b << "," << n;
    }
  }
}

TEST(SzegoMap, ClassicalMatchOnGrid) {
  for (const auto& [a, b] : fixtures::grid()) {
    const auto fam = family(a, b, 12);
    EXPECT_TRUE(verify_classical_match(fam, 12).passed()) << a << "," << b;
    for (int n = 0; n <= 12; ++n) {
      EXPECT_EQ(build_p(fam, n).poly(), fixtures::jacobi_explicit(a, b, n));
      EXPECT_EQ(build_q(fam, n).poly(), fixtures::jacobi_explicit(a + Rational(1), b + Rational(1), n));
    }
  }
}

TEST(SzegoMap, ChainsTransformsAndDifferentialEquation) {
  for (const auto& [a, b] : fixtures::grid()) {
    const auto fam = family(a, b, 8);
    const auto pair = build_szego_pair(fam, 8);
    EXPECT_TRUE(verify_three_term(pair).passed()) << a << "," << b;
    EXPECT_TRUE(verify_rec_coeffs_fit(pair).passed()) << a << "," << b;
    EXPECT_TRUE(verify_transforms(fam, pair, 8).passed()) << a << "," << b;
    EXPECT_TRUE(verify_symmetry(pair).passed()) << a << "," << b;
    EXPECT_TRUE(verify_dep_and_pq_identity(fam, 8).passed()) << a << "," << b;
  }
}

TEST(SzegoMap, ThreeTermAtAsymmetricParameters) {
  const auto fam = family(Rational(5, 2), Rational(1, 2), 15);
  EXPECT_TRUE(verify_three_term(build_szego_pair(fam, 15)).passed());
}

TEST(SzegoMap, PositivityOfRecurrenceCoefficients) {
  fixtures::Gen gen(72);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rc = rec_coeffs(family(gen.jacobi_param(), gen.jacobi_param(), 10), 10);
    for (int n = 1; n <= 10; ++n) {
      EXPECT_GT(rc.u[n], Rational(0));
      EXPECT_GT(rc.ut[n], Rational(0));
    }
  }
}

TEST(SzegoMap, HandExpansions) {
  const auto fam = family(Rational(1, 2), Rational(-1, 2), 2);
  const auto& a = fam.a;
  const LaurentPoly d = z_pow(1) - z_pow(-1);
  const auto P = [&](int n) { return build_p(fam, n).poly(); };
  // (z - 1/z)^2 Q_0 = P_2 + (a_2 + a_0)(1 - a_1) P_1 - (1 - a_1)(1 - a_{-1})(1 - a_0^2) P_0.
  const Rational one(1);
  EXPECT_EQ(d * d, P(2) + (a[2] + a[0]) * (one - a[1]) * P(1) - (one - a[1]) * Rational(2) * (one - a[0] * a[0]) * P(0));
  // psi_1 = (P_1 + (z - 1/z) Q_0) / 2 and P_1 = psi_2 + (1 + a_1) psi_1.
  EXPECT_EQ(fam.psi[1], Rational(1, 2) * (P(1) + d * build_q(fam, 0).poly()));
  EXPECT_EQ(P(1), fam.psi[2] + (one + a[1]) * fam.psi[1]);
}

TEST(SzegoMap, PsiFromPPNotesTheSignConvention) {
  const auto fam = family(Rational(1), Rational(2), 4);
  const auto report = verify_transforms(fam, build_szego_pair(fam, 4), 4);
  const auto* check = report.find("psi-from-PP");
  ASSERT_NE(check, nullptr);
  EXPECT_TRUE(check->passed());
  EXPECT_FALSE(check->notes.empty());
}

TEST(SzegoMap, PairNeedsLongEnoughFamily) {
  EXPECT_THROW(build_szego_pair(build_family(JacobiParams(Rational(0), Rational(0)), 5), 3), std::invalid_argument);
}
