#include <gtest/gtest.h>

#include <sstream>

#include "opuc/errors.hpp"
#include "opuc/opuc.hpp"
#include "support.hpp"

using namespace opuc;

namespace {

// Monic Phi_n by Gram-Schmidt against the moments sigma_{k} of a symmetric
// weight: solve sum_k c_k sigma_{k-j} = -sigma_{n-j}, j < n, exactly.
LaurentPoly gram_schmidt_phi(const std::function<Rational(int)>& sigma, int n) {
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(n + 1));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) m[j][k] = sigma(k - j);
    m[j][n] = -sigma(n - j);
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (m[piv][c].is_zero()) ++piv;
    std::swap(m[piv], m[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[c][c];
      for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  LaurentPoly phi = z_pow(n);
  for (int k = 0; k < n; ++k) phi.add_term(k, m[k][n] / m[k][k]);
  return phi;
}

Rational single_moment_sigma(int k) {
  if (k == 0) return Rational(1);
  if (k == 1 || k == -1) return Rational(-1, 2);
  return Rational(0);
}

}  // namespace

TEST(JacobiParams, Domain) {
  EXPECT_NO_THROW(JacobiParams(Rational(-1, 2), Rational(-1, 2)));
  EXPECT_THROW(JacobiParams(Rational(-1), Rational(0)), ParamOutOfRange);
  EXPECT_THROW(JacobiParams(Rational(0), Rational(-3, 2)), ParamOutOfRange);
  EXPECT_TRUE(JacobiParams(Rational(-1, 2), Rational(-1, 2)).is_free());
  EXPECT_TRUE(JacobiParams(Rational(1, 2), Rational(-1, 2)).is_single_moment());
}

TEST(Verblunsky, Examples) {
  const JacobiParams sm(Rational(1, 2), Rational(-1, 2));
  for (int n = 0; n <= 50; ++n) EXPECT_EQ(verblunsky_jacobi(sm, n), Rational(-1, n + 2)) << n;
  const JacobiParams free(Rational(-1, 2), Rational(-1, 2));
  for (int n = 0; n <= 20; ++n) EXPECT_TRUE(verblunsky_jacobi(free, n).is_zero());
  EXPECT_EQ(verblunsky_jacobi(JacobiParams(Rational(0), Rational(0)), 1), Rational(-1, 3));
  EXPECT_EQ(verblunsky_jacobi(JacobiParams(Rational(0), Rational(0)), 0), Rational(0));
}

TEST(Verblunsky, RawOverloadOutsideDomain) {
  EXPECT_THROW(verblunsky_jacobi(Rational(-1), Rational(-1), 0), ParamOutOfRange);
  EXPECT_EQ(verblunsky_jacobi(Rational(-3), Rational(2), 0), Rational(5));
}

TEST(VerblunskyProperty, InsideUnitIntervalOverDomain) {
  fixtures::Gen gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const JacobiParams p(gen.jacobi_param(), gen.jacobi_param());
    for (int n = 0; n <= 30; ++n) EXPECT_LT(verblunsky_jacobi(p, n).abs(), Rational(1));
  }
}

TEST(Star, Examples) {
  EXPECT_EQ(star(LaurentPoly(Rational(1)), 0), LaurentPoly(Rational(1)));
  const LaurentPoly f = z_pow(1) + LaurentPoly(Rational(1, 2));
  EXPECT_EQ(star(f, 1), LaurentPoly(Rational(1)) + Rational(1, 2) * z_pow(1));
  EXPECT_EQ(star(star(f, 1), 1), f);
  EXPECT_THROW(star(z_pow(-1), 2), BadSupport);
  EXPECT_THROW(star(z_pow(3), 2), BadSupport);
}

TEST(Szego, AdvanceExamples) {
  const LaurentPoly phi1 = szego_advance(LaurentPoly(Rational(1)), Rational(-1, 2), 0);
  EXPECT_EQ(phi1, z_pow(1) + LaurentPoly(Rational(1, 2)));
  const LaurentPoly phi2 = szego_advance(phi1, Rational(-1, 3), 1);
  EXPECT_EQ(phi2, Rational(1, 3) * (LaurentPoly(Rational(1)) + Rational(2) * z_pow(1) + Rational(3) * z_pow(2)));
  EXPECT_EQ(szego_advance(phi2, Rational(0), 2), mul_z(phi2));
}

TEST(SingleMoment, ClosedForm) {
  EXPECT_EQ(single_moment_phi(0), LaurentPoly(Rational(1)));
  EXPECT_EQ(single_moment_phi(3), Rational(1, 4) * (LaurentPoly(Rational(1)) + Rational(2) * z_pow(1) +
                                                    Rational(3) * z_pow(2) + Rational(4) * z_pow(3)));
  const auto fam = build_family(JacobiParams(Rational(1, 2), Rational(-1, 2)), 40);
  for (int n = 0; n <= 40; ++n) EXPECT_EQ(fam.phi[n], single_moment_phi(n)) << n;
  EXPECT_EQ(fam.h[1], Rational(3, 4));
  EXPECT_EQ(fam.psi[2], LaurentPoly::parse("z^-1 + 2/3 + 1/3*z"));
}

TEST(SingleMoment, GramSchmidtOracle) {
  const auto fam = build_family(JacobiParams(Rational(1, 2), Rational(-1, 2)), 12);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(fam.phi[n], gram_schmidt_phi(single_moment_sigma, n)) << n;
}

TEST(Family, FreeCaseIsTheCmvBasis) {
  const auto fam = build_family(JacobiParams(Rational(-1, 2), Rational(-1, 2)), 20);
  for (int n = 0; n <= 20; ++n) {
    EXPECT_EQ(fam.phi[n], z_pow(n));
    EXPECT_EQ(fam.psi[n], chi_basis(n));
    EXPECT_EQ(fam.h[n], Rational(1));
  }
}

TEST(Cmv, BasisAndDual) {
  EXPECT_EQ(chi_basis(0), LaurentPoly(Rational(1)));
  EXPECT_EQ(chi_basis(3), z_pow(2));
  EXPECT_EQ(chi_basis(4), z_pow(-2));
  EXPECT_EQ(chi_star(1), z_pow(-1));
  EXPECT_EQ(chi_star(1), chi_basis(2));
  for (int k = -10; k <= 10; ++k) EXPECT_EQ(chi_basis(chi_index(k)), z_pow(k));
  const auto coeffs = chi_expansion(z_pow(-1) + Rational(3) * z_pow(2));
  ASSERT_EQ(coeffs.size(), 4u);
  EXPECT_EQ(coeffs[2], Rational(1));
  EXPECT_EQ(coeffs[3], Rational(3));
}

TEST(FamilyProperty, StructuralInvariants) {
  fixtures::Gen gen(32);
  for (int trial = 0; trial < 25; ++trial) {
    const JacobiParams p(gen.jacobi_param(), gen.jacobi_param());
    const int N = 16;
    const auto fam = build_family(p, N);
    EXPECT_EQ(fam.h[0], Rational(1));
    for (int n = 0; n <= N; ++n) {
      EXPECT_EQ(fam.phi[n].max_exp(), n);
      EXPECT_EQ(fam.phi[n].coeff(n), Rational(1));
      EXPECT_GE(fam.phi[n].min_exp(), 0);
      EXPECT_GT(fam.h[n], Rational(0));
      if (n > 0) {
        EXPECT_EQ(fam.h[n], fam.h[n - 1] * (Rational(1) - fam.a[n - 1] * fam.a[n - 1]));
      }
      const int k = n / 2;
      EXPECT_GE(fam.psi[n].min_exp(), -k);
      EXPECT_LE(fam.psi[n].max_exp(), n % 2 == 0 ? k : k + 1);
      // psi_n spans chi_0..chi_n with a nonzero chi_n coefficient.
      const auto c = chi_expansion(fam.psi[n]);
      EXPECT_EQ(c.size(), static_cast<std::size_t>(n + 1));
      EXPECT_FALSE(c.back().is_zero());
      // Phi_{n+1}(0) = -a_n.
      if (n < N) {
        EXPECT_EQ(fam.phi[n + 1].coeff(0), -fam.a[n]);
      }
    }
  }
}

TEST(Family, FromVerblunsky) {
  std::vector<Rational> a{Rational(1, 3), Rational(-1, 5), Rational(1, 7)};
  const auto fam = build_family_from_verblunsky(a, 2);
  EXPECT_FALSE(fam.params.has_value());
  EXPECT_EQ(fam.phi[1], z_pow(1) - LaurentPoly(Rational(1, 3)));
  EXPECT_THROW(build_family_from_verblunsky({Rational(1), Rational(0)}, 1), BadVerblunsky);
  EXPECT_THROW(build_family_from_verblunsky({Rational(0)}, 3), std::invalid_argument);
}

TEST(Family, OrthonormalScale) {
  const auto fam = build_family(JacobiParams(Rational(1, 2), Rational(-1, 2)), 3);
  EXPECT_NEAR(fam.orthonormal_scale(1), 1.0 / std::sqrt(0.75), 1e-15);
}

TEST(Perturb, Modes) {
  const auto fam = build_family(JacobiParams(Rational(1), Rational(2)), 8);
  const auto stored = perturb_verblunsky(fam, 2, Rational(1, 100), Perturbation::StoredCoefficient);
  EXPECT_EQ(stored.a[2], fam.a[2] + Rational(1, 100));
  EXPECT_EQ(stored.psi, fam.psi);
  const auto rebuilt = perturb_verblunsky(fam, 2, Rational(1, 100), Perturbation::Rebuild);
  EXPECT_EQ(rebuilt.a[2], stored.a[2]);
  EXPECT_EQ(rebuilt.phi[2], fam.phi[2]);
  EXPECT_NE(rebuilt.phi[3], fam.phi[3]);
  EXPECT_TRUE(rebuilt.params.has_value());
  EXPECT_THROW(perturb_verblunsky(fam, 9, Rational(1, 100), Perturbation::Rebuild), std::out_of_range);
}

TEST(Family, Csv) {
  const auto fam = build_family(JacobiParams(Rational(1, 2), Rational(-1, 2)), 2);
  std::ostringstream os;
  write_family_csv(os, fam);
  EXPECT_EQ(os.str(),
            "n,a_n,h_n,psi_n\n"
            "0,-1/2,1,\"1\"\n"
            "1,-1/3,3/4,\"1/2 + z\"\n"
            "2,-1/4,2/3,\"z^-1 + 2/3 + 1/3*z\"\n");
}
