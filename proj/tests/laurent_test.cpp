#include <gtest/gtest.h>

#include "opuc/errors.hpp"
#include "opuc/laurent.hpp"
#include "support.hpp"

using opuc::LaurentPoly;
using opuc::Rational;
using opuc::z_pow;

TEST(Laurent, ZeroHasEmptySupport) {
  LaurentPoly f = z_pow(2) - z_pow(2);
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.to_string(), "0");
  EXPECT_THROW(f.min_exp(), std::logic_error);
  LaurentPoly g;
  g.set_coeff(3, Rational(0));
  EXPECT_TRUE(g.terms().empty());
}

TEST(Laurent, CanonicalText) {
  LaurentPoly f = Rational(1, 3) * z_pow(-1) + LaurentPoly(Rational(2, 3)) + Rational(1, 3) * z_pow(1);
  EXPECT_EQ(f.to_string(), "1/3*z^-1 + 2/3 + 1/3*z");
  EXPECT_EQ((z_pow(2) - z_pow(-3)).to_string(), "-z^-3 + z^2");
  EXPECT_EQ((LaurentPoly(Rational(-1)) - z_pow(1)).to_string(), "-1 - z");
  EXPECT_EQ(LaurentPoly::parse("1/3*z^-1 + 2/3 + 1/3*z"), f);
  EXPECT_EQ(LaurentPoly::parse("-z^-3 + z^2"), z_pow(2) - z_pow(-3));
}

TEST(Laurent, ExponentRange) {
  LaurentPoly f = z_pow(-4) + Rational(5) * z_pow(7);
  EXPECT_EQ(f.min_exp(), -4);
  EXPECT_EQ(f.max_exp(), 7);
  EXPECT_EQ(f.coeff(7), Rational(5));
  EXPECT_EQ(f.coeff(0), Rational(0));
  EXPECT_EQ(LaurentPoly::from_coefficients(-1, {Rational(1), Rational(0), Rational(2)}),
            z_pow(-1) + Rational(2) * z_pow(1));
}

TEST(Laurent, Operators) {
  EXPECT_EQ(opuc::reflect(z_pow(3) + z_pow(-1)), z_pow(-3) + z_pow(1));
  EXPECT_EQ(opuc::mul_z(z_pow(-1)), LaurentPoly(Rational(1)));
  EXPECT_EQ(opuc::shift(z_pow(2), -5), z_pow(-3));
  EXPECT_EQ(opuc::theta(z_pow(3) + z_pow(-2)), Rational(3) * z_pow(3) - Rational(2) * z_pow(-2));
  EXPECT_EQ(opuc::derivative(z_pow(3) + z_pow(-2)), Rational(3) * z_pow(2) - Rational(2) * z_pow(-3));
  EXPECT_EQ(opuc::x_of_z(), z_pow(1) + z_pow(-1));
  EXPECT_EQ(opuc::z_poly(), z_pow(1));
}

TEST(Laurent, ExactDivision) {
  const LaurentPoly one_minus_z2 = LaurentPoly(Rational(1)) - z_pow(2);
  EXPECT_EQ(opuc::div_exact(LaurentPoly(Rational(1)) - z_pow(4), one_minus_z2), LaurentPoly(Rational(1)) + z_pow(2));
  EXPECT_EQ(opuc::div_exact(z_pow(-3) - z_pow(-1), one_minus_z2), z_pow(-3));
  EXPECT_THROW(opuc::div_exact(z_pow(1), one_minus_z2), opuc::NotDivisible);
  EXPECT_THROW(opuc::div_exact(z_pow(1), LaurentPoly()), opuc::ZeroArgument);
}

TEST(Laurent, Evaluation) {
  const LaurentPoly f = z_pow(2) + z_pow(-1);
  EXPECT_EQ(opuc::eval(f, Rational(2)), Rational(9, 2));
  EXPECT_THROW(opuc::eval(f, Rational(0)), opuc::ZeroArgument);
}

TEST(LaurentProperty, RingAxiomsAndTextRoundTrip) {
  opuc::fixtures::Gen gen(21);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly f = gen.laurent(), g = gen.laurent(), h = gen.laurent();
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(LaurentPoly::parse(f.to_string()), f);
    EXPECT_EQ(opuc::reflect(opuc::reflect(f)), f);
    EXPECT_EQ(opuc::reflect(f * g), opuc::reflect(f) * opuc::reflect(g));
  }
}

TEST(LaurentProperty, DivisionInvertsMultiplication) {
  opuc::fixtures::Gen gen(22);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly f = gen.laurent(), d = gen.nonzero_laurent();
    EXPECT_EQ(opuc::div_exact(f * d, d), f);
  }
}

TEST(LaurentProperty, EvaluationIsARingHomomorphism) {
  opuc::fixtures::Gen gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly f = gen.laurent(), g = gen.laurent();
    const Rational z0 = gen.nonzero();
    EXPECT_EQ(opuc::eval(f * g, z0), opuc::eval(f, z0) * opuc::eval(g, z0));
    EXPECT_EQ(opuc::eval(f + g, z0), opuc::eval(f, z0) + opuc::eval(g, z0));
    EXPECT_EQ(opuc::eval(opuc::reflect(f), z0), opuc::eval(f, z0.reciprocal()));
  }
}

TEST(LaurentProperty, EulerOperatorIsADerivation) {
  opuc::fixtures::Gen gen(24);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly f = gen.laurent(), g = gen.laurent();
    EXPECT_EQ(opuc::theta(f * g), opuc::theta(f) * g + f * opuc::theta(g));
    EXPECT_EQ(opuc::theta(f), opuc::mul_z(opuc::derivative(f)));
  }
}
