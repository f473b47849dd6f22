#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "opuc/rational.hpp"

namespace opuc {

/// Finitely supported Laurent polynomial with rational (hence real)
/// coefficients, stored sparsely by exponent. Zero coefficients are never
/// stored, so the zero polynomial has empty support.
///
/// Coefficients are real, so complex conjugation of coefficients is the
/// identity map on this type.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::int64_t constant) : LaurentPoly(Rational(constant)) {}  // NOLINT

  static LaurentPoly monomial(const Rational& coeff, int exponent);
  /// coeffs[i] is the coefficient of z^(min_exp + i).
  static LaurentPoly from_coefficients(int min_exp, const std::vector<Rational>& coeffs);
  /// Inverse of to_string().
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int exponent) const;
  /// Throws std::logic_error on the zero polynomial.
  int min_exp() const;
  int max_exp() const;

  void set_coeff(int exponent, const Rational& value);
  void add_term(int exponent, const Rational& value);
  /// *this += c * g without building c * g.
  void add_scaled(const LaurentPoly& g, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(const Rational& c, LaurentPoly f) { return f *= c; }
  friend LaurentPoly operator*(LaurentPoly f, const Rational& c) { return f *= c; }

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) = default;

  /// Canonical text: ascending exponents, e.g. "1/3*z^-1 + 2/3 + 1/3*z".
  std::string to_string() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

/// The polynomial z.
LaurentPoly z_poly();
/// z^k.
LaurentPoly z_pow(int k);
/// x(z) = z + 1/z.
LaurentPoly x_of_z();

/// R f(z) = f(1/z).
LaurentPoly reflect(const LaurentPoly& f);
/// Z f(z) = z f(z).
LaurentPoly mul_z(const LaurentPoly& f);
/// z^k f(z).
LaurentPoly shift(const LaurentPoly& f, int k);
/// Euler operator z d/dz.
LaurentPoly theta(const LaurentPoly& f);
/// d/dz.
LaurentPoly derivative(const LaurentPoly& f);
/// q with q * d == f exactly; throws NotDivisible when no Laurent quotient exists.
LaurentPoly div_exact(const LaurentPoly& f, const LaurentPoly& d);
/// f(z0); throws ZeroArgument for z0 = 0.
Rational eval(const LaurentPoly& f, const Rational& z0);

}  // namespace opuc
