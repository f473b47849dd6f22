#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace opuc {

/// Exact signed fraction backed by GMP. Always kept in lowest terms with a
/// positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class value);

  /// Accepts "p/q" or a bare integer, optionally signed. Decimals are rejected.
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  Rational abs() const;
  Rational reciprocal() const;

  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(const Rational& lhs, const Rational& rhs) { return Rational(mpq_class(lhs.value_ + rhs.value_)); }
  friend Rational operator-(const Rational& lhs, const Rational& rhs) { return Rational(mpq_class(lhs.value_ - rhs.value_)); }
  friend Rational operator*(const Rational& lhs, const Rational& rhs) { return Rational(mpq_class(lhs.value_ * rhs.value_)); }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// x^k for integer k (k may be negative when x != 0).
Rational pow(const Rational& x, int k);

}  // namespace opuc
