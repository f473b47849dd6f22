#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "opuc/laurent.hpp"
#include "opuc/rational.hpp"

namespace opuc::fixtures {

using Point = std::pair<Rational, Rational>;

inline std::vector<Point> grid() {
  return {{Rational{1, 2}, Rational{-1, 2}}, {Rational{-1, 2}, Rational{-1, 2}}, {Rational{0}, Rational{0}},
          {Rational{1}, Rational{2}},         {Rational{3, 2}, Rational{1, 2}},  {Rational{-1, 2}, Rational{3, 2}}};
}

// Small random rationals and Laurent polynomials with a fixed seed.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int max_num = 20, int max_den = 12) {
    return Rational{integer(-max_num, max_num), integer(1, max_den)};
  }

  Rational nonzero() {
    Rational r;
    while (r.is_zero()) r = rational();
    return r;
  }

  // alpha > -1 with small denominator.
  Rational jacobi_param() { return Rational{-1} + Rational{integer(1, 40), integer(1, 6)}; }

  LaurentPoly laurent(int max_terms = 5, int span = 6) {
    LaurentPoly f;
    const int terms = integer(0, max_terms);
    for (int i = 0; i < terms; ++i) f.add_term(integer(-span, span), rational());
    return f;
  }

  LaurentPoly nonzero_laurent() {
    LaurentPoly f;
    while (f.is_zero()) f = laurent();
    return f;
  }

 private:
  std::mt19937 rng_;
};

// Generalized binomial r(r-1)...(r-m+1)/m!.
inline Rational binom(const Rational& r, int m) {
  Rational out{1};
  for (int i = 0; i < m; ++i) out = out * (r - Rational{i}) / Rational{i + 1};
  return out;
}

// Monic Jacobi polynomial of degree n on [-2, 2] in the variable x = z + 1/z,
// from the explicit sum
//   P_n(t) = sum_k C(n+a, n-k) C(n+b, k) ((t-1)/2)^k ((t+1)/2)^(n-k),  t = x/2,
// divided by its leading coefficient and rescaled by 2^n.
inline LaurentPoly jacobi_explicit(const Rational& a, const Rational& b, int n) {
  const LaurentPoly x = z_pow(1) + z_pow(-1);
  const LaurentPoly tm = Rational{1, 4} * x - LaurentPoly(Rational{1, 2});  // (t - 1)/2
  const LaurentPoly tp = Rational{1, 4} * x + LaurentPoly(Rational{1, 2});  // (t + 1)/2
  LaurentPoly sum;
  for (int k = 0; k <= n; ++k) {
    LaurentPoly term(binom(Rational{n} + a, n - k) * binom(Rational{n} + b, k));
    for (int i = 0; i < k; ++i) term *= tm;
    for (int i = 0; i < n - k; ++i) term *= tp;
    sum += term;
  }
  // Leading coefficient in t is C(2n+a+b, n) / 2^n; in x it is that over 2^n again.
  const Rational lead = binom(Rational{2 * n} + a + b, n) / pow(Rational{4}, n);
  return lead.reciprocal() * sum;
}

}  // namespace opuc::fixtures
