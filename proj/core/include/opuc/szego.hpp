#pragma once

/**
 * @file szego.hpp
 * @brief Szego map from real-coefficient OPUC to the polynomials P_n, Q_n
 * orthogonal on [-2, 2], with x = z + 1/z.
 *
 * Polynomials in x are stored as reflection-symmetric Laurent polynomials in
 * z; equality in x is equality in z.
 */

#include <iosfwd>
#include <vector>

#include "opuc/laurent.hpp"
#include "opuc/opuc.hpp"
#include "opuc/report.hpp"

namespace opuc {

/// Laurent polynomial invariant under z -> 1/z, i.e. a polynomial in x = z + 1/z.
class SymmetricLaurent {
 public:
  SymmetricLaurent() = default;
  /// Throws std::invalid_argument if poly is not reflection-symmetric.
  explicit SymmetricLaurent(LaurentPoly poly);
  /// sum_k c[k] x^k.
  static SymmetricLaurent from_x_coefficients(const std::vector<Rational>& c);

  const LaurentPoly& poly() const { return poly_; }
  /// Degree in x; -1 for zero.
  int degree() const;
  bool is_monic() const;
  /// Power-basis coefficients in x.
  std::vector<Rational> x_coefficients() const;

  friend bool operator==(const SymmetricLaurent&, const SymmetricLaurent&) = default;

 private:
  LaurentPoly poly_;
};

/// P_0 = 1, P_n = z^{1-n} Phi_{2n-1}(z) + z^{n-1} Phi_{2n-1}(1/z). Needs Phi through 2n - 1.
SymmetricLaurent build_p(const OPUCFamily& fam, int n);
/// Q_n = (z^{-n} Phi_{2n+1}(z) - z^n Phi_{2n+1}(1/z)) / (z - 1/z). Needs Phi through 2n + 1.
SymmetricLaurent build_q(const OPUCFamily& fam, int n);

struct RecurrenceCoefficients {
  std::vector<Rational> b, u;    ///< P chain; u[0] unused (0)
  std::vector<Rational> bt, ut;  ///< Q chain; ut[0] unused (0)
};

/// a_k with the convention a_{-1} = -1. Throws std::out_of_range for k < -1
/// or beyond the family.
const Rational& verblunsky_ext(const OPUCFamily& fam, int k);

/// b_n, u_n, b~_n, u~_n for n <= N from the Verblunsky parameters.
RecurrenceCoefficients rec_coeffs(const OPUCFamily& fam, int N);
/// CSV columns n,b_n,u_n,bt_n,ut_n.
void write_rec_coeffs_csv(std::ostream& os, const RecurrenceCoefficients& rc);

struct SzegoPair {
  std::vector<SymmetricLaurent> P;  ///< P_0..P_{N+1}
  std::vector<SymmetricLaurent> Q;  ///< Q_0..Q_{N+1}
  RecurrenceCoefficients coeffs;    ///< indices 0..N
};

/// P and Q through N + 1 with coefficients through N; needs fam.N >= 2N + 4.
SzegoPair build_szego_pair(const OPUCFamily& fam, int N);
/// Family size needed by build_szego_pair(fam, N).
int szego_family_size(int N);

/// P_{n+1} + b_n P_n + u_n P_{n-1} = x P_n (and likewise for Q) for n <= N.
VerificationReport verify_three_term(const SzegoPair& pair);

/// b_n, u_n (and tilde) fitted from three consecutive polynomials agree with
/// the Verblunsky formulas; u_n > 0 and u~_n > 0 for n >= 1.
VerificationReport verify_rec_coeffs_fit(const SzegoPair& pair);

/// Christoffel and Geronimus transforms, the two inverse maps to psi and the
/// extraction of P, Q from psi, for 1 <= n <= N (n = 0 where meaningful).
VerificationReport verify_transforms(const OPUCFamily& fam, const SzegoPair& pair, int N);

/// R P_n = P_n and R F_n = -F_n with F_n = (z - 1/z) Q_{n-1}.
VerificationReport verify_symmetry(const SzegoPair& pair);

/// Monic Jacobi polynomial for (1-t)^alpha (1+t)^beta on [-1,1], rescaled to
/// [-2, 2] (x = 2t), from the classical three-term recurrence. Independent of
/// the OPUC pipeline.
SymmetricLaurent classical_jacobi_oracle(const Rational& alpha, const Rational& beta, int n);

/// P_n equals the (alpha, beta) oracle and Q_n the (alpha+1, beta+1) oracle for n <= N.
VerificationReport verify_classical_match(const OPUCFamily& fam, int N);

/// The hypergeometric equation for P_n(x(z)) (multiplied through by z^2 - 1)
/// and theta P_n = n (z - 1/z) Q_{n-1}, for n <= N.
VerificationReport verify_dep_and_pq_identity(const OPUCFamily& fam, int N);

}  // namespace opuc
