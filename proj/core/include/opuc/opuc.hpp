#pragma once

/**
 * @file opuc.hpp
 * @brief Jacobi OPUC: Verblunsky parameters, the Szego recurrence, the
 * reversed polynomial, normalization constants and the CMV Laurent
 * polynomials psi_n.
 *
 * Everything is exact over the rationals. Coefficients are real, so the
 * conjugation appearing in Phi* = z^n conj(Phi)(1/z) is the identity here.
 */

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "opuc/laurent.hpp"
#include "opuc/rational.hpp"

namespace opuc {

/// Value taken by the Verblunsky parameter at index -1. Formulas that reach
/// below index 0 (the Szego map) read it; index -2 is never needed because it
/// is always multiplied by 1 + a_{-1} = 0.
inline const Rational kVerblunskyAtMinusOne{-1};

/// Jacobi OPUC parameters, weight (1 - cos t)^(alpha + 1/2) (1 + cos t)^(beta + 1/2).
/// Constructor enforces alpha > -1 and beta > -1.
class JacobiParams {
 public:
  JacobiParams(Rational alpha, Rational beta);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  /// alpha = beta = -1/2, where every Verblunsky parameter vanishes.
  bool is_free() const;
  /// alpha = 1/2, beta = -1/2.
  bool is_single_moment() const;

  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;

 private:
  Rational alpha_;
  Rational beta_;
};

/// a_n = -(alpha + 1/2 + (-1)^(n+1) (beta + 1/2)) / (n + alpha + beta + 2).
/// Throws ParamOutOfRange if |a_n| >= 1.
Rational verblunsky_jacobi(const JacobiParams& p, int n);
/// Same formula without the parameter-domain check; only requires a nonzero
/// denominator. Used by the algebra module for arbitrary canonical forms.
Rational verblunsky_jacobi(const Rational& alpha, const Rational& beta, int n);

/// z^n f(1/z) for f supported in [0, n]; throws BadSupport otherwise.
LaurentPoly star(const LaurentPoly& f, int n);

/// Phi_{n+1} = z Phi_n - a_n Phi_n^*.
LaurentPoly szego_advance(const LaurentPoly& phi_n, const Rational& a_n, int n);

/// chi_0 = 1, chi_{2n-1} = z^n, chi_{2n} = z^-n.
LaurentPoly chi_basis(int n);
/// chi_n(1/z).
LaurentPoly chi_star(int n);
/// Position of z^k in the CMV ordering.
int chi_index(int exponent);
/// Coefficients of f in the CMV basis, indexed by chi position.
std::vector<Rational> chi_expansion(const LaurentPoly& f);

/// (1/(n+1)) sum_{k=0}^{n} (k+1) z^k: closed form for alpha = 1/2, beta = -1/2.
LaurentPoly single_moment_phi(int n);

struct OPUCFamily {
  /// Absent when the family was built from a raw Verblunsky sequence.
  std::optional<JacobiParams> params;
  int N = 0;
  std::vector<LaurentPoly> phi;  ///< monic Phi_0..Phi_N
  std::vector<Rational> a;       ///< a_0..a_N
  std::vector<Rational> h;       ///< h_0..h_N
  std::vector<LaurentPoly> psi;  ///< psi_0..psi_N

  /// Factor s with phi_n = s * Phi_n orthonormal, s = 1/sqrt(h_n).
  double orthonormal_scale(int n) const;
};

/// Builds Phi, a, h and psi for indices 0..N.
OPUCFamily build_family(const JacobiParams& p, int N);
/// Same, from a user-supplied Verblunsky sequence (needs a.size() > N).
/// Throws BadVerblunsky if some |a_n| >= 1.
OPUCFamily build_family_from_verblunsky(std::vector<Rational> a, int N,
                                        std::optional<JacobiParams> params = std::nullopt);

enum class Perturbation {
  /// Only the stored a_k changes; Phi and psi keep their original values.
  StoredCoefficient,
  /// a_k changes and Phi, h, psi are regenerated from the altered sequence.
  Rebuild,
};

/// Copy of fam with a_k replaced by a_k + delta. The Jacobi parameters are
/// kept, so the result is deliberately inconsistent with them.
OPUCFamily perturb_verblunsky(const OPUCFamily& fam, int k, const Rational& delta, Perturbation mode);

/// CSV with columns n,a_n,h_n[,lambda_n],psi_n. lambda may be empty.
void write_family_csv(std::ostream& os, const OPUCFamily& fam, std::span<const Rational> lambda = {});

}  // namespace opuc
