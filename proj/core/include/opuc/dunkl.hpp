#pragma once

#include "opuc/laurent.hpp"
#include "opuc/opuc.hpp"
#include "opuc/report.hpp"

namespace opuc {

/// Dunkl-type operator
///   K = z d/dz + z((alpha + beta + 1) z + alpha - beta) / (1 - z^2) (R - I),
/// R f(z) = f(1/z). Rf - f vanishes at z = +-1, so the division by 1 - z^2
/// is exact on Laurent polynomials; a failed division throws NotDivisible.
LaurentPoly apply_k(const LaurentPoly& f, const Rational& alpha, const Rational& beta);
LaurentPoly apply_k(const LaurentPoly& f, const JacobiParams& p);

/// z d/dz + z/(1 - z) (R - I), written out separately for alpha = 1/2,
/// beta = -1/2. Kept as an independent route to cross-check apply_k.
LaurentPoly apply_k_single_moment(const LaurentPoly& f);

/// Eigenvalue of K on psi_n: -n/2 for even n, (n+1)/2 + alpha + beta + 1 for odd n.
Rational lambda_n(const Rational& alpha, const Rational& beta, int n);
Rational lambda_n(const JacobiParams& p, int n);

/// K psi_n = lambda_n psi_n for every n in the family (requires fam.params).
VerificationReport verify_bispectral(const OPUCFamily& fam);

/// K maps span{chi_0..chi_n} into itself, checked on each chi_n for n <= n_max.
VerificationReport verify_triangularity(const JacobiParams& p, int n_max);

/// |<K f, g>_w - <f, K g>_w| with <u, v>_w = int u(e^{it}) v(e^{-it}) w(t) dt
/// over the unit-mass Jacobi weight. Numerical; quad_order >= 64.
double selfadjoint_residual(const LaurentPoly& f, const LaurentPoly& g, const JacobiParams& p, int quad_order = 128);

}  // namespace opuc
