#pragma once

/**
 * @file algebra.hpp
 * @brief The algebra generated by K, M1, M2 with
 *
 *   {K, M1} = g1 M1 + g2 I,   {K, M2} = g3 M2 + g4 I,   M1^2 = M2^2 = I.
 *
 * Two concrete realizations are provided:
 *  - functional: K the Dunkl operator, M1 = R, M2 = zR acting on Laurent
 *    polynomials;
 *  - matrix: K = diag(lambda_n), M1/M2 the block-diagonal truncations.
 *
 * Operator identities are established by evaluation on a finite basis
 * (monomials z^k, |k| <= d, or the complete rows of a truncation); nothing
 * here manipulates noncommutative words symbolically.
 */

#include <functional>
#include <vector>

#include "opuc/banded.hpp"
#include "opuc/laurent.hpp"
#include "opuc/opuc.hpp"
#include "opuc/report.hpp"
#include "opuc/szego.hpp"

namespace opuc {

struct AlgebraParams {
  Rational g1, g2, g3, g4;
  /// g3 != g1 and g2 != 0.
  bool nondegenerate() const { return g3 != g1 && !g2.is_zero(); }
};

/// K_canonical = mu K + nu I brings the relations to
///   {K, M1} = (alpha + beta + 1)(M1 - I),
///   {K, M2} = (alpha + beta + 2) M2 + (alpha - beta) I.
struct CanonicalForm {
  Rational alpha, beta, mu, nu;
};

/// Throws Degenerate if g3 = g1 or g2 = 0.
CanonicalForm canonicalize(const AlgebraParams& g);
/// Structure constants of the original relations implied by a canonical form
/// (inverse of canonicalize).
AlgebraParams relations_of(const CanonicalForm& c);

/// Structure constants of QJ(3):
///   [K1, [K1, K2]] = a K1^2 + d K1 + e1 I,
///   [K2, [K2, K1]] = a {K1, K2} + c K1 + d K2 + e2 I.
struct QJParams {
  Rational a, c, d, e1, e2;
};

/// X = M2 M1 + M1 M2 and Y = K^2 - (alpha + beta + 1) K realize QJ(3)
/// extended by the central element m1_coefficient * M1.
struct CentralExtension {
  QJParams qj;
  Rational m1_coefficient;
};
CentralExtension central_extension(const Rational& alpha, const Rational& beta);

struct Representation {
  std::vector<Rational> lambda;  ///< lambda_0..lambda_N
  std::vector<Rational> a;       ///< a_0..a_N
};

/// Solves the canonical relations entrywise with K diagonal and M1, M2 in
/// block form. Off-diagonal entries fix every lambda_n as an affine function
/// of an unknown lambda_0; the first diagonal entry then fixes lambda_0 and
/// the remaining diagonal entries give the a_n. Each 2x2 block yields two
/// diagonal equations for the same a_n; disagreement throws InconsistentSystem.
Representation derive_representation(const Rational& alpha, const Rational& beta, int N);

using LinearOp = std::function<LaurentPoly(const LaurentPoly&)>;

struct FunctionalRealization {
  LinearOp K, M1, M2, X, Y;
};

struct MatrixRealization {
  BandedOperator K, M1, M2, X, Y;
};

FunctionalRealization functional_realization(const Rational& alpha, const Rational& beta);
/// N x N truncations; K = diag(lambda_0..lambda_{N-1}).
MatrixRealization matrix_realization(const Rational& alpha, const Rational& beta, std::size_t N);

/// Both canonical relations in the matrix realization, on complete rows.
VerificationReport verify_relations_matrix(const Rational& alpha, const Rational& beta, std::size_t N);
/// Both canonical relations on monomials z^k, |k| <= d, in the functional realization.
VerificationReport verify_relations_functional(const Rational& alpha, const Rational& beta, int d);

/// [X, M1] = [Y, M1] = 0 and the two double-commutator relations, on
/// monomials |k| <= d and on complete rows of an N x N truncation.
VerificationReport verify_central_extension(const Rational& alpha, const Rational& beta, int d,
                                            std::size_t matrix_n = 21);

/// X psi_n from the functional realization equals sum_m X_nm psi_m.
VerificationReport verify_xy_cross_realization(const OPUCFamily& fam);

/// Y psi_n = Lambda_n psi_n, Lambda_{2n-1} = Lambda_{2n} = n(alpha+beta+n+1),
/// Y P_n = Lambda_{2n} P_n, Y F_n = Lambda_{2n} F_n, R P_n = P_n, R F_n = -F_n.
VerificationReport y_eigencheck(const OPUCFamily& fam, const SzegoPair& pair);

}  // namespace opuc
