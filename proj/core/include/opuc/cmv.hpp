#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "opuc/banded.hpp"
#include "opuc/opuc.hpp"
#include "opuc/report.hpp"

namespace opuc {

/// How the block cut by the truncation is closed.
struct BoundaryClosure {
  /// When set, a_{N-1} is replaced by this unimodular value (+1 or -1) in
  /// the cut block, giving a paraorthogonal truncation. Otherwise the cut
  /// block keeps a_{N-1}.
  std::optional<Rational> unimodular;
};

/// Block-diagonal M1 = diag(1, B(a_1), B(a_3), ...) truncated to N x N, with
/// B(a) = [[a, 1], [1 - a^2, -a]]. Throws BadVerblunsky if a used |a_n| >= 1.
BandedOperator build_m1(std::span<const Rational> a, std::size_t N, const BoundaryClosure& closure = {});
/// M2 = diag(B(a_0), B(a_2), ...) truncated to N x N.
BandedOperator build_m2(std::span<const Rational> a, std::size_t N, const BoundaryClosure& closure = {});
/// C = M1 M2, exact. Throws std::logic_error if the product is not pentadiagonal.
BandedOperator cmv_matrix(std::span<const Rational> a, std::size_t N, const BoundaryClosure& closure = {});

/// Row-wise checks R psi_n = sum_m (M1)_nm psi_m and z psi_n(1/z) = sum_m (M2)_nm psi_m.
VerificationReport verify_reflection_rows(const OPUCFamily& fam);
/// Row-wise checks M2 psi = z M1 psi and C psi = z psi.
VerificationReport verify_gevp_and_five_term(const OPUCFamily& fam);
/// M1^2 = M2^2 = I on complete blocks and bandwidth(C) <= 2.
VerificationReport verify_cmv_structure(std::span<const Rational> a, std::size_t N);

/// Eigenvalues of the double-precision image of C, sorted by argument
/// (ties by modulus). Throws ConvergenceFailure if the eigensolver fails.
/// This is the only floating-point path of the CMV module.
std::vector<std::complex<double>> truncated_spectrum(const BandedOperator& c);

}  // namespace opuc
