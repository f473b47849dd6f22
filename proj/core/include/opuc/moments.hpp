#pragma once

#include <iosfwd>
#include <map>
#include <optional>

#include "opuc/laurent.hpp"
#include "opuc/opuc.hpp"
#include "opuc/quadrature.hpp"
#include "opuc/report.hpp"

namespace opuc {

enum class Provenance { Exact, Quadrature };

const char* to_string(Provenance p);

/// A moment or determinant: exact when the inputs allow it, double otherwise.
struct MomentValue {
  Provenance provenance = Provenance::Exact;
  std::optional<Rational> exact;
  double value = 0.0;

  static MomentValue from_exact(const Rational& r);
  static MomentValue from_double(double v);
};

/// Normalized trigonometric moment sigma_n = int e^{int} w(t) dt / int w(t) dt.
///
/// Lebesgue and single-moment weights are exact; Jacobi weights go through
/// AdaptiveCircleQuadrature starting at quad_order (>= 64).
MomentValue sigma(const Weight& w, int n, int quad_order = 64);

/// sigma_{-max_index}..sigma_{max_index}, computed once at construction.
class MomentSeq {
 public:
  MomentSeq(const Weight& w, int max_index, int quad_order = 64);

  const Weight& weight() const { return weight_; }
  int max_index() const { return max_index_; }
  const MomentValue& at(int n) const;
  /// True when sigma_n is exact for every |n| <= upto.
  bool exact_through(int upto) const;

 private:
  Weight weight_;
  int max_index_;
  std::map<int, MomentValue> values_;
};

/// n x n Toeplitz determinant det(sigma_{k-j}). Throws NonPositive when the
/// result is not positive.
MomentValue toeplitz_delta(const MomentSeq& m, int n);

/// Bordered Toeplitz determinant divided by Delta_n (monic, degree n).
/// Needs exact moments through index n; throws SingularDelta if Delta_n = 0.
LaurentPoly determinantal_phi(const MomentSeq& m, int n);

/// Numerical orthogonality of the family against w for 0 <= n, m <= N:
/// off-diagonal pairings below tol, diagonal within tol relative of h_n.
VerificationReport orthogonality_check(const OPUCFamily& fam, const Weight& w, int N, int quad_order = 64,
                                       double tol = 1e-10);

/// Exact-moment cross-checks: determinantal Phi_n equals the recurrence
/// Phi_n for n <= N and Delta_{n+1}/Delta_n = h_n for n <= N.
VerificationReport verify_exact_moments(const OPUCFamily& fam, const Weight& w, int N);

/// CSV columns n,sigma_n,provenance,exact.
void write_moments_csv(std::ostream& os, const MomentSeq& m);

}  // namespace opuc
