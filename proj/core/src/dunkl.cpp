#include "opuc/dunkl.hpp"

#include <stdexcept>
#include <string>

#include "opuc/errors.hpp"
#include "opuc/quadrature.hpp"

namespace opuc {

namespace {

const LaurentPoly& one_minus_z_squared() {
  static const LaurentPoly d = LaurentPoly(Rational{1}) - z_pow(2);
  return d;
}

}  // namespace

LaurentPoly apply_k(const LaurentPoly& f, const Rational& alpha, const Rational& beta) {
  // z ((alpha + beta + 1) z + alpha - beta)
  LaurentPoly factor;
  factor.set_coeff(2, alpha + beta + Rational{1});
  factor.set_coeff(1, alpha - beta);
  const LaurentPoly difference = reflect(f) - f;
  LaurentPoly reflection_part;
  try {
    reflection_part = factor * div_exact(difference, one_minus_z_squared());
  } catch (const NotDivisible& e) {
    throw NotDivisible(std::string("Dunkl operator left the Laurent ring: ") + e.what());
  }
  return theta(f) + reflection_part;
}

LaurentPoly apply_k(const LaurentPoly& f, const JacobiParams& p) { return apply_k(f, p.alpha(), p.beta()); }

LaurentPoly apply_k_single_moment(const LaurentPoly& f) {
  static const LaurentPoly one_minus_z = LaurentPoly(Rational{1}) - z_pow(1);
  return theta(f) + div_exact(mul_z(reflect(f) - f), one_minus_z);
}

Rational lambda_n(const Rational& alpha, const Rational& beta, int n) {
  if (n < 0) throw std::invalid_argument("lambda_n needs n >= 0");
  if (n % 2 == 0) return Rational{-n, 2};
  return Rational{n + 1, 2} + alpha + beta + Rational{1};
}

Rational lambda_n(const JacobiParams& p, int n) { return lambda_n(p.alpha(), p.beta(), n); }

VerificationReport verify_bispectral(const OPUCFamily& fam) {
  if (!fam.params) throw std::invalid_argument("bispectrality check needs the family's Jacobi parameters");
  const auto& p = *fam.params;
  VerificationReport report;
  auto& check = report.add("EIG", "K psi_n = lambda_n psi_n");
  for (int n = 0; n <= fam.N; ++n) {
    const auto& psi = fam.psi[static_cast<std::size_t>(n)];
    LaurentPoly residual;
    try {
      residual = apply_k(psi, p);
      residual.add_scaled(psi, -lambda_n(p, n));
    } catch (const NotDivisible& e) {
      check.expect_true("n=" + std::to_string(n), false, e.what());
      continue;
    }
    check.expect_zero("n=" + std::to_string(n), residual);
  }
  return report;
}

VerificationReport verify_triangularity(const JacobiParams& p, int n_max) {
  VerificationReport report;
  auto& check = report.add("K-triangular", "K chi_n in span{chi_0, ..., chi_n}");
  for (int n = 0; n <= n_max; ++n) {
    const auto coeffs = chi_expansion(apply_k(chi_basis(n), p));
    bool ok = true;
    std::string witness;
    for (std::size_t m = static_cast<std::size_t>(n) + 1; m < coeffs.size(); ++m) {
      if (!coeffs[m].is_zero()) {
        ok = false;
        witness = "chi_" + std::to_string(m) + " coefficient " + coeffs[m].to_string();
        break;
      }
    }
    check.expect_true("n=" + std::to_string(n), ok, witness);
  }
  return report;
}

double selfadjoint_residual(const LaurentPoly& f, const LaurentPoly& g, const JacobiParams& p, int quad_order) {
  if (quad_order < 64) throw std::invalid_argument("quadrature order must be at least 64");
  AdaptiveCircleQuadrature quad(Weight::jacobi(p));
  const auto lhs = quad.pairing(apply_k(f, p), g, quad_order).value;
  const auto rhs = quad.pairing(f, apply_k(g, p), quad_order).value;
  return std::abs(lhs - rhs);
}

}  // namespace opuc
