#include "opuc/opuc.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "opuc/errors.hpp"

namespace opuc {

namespace {

const Rational kHalf{1, 2};

void check_verblunsky(const Rational& a, int n) {
  if (a.abs() >= Rational{1}) {
    throw BadVerblunsky("|a_" + std::to_string(n) + "| = |" + a.to_string() + "| is not below 1");
  }
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

JacobiParams::JacobiParams(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_ <= Rational{-1} || beta_ <= Rational{-1}) {
    throw ParamOutOfRange("Jacobi parameters need alpha > -1 and beta > -1, got alpha = " + alpha_.to_string() +
                          ", beta = " + beta_.to_string());
  }
}

bool JacobiParams::is_free() const { return alpha_ == -kHalf && beta_ == -kHalf; }
bool JacobiParams::is_single_moment() const { return alpha_ == kHalf && beta_ == -kHalf; }

Rational verblunsky_jacobi(const Rational& alpha, const Rational& beta, int n) {
  const Rational den = Rational{n} + alpha + beta + Rational{2};
  if (den.is_zero()) throw ParamOutOfRange("n + alpha + beta + 2 vanishes at n = " + std::to_string(n));
  const Rational sign = (n % 2 == 0) ? Rational{-1} : Rational{1};  // (-1)^(n+1)
  return -(alpha + kHalf + sign * (beta + kHalf)) / den;
}

Rational verblunsky_jacobi(const JacobiParams& p, int n) {
  Rational a = verblunsky_jacobi(p.alpha(), p.beta(), n);
  if (a.abs() >= Rational{1}) {
    throw ParamOutOfRange("|a_" + std::to_string(n) + "| = |" + a.to_string() + "| >= 1 for alpha = " +
                          p.alpha().to_string() + ", beta = " + p.beta().to_string());
  }
  return a;
}

LaurentPoly star(const LaurentPoly& f, int n) {
  if (!f.is_zero() && (f.min_exp() < 0 || f.max_exp() > n)) {
    throw BadSupport("star needs support in [0, " + std::to_string(n) + "], got " + f.to_string());
  }
  return shift(reflect(f), n);
}

LaurentPoly szego_advance(const LaurentPoly& phi_n, const Rational& a_n, int n) {
  LaurentPoly next = mul_z(phi_n);
  next.add_scaled(star(phi_n, n), -a_n);
  return next;
}

LaurentPoly chi_basis(int n) {
  if (n < 0) throw std::invalid_argument("chi_basis index must be nonnegative");
  if (n == 0) return LaurentPoly(Rational{1});
  return n % 2 == 1 ? z_pow((n + 1) / 2) : z_pow(-n / 2);
}

LaurentPoly chi_star(int n) { return reflect(chi_basis(n)); }

int chi_index(int exponent) {
  if (exponent > 0) return 2 * exponent - 1;
  return -2 * exponent;
}

std::vector<Rational> chi_expansion(const LaurentPoly& f) {
  std::vector<Rational> out;
  for (const auto& [k, c] : f.terms()) {
    const auto idx = static_cast<std::size_t>(chi_index(k));
    if (out.size() <= idx) out.resize(idx + 1);
    out[idx] = c;
  }
  return out;
}

LaurentPoly single_moment_phi(int n) {
  if (n < 0) throw std::invalid_argument("single_moment_phi index must be nonnegative");
  LaurentPoly f;
  for (int k = 0; k <= n; ++k) f.set_coeff(k, Rational{k + 1, n + 1});
  return f;
}

double OPUCFamily::orthonormal_scale(int n) const {
  return 1.0 / std::sqrt(h.at(static_cast<std::size_t>(n)).to_double());
}

OPUCFamily build_family_from_verblunsky(std::vector<Rational> a, int N, std::optional<JacobiParams> params) {
  if (N < 0) throw std::invalid_argument("family size N must be nonnegative");
  if (a.size() < static_cast<std::size_t>(N) + 1) {
    throw std::invalid_argument("need Verblunsky parameters a_0..a_N");
  }
  a.resize(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) check_verblunsky(a[static_cast<std::size_t>(n)], n);

  OPUCFamily fam;
  fam.params = std::move(params);
  fam.N = N;
  fam.a = std::move(a);
  fam.phi.reserve(static_cast<std::size_t>(N) + 1);
  fam.h.reserve(static_cast<std::size_t>(N) + 1);
  fam.psi.reserve(static_cast<std::size_t>(N) + 1);

  fam.phi.emplace_back(Rational{1});
  fam.h.emplace_back(1);
  for (int n = 0; n < N; ++n) {
    const auto& an = fam.a[static_cast<std::size_t>(n)];
    fam.phi.push_back(szego_advance(fam.phi.back(), an, n));
    fam.h.push_back(fam.h.back() * (Rational{1} - an * an));
  }
  for (int n = 0; n <= N; ++n) {
    const auto& p = fam.phi[static_cast<std::size_t>(n)];
    if (n % 2 == 0) {
      fam.psi.push_back(shift(reflect(p), n / 2));
    } else {
      fam.psi.push_back(shift(p, -(n / 2)));
    }
  }
  return fam;
}

OPUCFamily build_family(const JacobiParams& p, int N) {
  if (N < 0) throw std::invalid_argument("family size N must be nonnegative");
  std::vector<Rational> a;
  a.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) a.push_back(verblunsky_jacobi(p, n));
  return build_family_from_verblunsky(std::move(a), N, p);
}

OPUCFamily perturb_verblunsky(const OPUCFamily& fam, int k, const Rational& delta, Perturbation mode) {
  if (k < 0 || k > fam.N) throw std::out_of_range("perturbation index outside 0..N");
  if (mode == Perturbation::StoredCoefficient) {
    OPUCFamily out = fam;
    out.a[static_cast<std::size_t>(k)] += delta;
    return out;
  }
  std::vector<Rational> a = fam.a;
  a[static_cast<std::size_t>(k)] += delta;
  return build_family_from_verblunsky(std::move(a), fam.N, fam.params);
}

void write_family_csv(std::ostream& os, const OPUCFamily& fam, std::span<const Rational> lambda) {
  const bool with_lambda = !lambda.empty();
  os << "n,a_n,h_n," << (with_lambda ? "lambda_n," : "") << "psi_n\n";
  for (int n = 0; n <= fam.N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    os << n << ',' << fam.a[i] << ',' << fam.h[i] << ',';
    if (with_lambda) os << lambda[i] << ',';
    os << csv_quote(fam.psi[i].to_string()) << '\n';
  }
}

}  // namespace opuc
