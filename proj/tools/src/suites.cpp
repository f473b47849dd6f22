#include "opuc_tools/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "opuc/algebra.hpp"
#include "opuc/cmv.hpp"
#include "opuc/dunkl.hpp"
#include "opuc/errors.hpp"
#include "opuc/moments.hpp"
#include "opuc/opuc.hpp"
#include "opuc/quadrature.hpp"
#include "opuc/szego.hpp"

namespace opuc::tools {

namespace {

const Rational kCorruption{1, 100};

// Relation checks run on fixed windows, independent of N.
constexpr int kMonomialRange = 10;
constexpr std::size_t kMatrixSize = 21;
constexpr int kYWindow = 10;
constexpr int kTriangularWindow = 20;

OPUCFamily family(const JacobiParams& p, int N, const SuiteOptions& opts, Perturbation mode) {
  OPUCFamily fam = build_family(p, N);
  if (opts.corrupt_index) fam = perturb_verblunsky(fam, *opts.corrupt_index, kCorruption, mode);
  return fam;
}

VerificationReport bispectral(const JacobiParams& p, int N, const SuiteOptions& opts) {
  auto report = verify_bispectral(family(p, N, opts, Perturbation::Rebuild));
  report.merge(verify_triangularity(p, std::min(N, kTriangularWindow)));
  return report;
}

VerificationReport cmv(const JacobiParams& p, int N, const SuiteOptions& opts) {
  const auto fam = family(p, N, opts, Perturbation::StoredCoefficient);
  auto report = verify_reflection_rows(fam);
  report.merge(verify_gevp_and_five_term(fam));
  report.merge(verify_cmv_structure(fam.a, static_cast<std::size_t>(N) + 1));
  return report;
}

VerificationReport derivation(const JacobiParams& p, int N) {
  VerificationReport report;
  const auto rep = derive_representation(p.alpha(), p.beta(), N);
  auto& lam = report.add("lam-sol", "derived lambda_n = closed-form lambda_n, lambda_0 = 0");
  auto& an = report.add("an-sol", "derived a_n = closed-form a_n");
  for (int n = 0; n <= N; ++n) {
    const std::string idx = "n=" + std::to_string(n);
    lam.expect_equal(idx, rep.lambda[static_cast<std::size_t>(n)], lambda_n(p, n));
    an.expect_equal(idx, rep.a[static_cast<std::size_t>(n)], verblunsky_jacobi(p, n));
  }

  auto& canon = report.add("canonical", "canonicalize(relations_of(alpha, beta, mu, nu)) is the identity");
  const CanonicalForm sample{p.alpha(), p.beta(), Rational{3, 2}, Rational{-1, 3}};
  try {
    const auto back = canonicalize(relations_of(sample));
    canon.expect_true("mu=3/2 nu=-1/3", back.alpha == sample.alpha && back.beta == sample.beta &&
                                            back.mu == sample.mu && back.nu == sample.nu,
                      back.alpha.to_string() + "," + back.beta.to_string());
  } catch (const Degenerate& e) {
    canon.skipped.push_back("mu=3/2 nu=-1/3");
    canon.notes.push_back(e.what());
  }
  return report;
}

VerificationReport algebra(const JacobiParams& p, int N) {
  auto report = derivation(p, N);
  report.merge(verify_relations_functional(p.alpha(), p.beta(), kMonomialRange));
  report.merge(verify_relations_matrix(p.alpha(), p.beta(), kMatrixSize));
  report.merge(verify_central_extension(p.alpha(), p.beta(), kMonomialRange, kMatrixSize));
  report.merge(verify_xy_cross_realization(build_family(p, N)));
  const int m = std::min(N, kYWindow);
  const auto fam = build_family(p, szego_family_size(m));
  report.merge(y_eigencheck(fam, build_szego_pair(fam, m)));
  return report;
}

VerificationReport szego(const JacobiParams& p, int N) {
  const auto fam = build_family(p, szego_family_size(N));
  const auto pair = build_szego_pair(fam, N);
  auto report = verify_three_term(pair);
  report.merge(verify_rec_coeffs_fit(pair));
  report.merge(verify_transforms(fam, pair, N));
  report.merge(verify_symmetry(pair));
  report.merge(verify_classical_match(fam, N));
  report.merge(verify_dep_and_pq_identity(fam, N));
  return report;
}

VerificationReport single_moment_closed_forms(const OPUCFamily& fam) {
  VerificationReport report;
  auto& a = report.add("sm-a", "a_n = -1/(n+2)");
  auto& phi = report.add("sm-phi", "Phi_n = (1/(n+1)) sum_k (k+1) z^k");
  auto& lam = report.add("sm-lambda", "lambda_n = -n/2 (n even), (n+3)/2 (n odd)");
  for (int n = 0; n <= fam.N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const std::string idx = "n=" + std::to_string(n);
    a.expect_equal(idx, fam.a[i], Rational{-1, n + 2});
    phi.expect_zero(idx, fam.phi[i] - single_moment_phi(n));
    lam.expect_equal(idx, lambda_n(*fam.params, n), n % 2 == 0 ? Rational{-n, 2} : Rational{n + 3, 2});
  }
  return report;
}

VerificationReport moments(const JacobiParams& p, int N, const SuiteOptions& opts) {
  // One extra index so the exact Toeplitz ratios reach h_N.
  const auto fam = build_family(p, N + 1);
  auto report = orthogonality_check(fam, Weight::jacobi(p), N, opts.quad_order, opts.tol);
  if (p.is_single_moment()) {
    report.merge(single_moment_closed_forms(fam));
    report.merge(verify_exact_moments(fam, Weight::single_moment(Rational{1}), N));
  } else if (p.is_free()) {
    report.merge(verify_exact_moments(fam, Weight::lebesgue(), N));
  }
  return report;
}

}  // namespace

VerificationReport run_suite(const std::string& suite, const Rational& alpha, const Rational& beta, int N,
                             const SuiteOptions& opts) {
  const JacobiParams p(alpha, beta);
  if (suite == "bispectral") return bispectral(p, N, opts);
  if (suite == "cmv") return cmv(p, N, opts);
  if (suite == "algebra") return algebra(p, N);
  if (suite == "szego") return szego(p, N);
  if (suite == "moments") return moments(p, N, opts);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<std::string> expand_suites(const std::vector<std::string>& requested) {
  std::vector<std::string> out;
  auto push = [&](const std::string& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const auto& s : requested) {
    if (s == "all") {
      for (const auto& name : kSuiteNames) push(name);
    } else if (std::find(kSuiteNames.begin(), kSuiteNames.end(), s) != kSuiteNames.end()) {
      push(s);
    } else {
      throw std::invalid_argument("unknown suite '" + s + "'");
    }
  }
  return out;
}

}  // namespace opuc::tools
