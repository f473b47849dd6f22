#include "opuc/cmv.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "opuc/errors.hpp"

namespace opuc {

namespace {

const Rational& verblunsky_at(std::span<const Rational> a, std::size_t n) {
  if (n >= a.size()) throw std::invalid_argument("need a_" + std::to_string(n) + " to build the truncation");
  if (a[n].abs() >= Rational{1}) {
    throw BadVerblunsky("|a_" + std::to_string(n) + "| = |" + a[n].to_string() + "| is not below 1");
  }
  return a[n];
}

// Fills 2x2 blocks B(a_k) starting at rows first, first + 2, ...; a block
// starting at row k uses a_k.
void fill_blocks(BandedOperator& op, std::vector<Block>& blocks, std::span<const Rational> a, std::size_t first,
                 const BoundaryClosure& closure) {
  const std::size_t N = op.size();
  for (std::size_t k = first; k < N; k += 2) {
    if (k + 1 < N) {
      const Rational& ak = verblunsky_at(a, k);
      op.set(k, k, ak);
      op.set(k, k + 1, Rational{1});
      op.set(k + 1, k, Rational{1} - ak * ak);
      op.set(k + 1, k + 1, -ak);
      blocks.push_back({k, 2, false});
    } else {
      const Rational ak = closure.unimodular ? *closure.unimodular : verblunsky_at(a, k);
      op.set(k, k, ak);
      // A unimodular closure decouples the block, so the row is final.
      op.set_row_complete(k, closure.unimodular.has_value());
      blocks.push_back({k, 1, true});
    }
  }
}

void check_closure(const BoundaryClosure& closure) {
  if (closure.unimodular && closure.unimodular->abs() != Rational{1}) {
    throw std::invalid_argument("unimodular closure must be +1 or -1");
  }
}

// sum_m op(n, m) psi_m
LaurentPoly row_combination(const BandedOperator& op, std::size_t n, std::span<const LaurentPoly> psi) {
  LaurentPoly sum;
  for (const auto& [m, v] : op.row(n)) sum.add_scaled(psi[m], v);
  return sum;
}

std::string row_label(std::size_t n) { return "row " + std::to_string(n); }

void mark_skipped(IdentityCheck& check, const BandedOperator& op) {
  for (auto r : op.incomplete_rows()) check.skipped.push_back(row_label(r));
}

}  // namespace

BandedOperator build_m1(std::span<const Rational> a, std::size_t N, const BoundaryClosure& closure) {
  if (N < 1) throw std::invalid_argument("M1 truncation needs N >= 1");
  check_closure(closure);
  BandedOperator op(N, 1);
  std::vector<Block> blocks{{0, 1, false}};
  op.set(0, 0, Rational{1});
  fill_blocks(op, blocks, a, 1, closure);
  op.set_blocks(std::move(blocks));
  return op;
}

BandedOperator build_m2(std::span<const Rational> a, std::size_t N, const BoundaryClosure& closure) {
  if (N < 1) throw std::invalid_argument("M2 truncation needs N >= 1");
  check_closure(closure);
  BandedOperator op(N, 1);
  std::vector<Block> blocks;
  fill_blocks(op, blocks, a, 0, closure);
  op.set_blocks(std::move(blocks));
  return op;
}

BandedOperator cmv_matrix(std::span<const Rational> a, std::size_t N, const BoundaryClosure& closure) {
  BandedOperator c = build_m1(a, N, closure) * build_m2(a, N, closure);
  if (c.bandwidth() > 2) throw std::logic_error("CMV product is not pentadiagonal");
  return c;
}

VerificationReport verify_reflection_rows(const OPUCFamily& fam) {
  const std::size_t N = fam.psi.size();
  const auto m1 = build_m1(fam.a, N);
  const auto m2 = build_m2(fam.a, N);
  VerificationReport report;

  auto& r1 = report.add("RM1", "psi_n(1/z) = sum_m (M1)_nm psi_m(z)");
  mark_skipped(r1, m1);
  for (auto n : m1.complete_rows()) {
    r1.expect_zero(row_label(n), reflect(fam.psi[n]) - row_combination(m1, n, fam.psi));
  }

  auto& r2 = report.add("RM2", "z psi_n(1/z) = sum_m (M2)_nm psi_m(z)");
  mark_skipped(r2, m2);
  for (auto n : m2.complete_rows()) {
    r2.expect_zero(row_label(n), mul_z(reflect(fam.psi[n])) - row_combination(m2, n, fam.psi));
  }
  return report;
}

VerificationReport verify_gevp_and_five_term(const OPUCFamily& fam) {
  const std::size_t N = fam.psi.size();
  const auto m1 = build_m1(fam.a, N);
  const auto m2 = build_m2(fam.a, N);
  const auto c = m1 * m2;
  VerificationReport report;

  auto& gevp = report.add("GEVP", "M2 psi = z M1 psi");
  for (std::size_t n = 0; n < N; ++n) {
    if (!m1.row_complete(n) || !m2.row_complete(n)) {
      gevp.skipped.push_back(row_label(n));
      continue;
    }
    gevp.expect_zero(row_label(n), row_combination(m2, n, fam.psi) - mul_z(row_combination(m1, n, fam.psi)));
  }

  auto& five = report.add("CMV", "C psi = z psi, C = M1 M2");
  five.expect_true("bandwidth", c.bandwidth() <= 2, "bandwidth " + std::to_string(c.bandwidth()));
  mark_skipped(five, c);
  for (auto n : c.complete_rows()) {
    five.expect_zero(row_label(n), row_combination(c, n, fam.psi) - mul_z(fam.psi[n]));
  }
  return report;
}

VerificationReport verify_cmv_structure(std::span<const Rational> a, std::size_t N) {
  VerificationReport report;
  const auto m1 = build_m1(a, N);
  const auto m2 = build_m2(a, N);
  const auto id = BandedOperator::identity(N);

  auto check_involution = [&](const char* name, const char* formula, const BandedOperator& m) {
    auto& check = report.add(name, formula);
    const auto sq = m * m - id;
    mark_skipped(check, sq);
    for (auto r : sq.complete_rows()) {
      check.expect_true(row_label(r), sq.row(r).empty(), sq.row_text(r));
    }
  };
  check_involution("M1^2", "M1^2 = I", m1);
  check_involution("M2^2", "M2^2 = I", m2);

  auto& band = report.add("pentadiagonal", "(M1 M2)_ij = 0 for |i - j| > 2");
  const auto c = m1 * m2;
  band.expect_true("C", c.bandwidth() <= 2, "bandwidth " + std::to_string(c.bandwidth()));
  return report;
}

std::vector<std::complex<double>> truncated_spectrum(const BandedOperator& c) {
  const auto n = static_cast<Eigen::Index>(c.size());
  if (n < 1) throw std::invalid_argument("spectrum of an empty operator");
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t r = 0; r < c.size(); ++r) {
    for (const auto& [col, v] : c.row(r)) {
      dense(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) = v.to_double();
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(dense, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("eigenvalue iteration did not converge");
  std::vector<std::complex<double>> values(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::sort(values.begin(), values.end(), [](const auto& x, const auto& y) {
    const double ax = std::arg(x);
    const double ay = std::arg(y);
    if (ax != ay) return ax < ay;
    return std::abs(x) < std::abs(y);
  });
  return values;
}

}  // namespace opuc
