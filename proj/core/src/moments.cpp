#include "opuc/moments.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

#include "opuc/errors.hpp"

namespace opuc {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational det_exact(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det{1};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational{};
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = m[col][col].reciprocal();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

double det_double(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::string pair_label(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

}  // namespace

const char* to_string(Provenance p) { return p == Provenance::Exact ? "exact" : "quadrature"; }

MomentValue MomentValue::from_exact(const Rational& r) { return {Provenance::Exact, r, r.to_double()}; }
MomentValue MomentValue::from_double(double v) { return {Provenance::Quadrature, std::nullopt, v}; }

MomentValue sigma(const Weight& w, int n, int quad_order) {
  switch (w.kind()) {
    case Weight::Kind::Lebesgue:
      return MomentValue::from_exact(n == 0 ? Rational{1} : Rational{});
    case Weight::Kind::SingleMoment:
      if (n == 0) return MomentValue::from_exact(Rational{1});
      if (n == 1 || n == -1) return MomentValue::from_exact(-w.xi() / Rational{2});
      return MomentValue::from_exact(Rational{});
    case Weight::Kind::Jacobi:
      break;
  }
  if (quad_order < 64) throw std::invalid_argument("quadrature order must be at least 64");
  AdaptiveCircleQuadrature quad(w);
  const auto r = quad.integrate([n](std::complex<double> z) { return std::pow(z, n); }, quad_order);
  return MomentValue::from_double(r.value.real());
}

MomentSeq::MomentSeq(const Weight& w, int max_index, int quad_order) : weight_(w), max_index_(max_index) {
  if (max_index < 0) throw std::invalid_argument("moment range must be nonnegative");
  if (w.kind() == Weight::Kind::Jacobi) {
    if (quad_order < 64) throw std::invalid_argument("quadrature order must be at least 64");
    AdaptiveCircleQuadrature quad(w);
    for (int n = 0; n <= max_index; ++n) {
      const auto r = quad.integrate([n](std::complex<double> z) { return std::pow(z, n); }, quad_order);
      // Symmetric real weight: sigma_{-n} = sigma_n.
      values_[n] = values_[-n] = MomentValue::from_double(r.value.real());
    }
    values_[0] = MomentValue::from_double(1.0);
  } else {
    for (int n = -max_index; n <= max_index; ++n) values_[n] = sigma(w, n, quad_order);
  }
}

const MomentValue& MomentSeq::at(int n) const {
  auto it = values_.find(n);
  if (it == values_.end()) throw std::out_of_range("moment index " + std::to_string(n) + " not computed");
  return it->second;
}

bool MomentSeq::exact_through(int upto) const {
  for (int n = -upto; n <= upto; ++n) {
    if (!at(n).exact) return false;
  }
  return true;
}

MomentValue toeplitz_delta(const MomentSeq& m, int n) {
  if (n < 1) throw std::invalid_argument("Toeplitz determinant needs n >= 1");
  MomentValue out;
  if (m.exact_through(n - 1)) {
    RationalMatrix t(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) t[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = *m.at(k - j).exact;
    }
    out = MomentValue::from_exact(det_exact(std::move(t)));
    if (out.exact->sign() <= 0) throw NonPositive("Delta_" + std::to_string(n) + " = " + out.exact->to_string());
  } else {
    std::vector<std::vector<double>> t(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) t[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = m.at(k - j).value;
    }
    out = MomentValue::from_double(det_double(std::move(t)));
    if (!(out.value > 0.0)) throw NonPositive("Delta_" + std::to_string(n) + " = " + std::to_string(out.value));
  }
  return out;
}

LaurentPoly determinantal_phi(const MomentSeq& m, int n) {
  if (n < 0) throw std::invalid_argument("determinantal_phi needs n >= 0");
  if (n == 0) return LaurentPoly(Rational{1});
  if (!m.exact_through(n)) throw std::invalid_argument("determinantal_phi needs exact moments");
  const Rational delta = det_exact([&] {
    RationalMatrix t(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) t[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = *m.at(k - j).exact;
    }
    return t;
  }());
  if (delta.is_zero()) throw SingularDelta("Delta_" + std::to_string(n) + " vanishes");

  // Expand the bordered determinant along its last row (1, z, ..., z^n):
  // the coefficient of z^k is (-1)^(n+k) times the minor without column k.
  LaurentPoly phi;
  for (int k = 0; k <= n; ++k) {
    RationalMatrix minor(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      for (int c = 0; c <= n; ++c) {
        if (c != k) minor[static_cast<std::size_t>(j)].push_back(*m.at(c - j).exact);
      }
    }
    Rational cof = det_exact(std::move(minor));
    if ((n + k) % 2 != 0) cof = -cof;
    phi.set_coeff(k, cof / delta);
  }
  return phi;
}

VerificationReport orthogonality_check(const OPUCFamily& fam, const Weight& w, int N, int quad_order, double tol) {
  if (N > fam.N) throw std::invalid_argument("orthogonality range exceeds the family");
  AdaptiveCircleQuadrature quad(w);
  VerificationReport report;
  auto& off = report.add("ort-offdiag", "|<Phi_n, Phi_m>_w| < tol for n != m (unit-mass weight)", false);
  auto& diag = report.add("ort-diag", "|<Phi_n, Phi_n>_w - h_n| <= tol * h_n (unit-mass weight)", false);
  off.notes.push_back("weight " + w.describe() + " normalized to sigma_0 = 1");
  int max_order = 0;
  for (int n = 0; n <= N; ++n) {
    for (int m = 0; m <= n; ++m) {
      const auto r = quad.pairing(fam.phi[static_cast<std::size_t>(n)], fam.phi[static_cast<std::size_t>(m)],
                                  quad_order);
      max_order = std::max(max_order, r.order);
      if (n == m) {
        const double h = fam.h[static_cast<std::size_t>(n)].to_double();
        diag.expect_small(pair_label(n, m), std::abs(r.value - h) / h, tol);
      } else {
        off.expect_small(pair_label(n, m), std::abs(r.value), tol);
      }
    }
  }
  diag.notes.push_back("quadrature order used up to " + std::to_string(max_order));
  return report;
}

VerificationReport verify_exact_moments(const OPUCFamily& fam, const Weight& w, int N) {
  if (N + 1 > fam.N) throw std::invalid_argument("exact-moment checks need the family through N + 1");
  const MomentSeq m(w, N + 1);
  if (!m.exact_through(N + 1)) throw std::invalid_argument("weight has no exact moments");
  VerificationReport report;

  auto& sym = report.add("moment-symmetry", "sigma_{-n} = sigma_n");
  for (int n = 0; n <= N + 1; ++n) sym.expect_equal("n=" + std::to_string(n), *m.at(-n).exact, *m.at(n).exact);

  auto& det = report.add("determinantal-phi", "bordered Toeplitz Phi_n = Szego-recurrence Phi_n");
  for (int n = 0; n <= N; ++n) {
    det.expect_zero("n=" + std::to_string(n), determinantal_phi(m, n) - fam.phi[static_cast<std::size_t>(n)]);
  }

  auto& pos = report.add("delta-positive", "Delta_n > 0");
  auto& ratio = report.add("h-delta", "Delta_{n+1} / Delta_n = h_n");
  Rational prev{1};  // Delta_0 = 1 by convention, so h_0 = Delta_1.
  for (int n = 1; n <= N + 1; ++n) {
    Rational d;
    try {
      d = *toeplitz_delta(m, n).exact;
      pos.expect_true("n=" + std::to_string(n), true, "");
    } catch (const NonPositive& e) {
      pos.expect_true("n=" + std::to_string(n), false, e.what());
      continue;
    }
    ratio.expect_equal("n=" + std::to_string(n - 1), d / prev, fam.h[static_cast<std::size_t>(n - 1)]);
    prev = d;
  }
  return report;
}

void write_moments_csv(std::ostream& os, const MomentSeq& m) {
  os << "n,sigma_n,provenance,exact\n";
  for (int n = -m.max_index(); n <= m.max_index(); ++n) {
    const auto& v = m.at(n);
    std::ostringstream val;
    val.precision(17);
    val << v.value;
    os << n << ',' << val.str() << ',' << to_string(v.provenance) << ',' << (v.exact ? v.exact->to_string() : "")
       << '\n';
  }
}

}  // namespace opuc
