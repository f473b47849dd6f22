#include "opuc/szego.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "opuc/errors.hpp"

namespace opuc {

namespace {

const Rational kOne{1};

std::string idx(int n) { return "n=" + std::to_string(n); }

LaurentPoly x_power(int k) {
  LaurentPoly p(Rational{1});
  const LaurentPoly x = x_of_z();
  for (int i = 0; i < k; ++i) p *= x;
  return p;
}

// z - 1/z
const LaurentPoly& z_minus_inv() {
  static const LaurentPoly d = z_pow(1) - z_pow(-1);
  return d;
}

const LaurentPoly& phi_at(const OPUCFamily& fam, int n) {
  if (n < 0 || n > fam.N) {
    throw std::out_of_range("Szego map needs Phi_" + std::to_string(n) + " but the family stops at " +
                            std::to_string(fam.N));
  }
  return fam.phi[static_cast<std::size_t>(n)];
}

// coef * chain[k], where a vanishing coefficient never reads chain[k]; this
// is how a_{-2}, Q_{-1} and P_{-1} are kept out of the formulas.
LaurentPoly term(const Rational& coef, const std::vector<SymmetricLaurent>& chain, int k) {
  if (coef.is_zero()) return {};
  if (k < 0 || k >= static_cast<int>(chain.size())) {
    throw std::out_of_range("polynomial index " + std::to_string(k) + " outside the built chain");
  }
  return coef * chain[static_cast<std::size_t>(k)].poly();
}

LaurentPoly psi_at(const OPUCFamily& fam, int n) {
  if (n < 0 || n > fam.N) throw std::out_of_range("psi_" + std::to_string(n) + " outside the family");
  return fam.psi[static_cast<std::size_t>(n)];
}

// Classical monic Jacobi recurrence on [-1, 1]; exact.
Rational classical_b(const Rational& a, const Rational& b, int n) {
  if (n == 0) return (b - a) / (a + b + Rational{2});
  const Rational s = Rational{2 * n} + a + b;
  return (b * b - a * a) / (s * (s + Rational{2}));
}

Rational classical_a(const Rational& a, const Rational& b, int n) {
  if (n == 1) {
    const Rational s = a + b + Rational{2};
    return Rational{4} * (kOne + a) * (kOne + b) / (s * s * (s + kOne));
  }
  const Rational s = Rational{2 * n} + a + b;
  return Rational{4 * n} * (Rational{n} + a) * (Rational{n} + b) * (Rational{n} + a + b) /
         (s * s * (s + kOne) * (s - kOne));
}

}  // namespace

SymmetricLaurent::SymmetricLaurent(LaurentPoly poly) : poly_(std::move(poly)) {
  if (reflect(poly_) != poly_) {
    throw std::invalid_argument("not invariant under z -> 1/z: " + poly_.to_string());
  }
}

SymmetricLaurent SymmetricLaurent::from_x_coefficients(const std::vector<Rational>& c) {
  LaurentPoly p;
  for (std::size_t k = 0; k < c.size(); ++k) p += c[k] * x_power(static_cast<int>(k));
  return SymmetricLaurent(std::move(p));
}

int SymmetricLaurent::degree() const { return poly_.is_zero() ? -1 : poly_.max_exp(); }

bool SymmetricLaurent::is_monic() const { return !poly_.is_zero() && poly_.coeff(poly_.max_exp()) == kOne; }

std::vector<Rational> SymmetricLaurent::x_coefficients() const {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(degree() + 1, 0)));
  LaurentPoly rest = poly_;
  while (!rest.is_zero()) {
    const int d = rest.max_exp();
    const Rational c = rest.coeff(d);
    out[static_cast<std::size_t>(d)] = c;
    rest -= c * x_power(d);
  }
  return out;
}

SymmetricLaurent build_p(const OPUCFamily& fam, int n) {
  if (n < 0) throw std::invalid_argument("P_n needs n >= 0");
  if (n == 0) return SymmetricLaurent(LaurentPoly(Rational{1}));
  const auto& phi = phi_at(fam, 2 * n - 1);
  return SymmetricLaurent(shift(phi, 1 - n) + shift(reflect(phi), n - 1));
}

SymmetricLaurent build_q(const OPUCFamily& fam, int n) {
  if (n < 0) throw std::invalid_argument("Q_n needs n >= 0");
  const auto& phi = phi_at(fam, 2 * n + 1);
  return SymmetricLaurent(div_exact(shift(phi, -n) - shift(reflect(phi), n), z_minus_inv()));
}

const Rational& verblunsky_ext(const OPUCFamily& fam, int k) {
  if (k == -1) return kVerblunskyAtMinusOne;
  if (k < -1 || k > fam.N) throw std::out_of_range("Verblunsky index " + std::to_string(k) + " unavailable");
  return fam.a[static_cast<std::size_t>(k)];
}

RecurrenceCoefficients rec_coeffs(const OPUCFamily& fam, int N) {
  auto a = [&](int k) -> const Rational& { return verblunsky_ext(fam, k); };
  RecurrenceCoefficients rc;
  for (int n = 0; n <= N; ++n) {
    // b_n = a_{2n}(1 - a_{2n-1}) - a_{2n-2}(1 + a_{2n-1}); at n = 0 the second
    // product has the factor 1 + a_{-1} = 0 and a_{-2} is not read.
    const Rational up = kOne + a(2 * n - 1);
    Rational b = a(2 * n) * (kOne - a(2 * n - 1));
    if (!up.is_zero()) b -= a(2 * n - 2) * up;
    rc.b.push_back(b);
    rc.u.push_back(n == 0 ? Rational{} : up * (kOne - a(2 * n - 3)) * (kOne - a(2 * n - 2) * a(2 * n - 2)));
    rc.bt.push_back(a(2 * n) * (kOne - a(2 * n + 1)) - a(2 * n + 2) * (kOne + a(2 * n + 1)));
    rc.ut.push_back(n == 0 ? Rational{} : up * (kOne - a(2 * n + 1)) * (kOne - a(2 * n) * a(2 * n)));
  }
  return rc;
}

void write_rec_coeffs_csv(std::ostream& os, const RecurrenceCoefficients& rc) {
  os << "n,b_n,u_n,bt_n,ut_n\n";
  for (std::size_t n = 0; n < rc.b.size(); ++n) {
    os << n << ',' << rc.b[n] << ',' << rc.u[n] << ',' << rc.bt[n] << ',' << rc.ut[n] << '\n';
  }
}

int szego_family_size(int N) { return 2 * N + 3; }

SzegoPair build_szego_pair(const OPUCFamily& fam, int N) {
  if (N < 0) throw std::invalid_argument("Szego pair needs N >= 0");
  if (fam.N < szego_family_size(N)) {
    throw std::invalid_argument("Szego pair through " + std::to_string(N) + " needs the family through index " +
                                std::to_string(szego_family_size(N)));
  }
  SzegoPair pair;
  for (int n = 0; n <= N + 1; ++n) {
    pair.P.push_back(build_p(fam, n));
    pair.Q.push_back(build_q(fam, n));
  }
  pair.coeffs = rec_coeffs(fam, N);
  return pair;
}

VerificationReport verify_three_term(const SzegoPair& pair) {
  VerificationReport report;
  const LaurentPoly x = x_of_z();
  const int N = static_cast<int>(pair.coeffs.b.size()) - 1;
  auto check_chain = [&](const char* name, const char* formula, const std::vector<SymmetricLaurent>& chain,
                         const std::vector<Rational>& b, const std::vector<Rational>& u) {
    auto& check = report.add(name, formula);
    for (int n = 0; n <= N; ++n) {
      const auto i = static_cast<std::size_t>(n);
      LaurentPoly residual = chain[i + 1].poly() + b[i] * chain[i].poly() - x * chain[i].poly();
      if (n > 0) residual += u[i] * chain[i - 1].poly();
      check.expect_zero(idx(n), residual);
    }
  };
  check_chain("rec-P", "P_{n+1} + b_n P_n + u_n P_{n-1} = x P_n", pair.P, pair.coeffs.b, pair.coeffs.u);
  check_chain("rec-Q", "Q_{n+1} + b~_n Q_n + u~_n Q_{n-1} = x Q_n", pair.Q, pair.coeffs.bt, pair.coeffs.ut);
  return report;
}

VerificationReport verify_rec_coeffs_fit(const SzegoPair& pair) {
  VerificationReport report;
  const LaurentPoly x = x_of_z();
  const int N = static_cast<int>(pair.coeffs.b.size()) - 1;
  auto fit_chain = [&](const char* name, const char* formula, const std::vector<SymmetricLaurent>& chain,
                       const std::vector<Rational>& b, const std::vector<Rational>& u) {
    auto& check = report.add(name, formula);
    auto& pos = report.add(std::string(name) + "-positive", "recurrence u_n > 0 for n >= 1");
    for (int n = 0; n <= N; ++n) {
      const auto i = static_cast<std::size_t>(n);
      // x P_n - P_{n+1} = b_n P_n + u_n P_{n-1}; read b_n off z^n, u_n off z^{n-1}.
      LaurentPoly rest = x * chain[i].poly() - chain[i + 1].poly();
      const Rational fitted_b = rest.coeff(n);
      rest -= fitted_b * chain[i].poly();
      check.expect_equal(idx(n) + " b", fitted_b, b[i]);
      if (n > 0) {
        const Rational fitted_u = rest.coeff(n - 1);
        rest -= fitted_u * chain[i - 1].poly();
        check.expect_equal(idx(n) + " u", fitted_u, u[i]);
        pos.expect_true(idx(n), u[i].sign() > 0, "u = " + u[i].to_string());
      }
      check.expect_zero(idx(n) + " remainder", rest);
    }
  };
  fit_chain("fit-P", "fitted (b_n, u_n) of the P chain = Verblunsky formulas", pair.P, pair.coeffs.b, pair.coeffs.u);
  fit_chain("fit-Q", "fitted (b~_n, u~_n) of the Q chain = Verblunsky formulas", pair.Q, pair.coeffs.bt,
            pair.coeffs.ut);
  return report;
}

VerificationReport verify_transforms(const OPUCFamily& fam, const SzegoPair& pair, int N) {
  if (static_cast<int>(pair.P.size()) < N + 2 || static_cast<int>(pair.Q.size()) < N + 1) {
    throw std::invalid_argument("transform range exceeds the Szego pair");
  }
  auto a = [&](int k) -> const Rational& { return verblunsky_ext(fam, k); };
  const auto& P = pair.P;
  const auto& Q = pair.Q;
  const LaurentPoly& d = z_minus_inv();
  const LaurentPoly d2 = d * d;
  const LaurentPoly x = x_of_z();
  VerificationReport report;

  auto& christoffel = report.add(
      "christoffel", "(z-1/z)^2 Q_{n-1} = P_{n+1} + (a_{2n}+a_{2n-2})(1-a_{2n-1}) P_n - "
                     "(1-a_{2n-1})(1-a_{2n-3})(1-a_{2n-2}^2) P_{n-1}");
  auto& christoffel_alt = report.add(
      "christoffel-alt", "(z-1/z)^2 Q_{n-1} = (x + 2 a_{2n-2}) P_n - 2 (1-a_{2n-3})(1-a_{2n-2}^2) P_{n-1}");
  auto& geronimus = report.add(
      "geronimus", "P_n = Q_n - (1+a_{2n-1})(a_{2n}+a_{2n-2}) Q_{n-1} - "
                   "(1+a_{2n-1})(1+a_{2n-3})(1-a_{2n-2}^2) Q_{n-2}");
  auto& psi_pq = report.add("psi-from-PQ",
                            "psi_{2n-1} = (P_n + (z-1/z) Q_{n-1})/2, "
                            "psi_{2n} = ((1-a_{2n-1}) P_n - (1+a_{2n-1})(z-1/z) Q_{n-1})/2");
  auto& psi_pp = report.add(
      "psi-from-PP",
      "psi_{2n-1} = ((z + a_{2n-2}) P_n - (1-a_{2n-3})(1-a_{2n-2}^2) P_{n-1})/(z-1/z), "
      "psi_{2n} = ((a_{2n-1} z + 1/z + a_{2n-2}(1+a_{2n-1})) P_n - "
      "(1+a_{2n-1})(1-a_{2n-3})(1-a_{2n-2}^2) P_{n-1})/(1/z-z)");
  psi_pp.notes.push_back("the even line divides by 1/z - z; with z - 1/z it yields -psi_{2n}");
  auto& pq_psi = report.add("PQ-from-psi",
                            "P_n = psi_{2n} + (1+a_{2n-1}) psi_{2n-1}, "
                            "(z-1/z) Q_{n-1} = -psi_{2n} + (1-a_{2n-1}) psi_{2n-1}");

  for (int n = 0; n <= N; ++n) {
    const Rational a2n = a(2 * n);
    const Rational a2n1 = a(2 * n - 1);
    const Rational up = kOne + a2n1;
    const Rational down = kOne - a2n1;
    // Terms multiplied by 1 + a_{-1} = 0 are skipped before a_{2n-2} or
    // a_{2n-3} is read at n = 0.
    const Rational a2n2 = n >= 1 ? a(2 * n - 2) : Rational{};
    const Rational a2n3 = n >= 1 ? a(2 * n - 3) : Rational{};
    const Rational one_minus_sq = kOne - a2n2 * a2n2;
    const auto i = static_cast<std::size_t>(n);

    // Geronimus holds from n = 0 (P_0 = Q_0).
    {
      LaurentPoly rhs = Q[i].poly();
      if (n >= 1) rhs -= term(up * (a2n + a2n2), Q, n - 1);
      if (n >= 1) rhs -= term(up * (kOne + a2n3) * one_minus_sq, Q, n - 2);
      geronimus.expect_zero(idx(n), P[i].poly() - rhs);
    }

    // Even reconstructions hold from n = 0.
    {
      LaurentPoly F = n >= 1 ? d * Q[i - 1].poly() : LaurentPoly{};
      LaurentPoly even = Rational{1, 2} * (down * P[i].poly() - up * F);
      psi_pq.expect_zero("psi_" + std::to_string(2 * n), psi_at(fam, 2 * n) - even);

      LaurentPoly lin;
      lin.set_coeff(1, a2n1);
      lin.set_coeff(-1, kOne);
      if (!up.is_zero()) lin.add_term(0, a2n2 * up);
      LaurentPoly num = lin * P[i].poly();
      if (n >= 1) num -= term(up * (kOne - a2n3) * one_minus_sq, P, n - 1);
      psi_pp.expect_zero("psi_" + std::to_string(2 * n), psi_at(fam, 2 * n) - div_exact(num, -d));
    }

    if (n == 0) continue;

    const LaurentPoly F = d * Q[i - 1].poly();
    {
      LaurentPoly rhs = P[i + 1].poly() + ((a2n + a2n2) * down) * P[i].poly() -
                        term(down * (kOne - a2n3) * one_minus_sq, P, n - 1);
      christoffel.expect_zero(idx(n), d2 * Q[i - 1].poly() - rhs);
    }
    {
      LaurentPoly lin = x + LaurentPoly(Rational{2} * a2n2);
      LaurentPoly rhs = lin * P[i].poly() - term(Rational{2} * (kOne - a2n3) * one_minus_sq, P, n - 1);
      christoffel_alt.expect_zero(idx(n), d2 * Q[i - 1].poly() - rhs);
    }
    {
      LaurentPoly odd = Rational{1, 2} * (P[i].poly() + F);
      psi_pq.expect_zero("psi_" + std::to_string(2 * n - 1), psi_at(fam, 2 * n - 1) - odd);

      LaurentPoly lin = z_pow(1) + LaurentPoly(a2n2);
      LaurentPoly num = lin * P[i].poly() - term((kOne - a2n3) * one_minus_sq, P, n - 1);
      psi_pp.expect_zero("psi_" + std::to_string(2 * n - 1), psi_at(fam, 2 * n - 1) - div_exact(num, d));
    }
    {
      pq_psi.expect_zero("P_" + std::to_string(n),
                         P[i].poly() - (psi_at(fam, 2 * n) + up * psi_at(fam, 2 * n - 1)));
      pq_psi.expect_zero("F_" + std::to_string(n), F - (down * psi_at(fam, 2 * n - 1) - psi_at(fam, 2 * n)));
    }
  }
  return report;
}

VerificationReport verify_symmetry(const SzegoPair& pair) {
  VerificationReport report;
  auto& rp = report.add("RP", "R P_n = P_n");
  auto& rf = report.add("RF", "R F_n = -F_n, F_n = (z - 1/z) Q_{n-1}");
  auto& monic = report.add("monic", "P_n and Q_n monic of degree n in x");
  for (std::size_t n = 0; n < pair.P.size(); ++n) {
    const auto& p = pair.P[n].poly();
    rp.expect_zero(idx(static_cast<int>(n)), reflect(p) - p);
    monic.expect_true("P_" + std::to_string(n), pair.P[n].is_monic() && pair.P[n].degree() == static_cast<int>(n),
                      p.to_string());
    monic.expect_true("Q_" + std::to_string(n), pair.Q[n].is_monic() && pair.Q[n].degree() == static_cast<int>(n),
                      pair.Q[n].poly().to_string());
    if (n == 0) continue;
    const LaurentPoly F = z_minus_inv() * pair.Q[n - 1].poly();
    rf.expect_zero(idx(static_cast<int>(n)), reflect(F) + F);
  }
  return report;
}

SymmetricLaurent classical_jacobi_oracle(const Rational& alpha, const Rational& beta, int n) {
  if (n < 0) throw std::invalid_argument("oracle degree must be nonnegative");
  if (alpha <= Rational{-1} || beta <= Rational{-1}) throw ParamOutOfRange("oracle needs alpha, beta > -1");
  // Monic on [-1, 1]: p_{k+1} = (t - B_k) p_k - A_k p_{k-1}. With x = 2t the
  // monic rescaling 2^k p_k(x/2) obeys P_{k+1} = (x - 2 B_k) P_k - 4 A_k P_{k-1}.
  const LaurentPoly x = x_of_z();
  LaurentPoly prev;
  LaurentPoly cur(Rational{1});
  for (int k = 0; k < n; ++k) {
    LaurentPoly next = x * cur - (Rational{2} * classical_b(alpha, beta, k)) * cur;
    if (k > 0) next -= (Rational{4} * classical_a(alpha, beta, k)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return SymmetricLaurent(std::move(cur));
}

VerificationReport verify_classical_match(const OPUCFamily& fam, int N) {
  if (!fam.params) throw std::invalid_argument("classical match needs the family's Jacobi parameters");
  const Rational& al = fam.params->alpha();
  const Rational& be = fam.params->beta();
  VerificationReport report;
  auto& p = report.add("P-classical", "P_n = monic Jacobi(alpha, beta) on [-2, 2]");
  auto& q = report.add("Q-classical", "Q_n = monic Jacobi(alpha+1, beta+1) on [-2, 2]");
  for (int n = 0; n <= N; ++n) {
    p.expect_zero(idx(n), build_p(fam, n).poly() - classical_jacobi_oracle(al, be, n).poly());
    q.expect_zero(idx(n), build_q(fam, n).poly() - classical_jacobi_oracle(al + kOne, be + kOne, n).poly());
  }
  return report;
}

VerificationReport verify_dep_and_pq_identity(const OPUCFamily& fam, int N) {
  if (!fam.params) throw std::invalid_argument("hypergeometric check needs the family's Jacobi parameters");
  const Rational& al = fam.params->alpha();
  const Rational& be = fam.params->beta();
  VerificationReport report;
  auto& dep = report.add("DEP",
                         "(z^2-1) z^2 P'' + z((a+b+2) z^2 + 2(a-b) z + a+b) P' = n(n+a+b+1)(z^2-1) P");
  auto& rel = report.add("rel-PQ", "z d/dz P_n = n (z - 1/z) Q_{n-1}");

  LaurentPoly z2m1 = z_pow(2) - LaurentPoly(Rational{1});
  LaurentPoly coef;  // z ((a+b+2) z^2 + 2(a-b) z + a + b)
  coef.set_coeff(3, al + be + Rational{2});
  coef.set_coeff(2, Rational{2} * (al - be));
  coef.set_coeff(1, al + be);

  for (int n = 0; n <= N; ++n) {
    const LaurentPoly P = build_p(fam, n).poly();
    const LaurentPoly dP = derivative(P);
    const LaurentPoly d2P = derivative(dP);
    const Rational eig = Rational{n} * (Rational{n} + al + be + kOne);
    dep.expect_zero(idx(n), z2m1 * z_pow(2) * d2P + coef * dP - eig * (z2m1 * P));

    LaurentPoly rhs;
    if (n > 0) rhs = Rational{n} * (z_minus_inv() * build_q(fam, n - 1).poly());
    rel.expect_zero(idx(n), theta(P) - rhs);
  }
  return report;
}

}  // namespace opuc
