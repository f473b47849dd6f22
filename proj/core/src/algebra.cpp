#include "opuc/algebra.hpp"

#include <stdexcept>
#include <string>

#include "opuc/cmv.hpp"
#include "opuc/dunkl.hpp"
#include "opuc/errors.hpp"

namespace opuc {

namespace {

const Rational kOne{1};

// c + d * lambda_0 with lambda_0 still unknown.
struct Affine {
  Rational c, d;
};

Affine operator-(const Rational& k, const Affine& x) { return {k - x.c, -x.d}; }

LinearOp compose(LinearOp a, LinearOp b) {
  return [a = std::move(a), b = std::move(b)](const LaurentPoly& f) { return a(b(f)); };
}

LinearOp add(LinearOp a, LinearOp b) {
  return [a = std::move(a), b = std::move(b)](const LaurentPoly& f) { return a(f) + b(f); };
}

LinearOp scaled(Rational c, LinearOp a) {
  return [c = std::move(c), a = std::move(a)](const LaurentPoly& f) { return c * a(f); };
}

LinearOp identity_op() {
  return [](const LaurentPoly& f) { return f; };
}

LinearOp anticommutator(const LinearOp& a, const LinearOp& b) { return add(compose(a, b), compose(b, a)); }
LinearOp commutator(const LinearOp& a, const LinearOp& b) { return add(compose(a, b), scaled(Rational{-1}, compose(b, a))); }

std::string k_label(int k) { return "functional k=" + std::to_string(k); }
std::string row_label(std::size_t r) { return "matrix row " + std::to_string(r); }

void check_functional(IdentityCheck& check, const LinearOp& lhs_minus_rhs, int d) {
  for (int k = -d; k <= d; ++k) check.expect_zero(k_label(k), lhs_minus_rhs(z_pow(k)));
}

void check_matrix(IdentityCheck& check, const BandedOperator& lhs_minus_rhs) {
  for (std::size_t r = 0; r < lhs_minus_rhs.size(); ++r) {
    if (!lhs_minus_rhs.row_complete(r)) {
      check.skipped.push_back(row_label(r));
      continue;
    }
    check.expect_true(row_label(r), lhs_minus_rhs.row(r).empty(), lhs_minus_rhs.row_text(r));
  }
}

std::vector<Rational> jacobi_verblunsky(const Rational& alpha, const Rational& beta, std::size_t count) {
  std::vector<Rational> a;
  for (std::size_t n = 0; n < count; ++n) a.push_back(verblunsky_jacobi(alpha, beta, static_cast<int>(n)));
  return a;
}

// Solves coef * a = rhs for a.
Rational solve_linear(const Rational& coef, const Rational& rhs, const std::string& where) {
  if (coef.is_zero()) {
    throw InconsistentSystem(rhs.is_zero() ? "a is undetermined at " + where : "unsatisfiable equation at " + where);
  }
  return rhs / coef;
}

}  // namespace

CanonicalForm canonicalize(const AlgebraParams& g) {
  if (!g.nondegenerate()) throw Degenerate("K, M1, M2 relations are degenerate (need g3 != g1 and g2 != 0)");
  CanonicalForm c;
  c.mu = (g.g3 - g.g1).reciprocal();
  const Rational sum_plus_one = -g.g2 * c.mu;  // alpha + beta + 1
  const Rational diff = g.g4 * c.mu;           // alpha - beta
  c.alpha = (sum_plus_one - kOne + diff) / Rational{2};
  c.beta = (sum_plus_one - kOne - diff) / Rational{2};
  c.nu = (sum_plus_one - c.mu * g.g1) / Rational{2};
  if (relations_of(c).g1 != g.g1 || relations_of(c).g2 != g.g2 || relations_of(c).g3 != g.g3 ||
      relations_of(c).g4 != g.g4) {
    throw std::logic_error("canonical form does not reproduce the input relations");
  }
  return c;
}

AlgebraParams relations_of(const CanonicalForm& c) {
  // K_c = mu K + nu I, so {K, M} = ({K_c, M} - 2 nu M) / mu.
  const Rational s = c.alpha + c.beta + kOne;
  const Rational t = c.alpha + c.beta + Rational{2};
  const Rational e = c.alpha - c.beta;
  AlgebraParams g;
  g.g1 = (s - Rational{2} * c.nu) / c.mu;
  g.g2 = -s / c.mu;
  g.g3 = (t - Rational{2} * c.nu) / c.mu;
  g.g4 = e / c.mu;
  return g;
}

CentralExtension central_extension(const Rational& alpha, const Rational& beta) {
  const Rational sum = alpha + beta;
  CentralExtension ext;
  ext.qj.a = Rational{2};
  ext.qj.c = sum * (sum + Rational{2});
  ext.qj.d = Rational{};
  ext.qj.e1 = Rational{-8};
  ext.qj.e2 = Rational{2} * (alpha - beta) * (sum + kOne);
  ext.m1_coefficient = Rational{2} * (beta - alpha);
  return ext;
}

Representation derive_representation(const Rational& alpha, const Rational& beta, int N) {
  if (N < 0) throw std::invalid_argument("representation size must be nonnegative");
  const Rational s = alpha + beta + kOne;          // {K, M1} = s (M1 - I)
  const Rational t = alpha + beta + Rational{2};   // {K, M2} = t M2 + e I
  const Rational e = alpha - beta;

  // Off-diagonal entries, (lambda_i + lambda_j) M_ij = (coefficient of M) M_ij
  // with M_ij != 0 (a_n^2 != 1): the M2 block at rows (2k, 2k+1) forces
  // lambda_{2k} + lambda_{2k+1} = t, the M1 block at (2k+1, 2k+2) forces
  // lambda_{2k+1} + lambda_{2k+2} = s.
  const int count = N + 2;
  std::vector<Affine> lam(static_cast<std::size_t>(count));
  lam[0] = {Rational{}, kOne};
  for (int n = 1; n < count; ++n) {
    const Rational& pair_sum = (n % 2 == 1) ? t : s;
    lam[static_cast<std::size_t>(n)] = pair_sum - lam[static_cast<std::size_t>(n - 1)];
  }

  // First diagonal entry, M1 row 0 = e_0: 2 lambda_0 = s (1 - 1) = 0.
  const Rational lambda0{};

  std::vector<Rational> lambda;
  for (const auto& x : lam) lambda.push_back(x.c + x.d * lambda0);

  Representation rep;
  rep.lambda.assign(lambda.begin(), lambda.begin() + N + 1);
  for (int n = 0; n <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const std::string where = "a_" + std::to_string(n);
    Rational first, second;
    if (n % 2 == 0) {
      // M2 block B(a_n) at rows (n, n+1): diagonal entries of
      // {K, M2} = t M2 + e I read 2 lambda_n a = t a + e and
      // -2 lambda_{n+1} a = -t a + e.
      first = solve_linear(Rational{2} * lambda[i] - t, e, where + " (first diagonal)");
      second = solve_linear(t - Rational{2} * lambda[i + 1], e, where + " (second diagonal)");
    } else {
      // M1 block B(a_n) at rows (n, n+1): 2 lambda_n a = s (a - 1) and
      // -2 lambda_{n+1} a = s (-a - 1).
      first = solve_linear(Rational{2} * lambda[i] - s, -s, where + " (first diagonal)");
      second = solve_linear(s - Rational{2} * lambda[i + 1], -s, where + " (second diagonal)");
    }
    if (first != second) {
      throw InconsistentSystem(where + ": diagonal equations disagree (" + first.to_string() + " vs " +
                               second.to_string() + ")");
    }
    if (first * first == kOne) throw Degenerate(where + " = " + first.to_string() + " makes the OPUC degenerate");
    rep.a.push_back(first);
  }
  return rep;
}

FunctionalRealization functional_realization(const Rational& alpha, const Rational& beta) {
  FunctionalRealization f;
  f.K = [alpha, beta](const LaurentPoly& p) { return apply_k(p, alpha, beta); };
  f.M1 = [](const LaurentPoly& p) { return reflect(p); };
  f.M2 = [](const LaurentPoly& p) { return mul_z(reflect(p)); };
  f.X = anticommutator(f.M1, f.M2);
  f.Y = add(compose(f.K, f.K), scaled(-(alpha + beta + kOne), f.K));
  return f;
}

MatrixRealization matrix_realization(const Rational& alpha, const Rational& beta, std::size_t N) {
  const auto a = jacobi_verblunsky(alpha, beta, N);
  std::vector<Rational> lambda;
  for (std::size_t n = 0; n < N; ++n) lambda.push_back(lambda_n(alpha, beta, static_cast<int>(n)));
  MatrixRealization m{BandedOperator::diagonal(lambda), build_m1(a, N), build_m2(a, N), BandedOperator(N),
                      BandedOperator(N)};
  m.X = opuc::anticommutator(m.M2, m.M1);
  m.Y = m.K * m.K - (alpha + beta + kOne) * m.K;
  return m;
}

VerificationReport verify_relations_matrix(const Rational& alpha, const Rational& beta, std::size_t N) {
  if (N < 3) throw std::invalid_argument("matrix relation check needs N >= 3");
  const auto m = matrix_realization(alpha, beta, N);
  const auto id = BandedOperator::identity(N);
  const Rational s = alpha + beta + kOne;
  VerificationReport report;
  auto& r1 = report.add("KM12-1", "{K, M1} = (alpha+beta+1)(M1 - I)");
  check_matrix(r1, opuc::anticommutator(m.K, m.M1) - s * (m.M1 - id));
  auto& r2 = report.add("KM12-2", "{K, M2} = (alpha+beta+2) M2 + (alpha-beta) I");
  check_matrix(r2, opuc::anticommutator(m.K, m.M2) - (s + kOne) * m.M2 - (alpha - beta) * id);
  return report;
}

VerificationReport verify_relations_functional(const Rational& alpha, const Rational& beta, int d) {
  if (d < 1) throw std::invalid_argument("functional relation check needs d >= 1");
  const auto f = functional_realization(alpha, beta);
  const Rational s = alpha + beta + kOne;
  VerificationReport report;
  auto& r1 = report.add("KM12-1", "{K, R} = (alpha+beta+1)(R - I)");
  check_functional(r1, add(anticommutator(f.K, f.M1), scaled(-s, add(f.M1, scaled(Rational{-1}, identity_op())))),
                   d);
  auto& r2 = report.add("KM12-2", "{K, zR} = (alpha+beta+2) zR + (alpha-beta) I");
  check_functional(r2,
                   add(anticommutator(f.K, f.M2),
                       add(scaled(-(s + kOne), f.M2), scaled(-(alpha - beta), identity_op()))),
                   d);
  return report;
}

VerificationReport verify_central_extension(const Rational& alpha, const Rational& beta, int d,
                                            std::size_t matrix_n) {
  if (d < 2) throw std::invalid_argument("central extension check needs d >= 2");
  const auto ext = central_extension(alpha, beta);
  const auto& qj = ext.qj;
  VerificationReport report;

  auto& cm = report.add("CM", "[X, M1] = [Y, M1] = 0");
  auto& jr1 = report.add("JR1", "[X, [X, Y]] = 2 X^2 - 8 I");
  auto& jr2 = report.add("JR2",
                         "[Y, [Y, X]] = 2 {X, Y} + (alpha+beta)(alpha+beta+2) X + 2(beta-alpha) M1 + "
                         "2(alpha-beta)(alpha+beta+1) I");

  {
    const auto f = functional_realization(alpha, beta);
    const LinearOp id = identity_op();
    for (int k = -d; k <= d; ++k) {
      const LaurentPoly zk = z_pow(k);
      cm.expect_zero(k_label(k) + " X", commutator(f.X, f.M1)(zk));
      cm.expect_zero(k_label(k) + " Y", commutator(f.Y, f.M1)(zk));
    }
    const LinearOp jr1_rhs = add(scaled(qj.a, compose(f.X, f.X)), add(scaled(qj.d, f.X), scaled(qj.e1, id)));
    check_functional(jr1, add(commutator(f.X, commutator(f.X, f.Y)), scaled(Rational{-1}, jr1_rhs)), d);
    const LinearOp jr2_rhs =
        add(add(scaled(qj.a, anticommutator(f.X, f.Y)), scaled(qj.c, f.X)),
            add(add(scaled(qj.d, f.Y), scaled(ext.m1_coefficient, f.M1)), scaled(qj.e2, id)));
    check_functional(jr2, add(commutator(f.Y, commutator(f.Y, f.X)), scaled(Rational{-1}, jr2_rhs)), d);
  }
  {
    const auto m = matrix_realization(alpha, beta, matrix_n);
    const auto id = BandedOperator::identity(matrix_n);
    const auto cx = opuc::commutator(m.X, m.M1);
    const auto cy = opuc::commutator(m.Y, m.M1);
    for (std::size_t r = 0; r < matrix_n; ++r) {
      if (!cx.row_complete(r) || !cy.row_complete(r)) {
        cm.skipped.push_back(row_label(r));
        continue;
      }
      cm.expect_true(row_label(r) + " X", cx.row(r).empty(), cx.row_text(r));
      cm.expect_true(row_label(r) + " Y", cy.row(r).empty(), cy.row_text(r));
    }
    check_matrix(jr1, opuc::commutator(m.X, opuc::commutator(m.X, m.Y)) -
                          (qj.a * (m.X * m.X) + qj.d * m.X + qj.e1 * id));
    check_matrix(jr2, opuc::commutator(m.Y, opuc::commutator(m.Y, m.X)) -
                          (qj.a * opuc::anticommutator(m.X, m.Y) + qj.c * m.X + qj.d * m.Y +
                           ext.m1_coefficient * m.M1 + qj.e2 * id));
  }
  return report;
}

VerificationReport verify_xy_cross_realization(const OPUCFamily& fam) {
  if (!fam.params) throw std::invalid_argument("cross-realization check needs the family's Jacobi parameters");
  const auto& p = *fam.params;
  const auto f = functional_realization(p.alpha(), p.beta());
  const std::size_t N = fam.psi.size();
  const auto m = matrix_realization(p.alpha(), p.beta(), N);
  VerificationReport report;
  auto& x = report.add("X-cross", "X psi_n (functional) = sum_m X_nm psi_m (matrix)");
  auto& y = report.add("Y-cross", "Y psi_n (functional) = sum_m Y_nm psi_m (matrix)");
  for (std::size_t n = 0; n < N; ++n) {
    auto combo = [&](const BandedOperator& op) {
      LaurentPoly sum;
      for (const auto& [col, v] : op.row(n)) sum += v * fam.psi[col];
      return sum;
    };
    if (m.X.row_complete(n)) {
      x.expect_zero(row_label(n), f.X(fam.psi[n]) - combo(m.X));
    } else {
      x.skipped.push_back(row_label(n));
    }
    y.expect_zero(row_label(n), f.Y(fam.psi[n]) - combo(m.Y));
  }
  return report;
}

VerificationReport y_eigencheck(const OPUCFamily& fam, const SzegoPair& pair) {
  if (!fam.params) throw std::invalid_argument("Y eigencheck needs the family's Jacobi parameters");
  const Rational& al = fam.params->alpha();
  const Rational& be = fam.params->beta();
  const Rational s = al + be + kOne;
  const auto f = functional_realization(al, be);
  auto Lambda = [&](int n) {
    const Rational l = lambda_n(al, be, n);
    return l * l - s * l;
  };
  VerificationReport report;

  auto& ypsi = report.add("Ypsi", "Y psi_n = Lambda_n psi_n, Lambda_n = lambda_n^2 - (alpha+beta+1) lambda_n");
  for (int n = 0; n <= fam.N; ++n) {
    const auto& psi = fam.psi[static_cast<std::size_t>(n)];
    ypsi.expect_zero("n=" + std::to_string(n), f.Y(psi) - Lambda(n) * psi);
  }

  const int count = static_cast<int>(pair.P.size());
  auto& pairing = report.add("Lambda-pair", "Lambda_{2n-1} = Lambda_{2n} = n(alpha+beta+n+1)");
  auto& yp = report.add("YP", "Y P_n = Lambda_{2n} P_n");
  auto& yf = report.add("YF", "Y F_n = Lambda_{2n} F_n, F_n = (z - 1/z) Q_{n-1}");
  auto& rp = report.add("RP", "R P_n = P_n");
  auto& rf = report.add("RF", "R F_n = -F_n");
  const LaurentPoly d = z_pow(1) - z_pow(-1);
  for (int n = 0; n < count; ++n) {
    const std::string label = "n=" + std::to_string(n);
    const Rational closed = Rational{n} * (al + be + Rational{n} + kOne);
    pairing.expect_equal(label + " even", Lambda(2 * n), closed);
    if (n >= 1) pairing.expect_equal(label + " odd", Lambda(2 * n - 1), closed);

    const auto& P = pair.P[static_cast<std::size_t>(n)].poly();
    yp.expect_zero(label, f.Y(P) - closed * P);
    rp.expect_zero(label, reflect(P) - P);
    if (n >= 1) {
      const LaurentPoly F = d * pair.Q[static_cast<std::size_t>(n - 1)].poly();
      yf.expect_zero(label, f.Y(F) - closed * F);
      rf.expect_zero(label, reflect(F) + F);
    }
  }
  return report;
}

}  // namespace opuc
