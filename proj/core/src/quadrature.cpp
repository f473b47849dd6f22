#include "opuc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "opuc/errors.hpp"

namespace opuc {

namespace {

bool is_nonnegative_integer(const Rational& r) { return r.is_integer() && r.sign() >= 0; }

const Rational kHalf{1, 2};

// Monic Jacobi recurrence on [-1, 1] for (1-s)^a (1+s)^b:
// p_{n+1} = (s - B_n) p_n - A_n p_{n-1}.
double jacobi_b(double a, double b, int n) {
  if (n == 0) return (b - a) / (a + b + 2.0);
  const double s = 2.0 * n + a + b;
  return (b * b - a * a) / (s * (s + 2.0));
}

double jacobi_a(double a, double b, int n) {
  if (n == 1) return 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
  const double s = 2.0 * n + a + b;
  return 4.0 * n * (n + a) * (n + b) * (n + a + b) / (s * s * (s + 1.0) * (s - 1.0));
}

CircleRule trapezoid(const Weight& w, int order) {
  CircleRule rule;
  rule.method = "trapezoid";
  rule.order = order;
  double total = 0.0;
  for (int j = 0; j < order; ++j) {
    const double t = 2.0 * std::numbers::pi * j / order;
    rule.angle.push_back(t);
    rule.weight.push_back(w(t));
    total += rule.weight.back();
  }
  for (auto& x : rule.weight) x /= total;
  return rule;
}

CircleRule gauss_jacobi(const Weight& w, int order) {
  const double a = w.alpha().to_double();
  const double b = w.beta().to_double();
  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(order > 1 ? order - 1 : 1);
  for (int n = 0; n < order; ++n) diag(n) = jacobi_b(a, b, n);
  for (int n = 1; n < order; ++n) sub(n - 1) = std::sqrt(jacobi_a(a, b, n));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(order - 1), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw QuadratureUnconverged("Gauss-Jacobi eigenproblem failed");

  CircleRule rule;
  rule.method = "gauss-jacobi";
  rule.order = order;
  double total = 0.0;
  for (int j = 0; j < order; ++j) {
    const double node = std::clamp(solver.eigenvalues()(j), -1.0, 1.0);
    const double v0 = solver.eigenvectors()(0, j);
    const double t = std::acos(node);
    // Each node s = cos t stands for the two angles +t and -t.
    rule.angle.push_back(t);
    rule.weight.push_back(v0 * v0);
    rule.angle.push_back(-t);
    rule.weight.push_back(v0 * v0);
    total += 2.0 * v0 * v0;
  }
  for (auto& x : rule.weight) x /= total;
  return rule;
}

}  // namespace

Weight::Weight(Kind kind, Rational alpha, Rational beta, Rational xi)
    : kind_(kind), alpha_(std::move(alpha)), beta_(std::move(beta)), xi_(std::move(xi)) {}

Weight Weight::jacobi(const JacobiParams& p) { return Weight(Kind::Jacobi, p.alpha(), p.beta(), Rational{}); }

Weight Weight::single_moment(const Rational& xi) {
  if (xi.abs() > Rational{1}) throw ParamOutOfRange("single-moment weight needs |xi| <= 1, got " + xi.to_string());
  return Weight(Kind::SingleMoment, Rational{}, Rational{}, xi);
}

Weight Weight::lebesgue() { return Weight(Kind::Lebesgue, Rational{}, Rational{}, Rational{}); }

std::string Weight::describe() const {
  switch (kind_) {
    case Kind::Jacobi:
      return "jacobi(alpha=" + alpha_.to_string() + ", beta=" + beta_.to_string() + ")";
    case Kind::SingleMoment:
      return "single_moment(xi=" + xi_.to_string() + ")";
    case Kind::Lebesgue:
      return "lebesgue";
  }
  return "unknown";
}

double Weight::operator()(double t) const {
  switch (kind_) {
    case Kind::Jacobi: {
      const double c = std::cos(t);
      return std::pow(1.0 - c, (alpha_ + kHalf).to_double()) * std::pow(1.0 + c, (beta_ + kHalf).to_double());
    }
    case Kind::SingleMoment:
      return (1.0 - xi_.to_double() * std::cos(t)) / (2.0 * std::numbers::pi);
    case Kind::Lebesgue:
      return 1.0;
  }
  return 0.0;
}

bool Weight::is_trig_polynomial() const {
  if (kind_ != Kind::Jacobi) return true;
  return is_nonnegative_integer(alpha_ + kHalf) && is_nonnegative_integer(beta_ + kHalf);
}

int Weight::trig_degree() const {
  switch (kind_) {
    case Kind::Jacobi:
      return static_cast<int>((alpha_ + beta_ + Rational{1}).to_double());
    case Kind::SingleMoment:
      return 1;
    case Kind::Lebesgue:
      return 0;
  }
  return 0;
}

std::complex<double> CircleRule::integrate(
    const std::function<std::complex<double>(std::complex<double>)>& f) const {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t k = 0; k < angle.size(); ++k) sum += weight[k] * f(std::polar(1.0, angle[k]));
  return sum;
}

CircleRule make_circle_rule(const Weight& w, int order) {
  if (order < 2) throw std::invalid_argument("quadrature order must be at least 2");
  return w.is_trig_polynomial() ? trapezoid(w, order) : gauss_jacobi(w, order);
}

AdaptiveCircleQuadrature::AdaptiveCircleQuadrature(Weight w, double rel_tol, int max_order)
    : weight_(std::move(w)), rel_tol_(rel_tol), max_order_(max_order) {}

const CircleRule& AdaptiveCircleQuadrature::rule(int order) {
  auto it = cache_.find(order);
  if (it == cache_.end()) it = cache_.emplace(order, make_circle_rule(weight_, order)).first;
  return it->second;
}

QuadratureResult AdaptiveCircleQuadrature::integrate(
    const std::function<std::complex<double>(std::complex<double>)>& f, int start_order) {
  int order = start_order;
  std::complex<double> prev = rule(order).integrate(f);
  while (2 * order <= max_order_) {
    order *= 2;
    const std::complex<double> next = rule(order).integrate(f);
    if (std::abs(next - prev) <= rel_tol_ * std::max(1.0, std::abs(next))) return {next, order};
    prev = next;
  }
  throw QuadratureUnconverged("quadrature for " + weight_.describe() + " did not settle below order " +
                              std::to_string(max_order_));
}

QuadratureResult AdaptiveCircleQuadrature::pairing(const LaurentPoly& u, const LaurentPoly& v, int start_order) {
  return integrate([&](std::complex<double> z) { return eval_complex(u, z) * eval_complex(v, 1.0 / z); },
                   start_order);
}

std::complex<double> eval_complex(const LaurentPoly& f, std::complex<double> z) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [k, c] : f.terms()) sum += c.to_double() * std::pow(z, k);
  return sum;
}

}  // namespace opuc
