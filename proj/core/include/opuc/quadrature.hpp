#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "opuc/laurent.hpp"
#include "opuc/opuc.hpp"

namespace opuc {

/// Symmetric weight on the unit circle, always used normalized to unit mass.
class Weight {
 public:
  enum class Kind { Jacobi, SingleMoment, Lebesgue };

  /// (1 - cos t)^(alpha + 1/2) (1 + cos t)^(beta + 1/2).
  static Weight jacobi(const JacobiParams& p);
  /// (1 - xi cos t) / (2 pi), needs |xi| <= 1.
  static Weight single_moment(const Rational& xi);
  static Weight lebesgue();

  Kind kind() const { return kind_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& xi() const { return xi_; }
  std::string describe() const;

  /// Unnormalized density at angle t.
  double operator()(double t) const;
  /// True when the density is a trigonometric polynomial, so the periodic
  /// trapezoidal rule is exact for Laurent-polynomial integrands.
  bool is_trig_polynomial() const;
  /// Degree of that trigonometric polynomial (meaningful only when it is one).
  int trig_degree() const;

 private:
  Weight(Kind kind, Rational alpha, Rational beta, Rational xi);
  Kind kind_;
  Rational alpha_, beta_, xi_;
};

/// Nodes t_k on the circle with weights summing to one:
/// integral f(e^{it}) w(t) dt / integral w(t) dt ~ sum_k weight_k f(e^{i t_k}).
struct CircleRule {
  std::string method;
  int order = 0;
  std::vector<double> angle;
  std::vector<double> weight;

  std::complex<double> integrate(const std::function<std::complex<double>(std::complex<double>)>& f) const;
};

/// Builds the rule for w with the given order.
///
/// Trig-polynomial weights use the periodic trapezoidal rule on `order`
/// equispaced angles. Every other Jacobi weight has endpoint algebraic
/// behaviour at t = 0 and t = pi, where the trapezoidal rule converges only
/// algebraically. Those use Gauss-Jacobi in s = cos t: folding t and -t
/// together turns the integral into int_{-1}^{1} g(s) (1-s)^alpha (1+s)^beta ds
/// with g polynomial for Laurent-polynomial integrands, so `order` nodes are
/// exact through degree 2*order - 1.
CircleRule make_circle_rule(const Weight& w, int order);

struct QuadratureResult {
  std::complex<double> value;
  int order = 0;
};

/// Order-doubling driver: starts at start_order and doubles until two
/// successive orders agree to rel_tol * max(1, |value|). Rules are cached.
class AdaptiveCircleQuadrature {
 public:
  explicit AdaptiveCircleQuadrature(Weight w, double rel_tol = 1e-12, int max_order = 1 << 14);

  QuadratureResult integrate(const std::function<std::complex<double>(std::complex<double>)>& f, int start_order);

  /// Normalized bilinear form int u(e^{it}) v(e^{-it}) w(t) dt.
  QuadratureResult pairing(const LaurentPoly& u, const LaurentPoly& v, int start_order);

  const Weight& weight() const { return weight_; }

 private:
  const CircleRule& rule(int order);

  Weight weight_;
  double rel_tol_;
  int max_order_;
  std::map<int, CircleRule> cache_;
};

/// Evaluates a Laurent polynomial at a complex point in double precision.
std::complex<double> eval_complex(const LaurentPoly& f, std::complex<double> z);

}  // namespace opuc
