#include "hahn/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hahn/compensated_sum.hpp"
#include "hahn/errors.hpp"

namespace hahn::legendre {

double eval(int n, double t) {
  if (n < 0) throw DomainError("Legendre degree must be nonnegative");
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = t;
  for (int j = 1; j < n; ++j) {
    const double p2 = ((2 * j + 1) * t * p1 - j * p0) / (j + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

ValueAndDerivative eval_with_derivative(int n, double t) {
  const double pn = eval(n, t);
  if (n == 0) return {pn, 0.0};
  const double pm = eval(n - 1, t);
  // (1 - t^2) P_n' = n (P_{n-1} - t P_n); not usable at t = +-1.
  return {pn, n * (pm - t * pn) / (1.0 - t * t)};
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  CompensatedSum<double> s;
  for (std::size_t i = 0; i < nodes.size(); ++i) s.add(weights[i] * f(nodes[i]));
  return s.value();
}

QuadratureRule gauss_legendre_rule(int points) {
  if (points < 1 || points > 200)
    throw DomainError("Gauss-Legendre rule supports 1..200 points, got " + std::to_string(points));
  constexpr int kMaxIter = 100;
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(points));
  rule.weights.resize(static_cast<std::size_t>(points));
  const int half = (points + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // i-th largest root
    double t = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double dt = 1.0;
    for (int iter = 0; iter < kMaxIter && std::abs(dt) > 1e-16; ++iter) {
      const ValueAndDerivative pd = eval_with_derivative(points, t);
      dt = pd.value / pd.derivative;
      t -= dt;
    }
    // the last step may oscillate in the final bit
    if (std::abs(dt) > 1e-14)
      throw ConvergenceFailure("Newton iteration for a Gauss-Legendre node did not converge");
    const ValueAndDerivative pd = eval_with_derivative(points, t);
    const double w = 2.0 / ((1.0 - t * t) * pd.derivative * pd.derivative);
    const auto hi = static_cast<std::size_t>(points - 1 - i);
    const auto lo = static_cast<std::size_t>(i);
    rule.nodes[hi] = t;
    rule.nodes[lo] = -t;
    rule.weights[hi] = w;
    rule.weights[lo] = w;
  }
  if (points % 2 == 1) rule.nodes[static_cast<std::size_t>(points / 2)] = 0.0;
  return rule;
}

std::vector<double> coefficients(const std::function<double(double)>& f, int m) {
  if (m < 0) throw DomainError("Legendre truncation degree must be nonnegative");
  const QuadratureRule rule = gauss_legendre_rule(m + 20);
  std::vector<double> fv(rule.nodes.size());
  for (std::size_t i = 0; i < fv.size(); ++i) fv[i] = f(rule.nodes[i]);
  std::vector<double> out(static_cast<std::size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) {
    CompensatedSum<double> s;
    for (std::size_t i = 0; i < fv.size(); ++i) s.add(rule.weights[i] * fv[i] * eval(n, rule.nodes[i]));
    out[static_cast<std::size_t>(n)] = (2 * n + 1) / 2.0 * s.value();
  }
  return out;
}

}  // namespace hahn::legendre
