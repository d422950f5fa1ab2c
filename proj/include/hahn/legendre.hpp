#ifndef HAHN_LEGENDRE_HPP
#define HAHN_LEGENDRE_HPP

#include <functional>
#include <vector>

namespace hahn::legendre {

/// P_n(t) by the three-term recurrence; P_n(1) = 1.
double eval(int n, double t);

/// P_n(t) and P_n'(t) together.
struct ValueAndDerivative {
  double value;
  double derivative;
};
ValueAndDerivative eval_with_derivative(int n, double t);

/// Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;

  int order() const { return static_cast<int>(nodes.size()); }
  double integrate(const std::function<double(double)>& f) const;
};

/// Nodes by Newton iteration from Chebyshev-like initial guesses.
/// Supports 1..200 points; throws ConvergenceFailure if Newton stalls.
QuadratureRule gauss_legendre_rule(int points);

/// f_n = (2n+1)/2 * integral of f P_n over [-1, 1] for n = 0..m, using an
/// (m+20)-point rule.
std::vector<double> coefficients(const std::function<double(double)>& f, int m);

}  // namespace hahn::legendre

#endif  // HAHN_LEGENDRE_HPP
