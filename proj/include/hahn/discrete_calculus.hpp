#ifndef HAHN_DISCRETE_CALCULUS_HPP
#define HAHN_DISCRETE_CALCULUS_HPP

#include <functional>
#include <vector>

#include "hahn/hahn_polynomial.hpp"
#include "hahn/params.hpp"

namespace hahn {

/// Real samples u(0..N) on the grid of a Hahn family.
///
/// Differences keep full-grid indexing: entries outside an operator's valid
/// range are NaN rather than being dropped, so compositions stay aligned.
struct GridFunction {
  HahnParams params;
  std::vector<double> values;

  GridFunction(const HahnParams& p, std::vector<double> v);

  /// Samples f(x) at x = 0..N.
  static GridFunction sample(const HahnParams& p, const std::function<double(double)>& f);
  static GridFunction constant(const HahnParams& p, double c);

  int N() const { return params.N(); }
  std::size_t size() const { return values.size(); }
  double operator[](int x) const { return values[static_cast<std::size_t>(x)]; }
  double& operator[](int x) { return values[static_cast<std::size_t>(x)]; }
};

/// (Delta f)(x) = f(x+1) - f(x), valid for x = 0..N-1; entry N is NaN.
GridFunction forward_diff(const GridFunction& f);

/// (nabla f)(x) = f(x) - f(x-1), valid for x = 1..N; entry 0 is NaN.
GridFunction backward_diff(const GridFunction& f);

/// L u = (1/omega) Delta[-D omega nabla u] on the whole grid. The boundary
/// terms vanish through D(0) = 0 and omega(N+1) = 0, so no value of u off
/// the grid is read. With this sign, L maps the degree-n normalized Hahn
/// polynomial to -lambda_n times itself.
GridFunction l_disk_apply(const GridFunction& u, const WeightTable& weights);
GridFunction l_disk_apply(const GridFunction& u, const HahnParams& params);

/// k-fold application of l_disk_apply; k = 0 returns u.
GridFunction l_disk_power(const GridFunction& u, int k, const WeightTable& weights);
GridFunction l_disk_power(const GridFunction& u, int k, const HahnParams& params);

/// Values one past the right end of the grid for the boundary term of
/// summation by parts.
struct SbpExtension {
  double f_next = 0.0;  // f(N+1)
  double g_next = 0.0;  // g(N+1)
};

/// |lhs - rhs| of
///   sum_{i=0}^N f(i) Delta g(i) = f g |_0^{N+1} - sum_{i=0}^N g(i+1) Delta f(i).
double sbp_residual(const GridFunction& f, const GridFunction& g, SbpExtension ext);

}  // namespace hahn

#endif  // HAHN_DISCRETE_CALCULUS_HPP
