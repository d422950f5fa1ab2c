#ifndef HAHN_HAHN_POLYNOMIAL_HPP
#define HAHN_HAHN_POLYNOMIAL_HPP

#include <span>
#include <vector>

#include "hahn/params.hpp"

namespace hahn {

/// Weight omega(0..N) of the discrete inner product. Consulting the table
/// one past the right end yields 0.
struct WeightTable {
  HahnParams params;
  std::vector<double> values;
  double total = 0.0;

  /// omega(x) for 0 <= x <= N, and 0 at x = N+1.
  double at(int x) const;
  std::size_t size() const { return values.size(); }
};

WeightTable weight_table(const HahnParams& params);

/// Q_n(x; alpha, beta, N) as the terminating 3F2 sum. Verification path.
double hahn_eval_series(int n, double x, const HahnParams& params);

/// Q_n(x; alpha, beta, N) by upward three-term recurrence. Default path.
double hahn_eval_recurrence(int n, double x, const HahnParams& params);

/// Q_0(x), ..., Q_m(x) from a single recurrence sweep.
std::vector<double> hahn_eval_upto(int m, double x, const HahnParams& params);

/// Recurrence coefficients of -x Q_n = A_n Q_{n+1} - (A_n + C_n) Q_n + C_n Q_{n-1}.
double recurrence_a(int n, const HahnParams& params);
double recurrence_c(int n, const HahnParams& params);

/// Closed-form squared norm <Q_n, Q_n>_omega.
double norm_sq_closed(int n, const HahnParams& params);

/// Q_n(x) / ||Q_n||_omega.
double normalized_eval(int n, double x, const HahnParams& params);

/// Data of the difference equation
///   lambda_n Q_n(x) = B(x) Q_n(x+1) - [B(x) + D(x)] Q_n(x) + D(x) Q_n(x-1).
struct EigenData {
  HahnParams params;
  int degree;
  double lambda;

  double B(double x) const;
  double D(double x) const;
};

EigenData eigen_data(int n, const HahnParams& params);

/// lambda_n = n (n + alpha + beta + 1).
double eigenvalue(int n, const HahnParams& params);

/// Weights, norms and the grid values of every normalized polynomial of a
/// family, precomputed once. Immutable after construction.
class HahnBasis {
 public:
  explicit HahnBasis(const HahnParams& params);

  const HahnParams& params() const { return params_; }
  const WeightTable& weights() const { return weights_; }
  int N() const { return params_.N(); }

  double norm(int n) const { return norms_.at(n); }

  /// Values of the normalized polynomial of degree n on the grid 0..N.
  std::span<const double> on_grid(int n) const;

  /// Normalized values of degrees 0..m at an arbitrary real x.
  std::vector<double> normalized_upto(int m, double x) const;

 private:
  HahnParams params_;
  WeightTable weights_;
  std::vector<double> norms_;
  std::vector<double> grid_values_;  // row n holds degree n at x = 0..N
};

}  // namespace hahn

#endif  // HAHN_HAHN_POLYNOMIAL_HPP
