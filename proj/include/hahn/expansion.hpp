#ifndef HAHN_EXPANSION_HPP
#define HAHN_EXPANSION_HPP

#include <span>
#include <vector>

#include "hahn/discrete_calculus.hpp"
#include "hahn/hahn_polynomial.hpp"

namespace hahn {

/// sum_x f(x) g(x) omega(x), compensated.
double inner_product(const GridFunction& f, const GridFunction& g, const WeightTable& w);
double inner_product(std::span<const double> f, std::span<const double> g, const WeightTable& w);

/// Coefficients u_0..u_m of a truncated Hahn series. With normalized set,
/// they refer to the unit-norm polynomials; otherwise to Q_n with Q_n(0) = 1.
struct CoefficientVector {
  HahnParams params;
  int degree = 0;
  std::vector<double> coeffs;
  bool normalized = true;
};

/// u_n = <normalized Q_n, u>_omega for n = 0..m.
CoefficientVector project(const GridFunction& u, int m, const HahnParams& params);
CoefficientVector project(const GridFunction& u, int m, const HahnBasis& basis);

/// P_m u(x) = sum_n u_n Q_n(x) at any real x, evaluated by recurrence.
double eval_expansion(const CoefficientVector& c, double x);
double eval_expansion(const CoefficientVector& c, double x, const HahnBasis& basis);

/// Rescales normalized coefficients to the basis Q_n (Q_n(0) = 1) and back.
CoefficientVector to_unnormalized(const CoefficientVector& c);

/// Affine bijection between grid coordinates [0, N] and [a, b].
class IntervalMap {
 public:
  /// Throws DegenerateInterval unless a < b.
  IntervalMap(double a, double b, int N);

  double a() const { return a_; }
  double b() const { return b_; }
  int N() const { return N_; }

  /// Grid coordinate x -> physical t. Computed as ((N-x) a + x b) / N so that
  /// mirrored grid points on a symmetric interval map to exact negatives.
  double to_physical(double x) const;
  /// Physical t -> grid coordinate x.
  double to_grid(double t) const;

 private:
  double a_;
  double b_;
  int N_;
};

/// Coefficient bound obtained by k summations by parts.
struct DecayReport {
  int n = 0;
  int k = 0;
  double actual = 0.0;       // |u_n|
  double lk_norm = 0.0;      // (sum_i omega(i) (L^k u(i))^2)^{1/2}
  double bound_exact = 0.0;  // lk_norm / lambda_n^k
  double bound_n2k = 0.0;  // lk_norm / n^{2k}, reported only
  // u_n (-lambda_n)^k versus <normalized Q_n, L^k u>_omega
  double identity_lhs = 0.0;
  double identity_rhs = 0.0;
  double identity_rel_error = 0.0;

  bool bound_holds(double slack = 1e-8) const { return actual <= bound_exact * (1.0 + slack); }
};

/// Throws ZeroLambda when n_range contains 0 and k >= 1, DegreeOutOfRange
/// for degrees outside 0..N.
std::vector<DecayReport> decay_report(const GridFunction& u, const HahnParams& params, int k,
                                      std::span<const int> n_range);

}  // namespace hahn

#endif  // HAHN_EXPANSION_HPP
