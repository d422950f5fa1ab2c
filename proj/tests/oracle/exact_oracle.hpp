#ifndef HAHN_TESTS_EXACT_ORACLE_HPP
#define HAHN_TESTS_EXACT_ORACLE_HPP

// Exact rational reference for the floating-point paths. Test-only.

#include <gmpxx.h>

#include <vector>

namespace hahn::oracle {

using ExactRational = mpq_class;

/// Family parameters with rational alpha, beta > -1 and 1 <= N <= 40.
struct ExactParams {
  ExactRational alpha;
  ExactRational beta;
  int N;

  ExactParams(ExactRational a, ExactRational b, int n);
};

ExactRational pochhammer(const ExactRational& a, int k);

/// binom(alpha+x, x) binom(beta+N-x, N-x).
ExactRational exact_weight(int x, const ExactParams& p);

/// Terminating 3F2(-n, n+alpha+beta+1, -x; alpha+1, -N; 1) at integer x.
ExactRational exact_hahn_eval(int n, int x, const ExactParams& p);

/// sum_x Q_n(x) Q_m(x) omega(x).
ExactRational exact_inner_product(int n, int m, const ExactParams& p);

/// The closed-form norm transcribed factor by factor.
ExactRational exact_norm_sq(int n, const ExactParams& p);

/// Lagrange interpolant through (nodes[i], values[i]) evaluated at t.
ExactRational lagrange_interpolate(const std::vector<ExactRational>& nodes,
                                   const std::vector<ExactRational>& values,
                                   const ExactRational& t);

/// Exact rational value of a double.
ExactRational from_double(double v);

double to_double(const ExactRational& q);

}  // namespace hahn::oracle

#endif  // HAHN_TESTS_EXACT_ORACLE_HPP
