#ifndef HAHN_SPECFUN_HPP
#define HAHN_SPECFUN_HPP

#include <array>

#include "hahn/params.hpp"

namespace hahn {

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
double pochhammer(double a, int k);

/// Extended-precision variant used where products feed later cancellation.
long double pochhammer_ext(long double a, int k);

/// A 3F2 series whose first numerator parameter is a nonpositive integer,
/// so the sum has exactly 1 - numerator[0] terms.
struct Terminating3F2Spec {
  std::array<double, 3> numerator;
  std::array<double, 2> denominator;
  double z = 1.0;
};

/// Sums the series term by term. Each term is obtained from its
/// predecessor by the rational ratio of consecutive terms and accumulated
/// with compensated summation in extended precision.
///
/// Throws NonTerminating if numerator[0] is not a nonpositive integer, and
/// ZeroDenominator if a denominator Pochhammer factor reached by the sum
/// vanishes.
double terminating_3f2(const Terminating3F2Spec& spec);

/// Weight binom(alpha+x, x) * binom(beta+N-x, N-x) at grid index x.
/// Integer alpha, beta use exact integer binomials when they fit; otherwise
/// the value is exp of a sum of log-gamma terms.
double log_gamma_ratio_weight(int x, const HahnParams& params);

/// The log-gamma route unconditionally, bypassing the integer fast path.
double log_gamma_weight(int x, const HahnParams& params);

}  // namespace hahn

#endif  // HAHN_SPECFUN_HPP
