#include "hahn/specfun.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "hahn/compensated_sum.hpp"
#include "hahn/detail/wide.hpp"
#include "hahn/errors.hpp"

namespace hahn {

double pochhammer(double a, int k) { return static_cast<double>(pochhammer_ext(a, k)); }

long double pochhammer_ext(long double a, int k) {
  long double p = 1.0L;
  for (int j = 0; j < k; ++j) p *= a + j;
  return p;
}

namespace {

bool is_nonpositive_integer(double a) { return a <= 0 && a == std::floor(a); }

// binom(top, k) for integer top >= k >= 0, exact while it fits in 128 bits.
using detail::Wide;
using detail::WideUInt;

std::optional<WideUInt> exact_binomial(long long top, long long k) {
  WideUInt r = 1;
  constexpr WideUInt limit = static_cast<WideUInt>(1) << 100;
  for (long long j = 1; j <= k; ++j) {
    // r * (top - k + j) / j is an integer at every step
    r = r * static_cast<WideUInt>(top - k + j) / static_cast<WideUInt>(j);
    if (r > limit) return std::nullopt;
  }
  return r;
}

void check_weight_args(int x, const HahnParams& p) {
  if (x < 0 || x > p.N())
    throw DomainError("grid index " + std::to_string(x) + " outside 0.." + std::to_string(p.N()));
}

}  // namespace

double terminating_3f2(const Terminating3F2Spec& spec) {
  const auto& a = spec.numerator;
  const auto& b = spec.denominator;
  if (!is_nonpositive_integer(a[0]))
    throw NonTerminating("first numerator parameter must be a nonpositive integer");
  const int n = static_cast<int>(-a[0]);

  // (b)_k for k <= n touches the factors b, b+1, ..., b+n-1.
  for (double bj : b) {
    if (is_nonpositive_integer(bj) && -bj <= n - 1)
      throw ZeroDenominator("denominator Pochhammer factor vanishes within the sum");
  }

  CompensatedSum<Wide> sum(1);
  Wide term = 1;
  const Wide z = spec.z;
  for (int k = 0; k < n; ++k) {
    const Wide num = (Wide(a[0]) + k) * (Wide(a[1]) + k) * (Wide(a[2]) + k);
    if (num == 0) break;  // a later numerator parameter terminated the series early
    const Wide den = (Wide(b[0]) + k) * (Wide(b[1]) + k) * (k + 1);
    term *= num / den * z;
    sum.add(term);
  }
  return static_cast<double>(sum.value());
}

double log_gamma_weight(int x, const HahnParams& p) {
  check_weight_args(x, p);
  const long double a = p.alpha();
  const long double b = p.beta();
  const long double N = p.N();
  const long double xl = x;
  const long double log_w = std::lgamma(a + 1 + xl) - std::lgamma(xl + 1) - std::lgamma(a + 1) +
                            std::lgamma(b + 1 + N - xl) - std::lgamma(N + 1 - xl) -
                            std::lgamma(b + 1);
  return static_cast<double>(std::exp(log_w));
}

double log_gamma_ratio_weight(int x, const HahnParams& p) {
  check_weight_args(x, p);
  if (p.integer_parameters()) {
    const auto a = static_cast<long long>(p.alpha());
    const auto b = static_cast<long long>(p.beta());
    const auto left = exact_binomial(a + x, x);
    const auto right = exact_binomial(b + p.N() - x, p.N() - x);
    if (left && right) {
      const WideUInt prod = *left * *right;
      if (*left == 0 || prod / *left == *right) return static_cast<double>(prod);
      return static_cast<double>(*left) * static_cast<double>(*right);
    }
  }
  return log_gamma_weight(x, p);
}

}  // namespace hahn
