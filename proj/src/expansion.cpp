#include "hahn/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hahn/compensated_sum.hpp"
#include "hahn/errors.hpp"

namespace hahn {

namespace {

constexpr double kIdentityFloor = 1e-6;

void check_degree(int m, const HahnParams& p) {
  if (m < 0 || m > p.N())
    throw DegreeOutOfRange("degree " + std::to_string(m) + " outside 0.." + std::to_string(p.N()));
}

}  // namespace

double inner_product(std::span<const double> f, std::span<const double> g, const WeightTable& w) {
  if (f.size() != w.size() || g.size() != w.size())
    throw LengthMismatch("inner product operands do not match the weight table");
  CompensatedSum<double> s;
  for (std::size_t x = 0; x < f.size(); ++x) s.add(f[x] * g[x] * w.values[x]);
  return s.value();
}

double inner_product(const GridFunction& f, const GridFunction& g, const WeightTable& w) {
  return inner_product(f.values, g.values, w);
}

CoefficientVector project(const GridFunction& u, int m, const HahnBasis& basis) {
  check_degree(m, basis.params());
  if (u.params != basis.params()) throw LengthMismatch("grid function and basis disagree");
  CoefficientVector c{basis.params(), m, std::vector<double>(static_cast<std::size_t>(m) + 1), true};
  for (int n = 0; n <= m; ++n)
    c.coeffs[static_cast<std::size_t>(n)] = inner_product(basis.on_grid(n), u.values, basis.weights());
  return c;
}

CoefficientVector project(const GridFunction& u, int m, const HahnParams& params) {
  check_degree(m, params);
  return project(u, m, HahnBasis(params));
}

double eval_expansion(const CoefficientVector& c, double x, const HahnBasis& basis) {
  std::vector<double> q = hahn_eval_upto(c.degree, x, c.params);
  CompensatedSum<double> s;
  for (int n = 0; n <= c.degree; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    const double qn = c.normalized ? q[nn] / basis.norm(n) : q[nn];
    s.add(c.coeffs[nn] * qn);
  }
  return s.value();
}

double eval_expansion(const CoefficientVector& c, double x) {
  if (!c.normalized) {
    const std::vector<double> q = hahn_eval_upto(c.degree, x, c.params);
    CompensatedSum<double> s;
    for (std::size_t n = 0; n < q.size(); ++n) s.add(c.coeffs[n] * q[n]);
    return s.value();
  }
  std::vector<double> q = hahn_eval_upto(c.degree, x, c.params);
  CompensatedSum<double> s;
  for (int n = 0; n <= c.degree; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    s.add(c.coeffs[nn] * q[nn] / std::sqrt(norm_sq_closed(n, c.params)));
  }
  return s.value();
}

CoefficientVector to_unnormalized(const CoefficientVector& c) {
  if (!c.normalized) return c;
  CoefficientVector out = c;
  out.normalized = false;
  for (int n = 0; n <= c.degree; ++n)
    out.coeffs[static_cast<std::size_t>(n)] /= std::sqrt(norm_sq_closed(n, c.params));
  return out;
}

IntervalMap::IntervalMap(double a, double b, int N) : a_(a), b_(b), N_(N) {
  if (!(a < b)) throw DegenerateInterval("interval needs a < b");
  if (N < 1) throw DomainError("interval map needs N >= 1");
}

double IntervalMap::to_physical(double x) const { return ((N_ - x) * a_ + x * b_) / N_; }

double IntervalMap::to_grid(double t) const { return (t - a_) / (b_ - a_) * N_; }

std::vector<DecayReport> decay_report(const GridFunction& u, const HahnParams& params, int k,
                                      std::span<const int> n_range) {
  if (k < 0) throw DomainError("smoothness order k must be nonnegative");
  for (int n : n_range) {
    check_degree(n, params);
    if (n == 0 && k >= 1) throw ZeroLambda("lambda_0 = 0: degree 0 has no bound for k >= 1");
  }
  const HahnBasis basis(params);
  const GridFunction lku = l_disk_power(u, k, basis.weights());
  const double lk_norm = std::sqrt(std::max(0.0, inner_product(lku, lku, basis.weights())));

  std::vector<DecayReport> out;
  out.reserve(n_range.size());
  for (int n : n_range) {
    DecayReport r;
    r.n = n;
    r.k = k;
    const double coeff = inner_product(basis.on_grid(n), u.values, basis.weights());
    const double lambda = eigenvalue(n, params);
    r.actual = std::abs(coeff);
    r.lk_norm = lk_norm;
    r.bound_exact = lk_norm / std::pow(lambda, k);
    r.bound_n2k = n == 0 ? lk_norm : lk_norm / std::pow(static_cast<double>(n), 2 * k);
    r.identity_lhs = coeff * std::pow(-lambda, k);
    r.identity_rhs = inner_product(basis.on_grid(n), lku.values, basis.weights());
    // Coefficients far below the Cauchy-Schwarz scale are rounding noise after
    // k applications of L; they are measured against that scale instead.
    const double denom = std::max({std::abs(r.identity_lhs), std::abs(r.identity_rhs),
                                   kIdentityFloor * lk_norm});
    const double diff = std::abs(r.identity_lhs - r.identity_rhs);
    r.identity_rel_error = denom > 0 ? diff / denom : diff;
    out.push_back(r);
  }
  return out;
}

}  // namespace hahn
