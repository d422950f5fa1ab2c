#include "hahn/discrete_calculus.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hahn/compensated_sum.hpp"
#include "hahn/errors.hpp"

namespace hahn {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_length(const GridFunction& f) {
  if (f.N() < 1) throw TooShort("difference needs at least two grid points");
}

}  // namespace

GridFunction::GridFunction(const HahnParams& p, std::vector<double> v)
    : params(p), values(std::move(v)) {
  if (values.size() != static_cast<std::size_t>(p.num_points()))
    throw LengthMismatch("grid function has " + std::to_string(values.size()) +
                         " values, grid has " + std::to_string(p.num_points()));
}

GridFunction GridFunction::sample(const HahnParams& p, const std::function<double(double)>& f) {
  std::vector<double> v(static_cast<std::size_t>(p.num_points()));
  for (int x = 0; x <= p.N(); ++x) v[static_cast<std::size_t>(x)] = f(x);
  return {p, std::move(v)};
}

GridFunction GridFunction::constant(const HahnParams& p, double c) {
  return {p, std::vector<double>(static_cast<std::size_t>(p.num_points()), c)};
}

GridFunction forward_diff(const GridFunction& f) {
  check_length(f);
  GridFunction out = f;
  for (int x = 0; x < f.N(); ++x) out[x] = f[x + 1] - f[x];
  out[f.N()] = kNaN;
  return out;
}

GridFunction backward_diff(const GridFunction& f) {
  check_length(f);
  GridFunction out = f;
  for (int x = f.N(); x >= 1; --x) out[x] = f[x] - f[x - 1];
  out[0] = kNaN;
  return out;
}

GridFunction l_disk_apply(const GridFunction& u, const WeightTable& weights) {
  if (weights.params != u.params) throw LengthMismatch("weight table and grid function disagree");
  const int N = u.N();
  const EigenData coeffs{u.params, 0, 0.0};

  // flux(i) = -D(i) omega(i) (u(i) - u(i-1)) for i = 1..N; flux(0) = flux(N+1) = 0.
  std::vector<double> flux(static_cast<std::size_t>(N) + 2, 0.0);
  for (int i = 1; i <= N; ++i)
    flux[static_cast<std::size_t>(i)] = -coeffs.D(i) * weights.at(i) * (u[i] - u[i - 1]);

  GridFunction v = u;
  for (int i = 0; i <= N; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    v[i] = (flux[ii + 1] - flux[ii]) / weights.at(i);
  }
  return v;
}

GridFunction l_disk_apply(const GridFunction& u, const HahnParams& params) {
  return l_disk_apply(u, weight_table(params));
}

GridFunction l_disk_power(const GridFunction& u, int k, const WeightTable& weights) {
  if (k < 0) throw DomainError("power of L must be nonnegative");
  GridFunction v = u;
  for (int j = 0; j < k; ++j) v = l_disk_apply(v, weights);
  return v;
}

GridFunction l_disk_power(const GridFunction& u, int k, const HahnParams& params) {
  return l_disk_power(u, k, weight_table(params));
}

double sbp_residual(const GridFunction& f, const GridFunction& g, SbpExtension ext) {
  check_length(f);
  if (f.size() != g.size()) throw LengthMismatch("summation by parts needs equal grids");
  const int N = f.N();
  auto f_at = [&](int i) { return i == N + 1 ? ext.f_next : f[i]; };
  auto g_at = [&](int i) { return i == N + 1 ? ext.g_next : g[i]; };

  CompensatedSum<double> lhs;
  CompensatedSum<double> rhs;
  rhs.add(f_at(N + 1) * g_at(N + 1));
  rhs.add(-f_at(0) * g_at(0));
  for (int i = 0; i <= N; ++i) {
    lhs.add(f_at(i) * (g_at(i + 1) - g_at(i)));
    rhs.add(-g_at(i + 1) * (f_at(i + 1) - f_at(i)));
  }
  return std::abs(lhs.value() - rhs.value());
}

}  // namespace hahn
