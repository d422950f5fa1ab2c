#include "hahn/hahn_polynomial.hpp"

#include <cmath>
#include <string>

#include "hahn/detail/wide.hpp"
#include "hahn/errors.hpp"
#include "hahn/specfun.hpp"

namespace hahn {

namespace {

using detail::Wide;

void check_degree(int n, const HahnParams& p) {
  if (n < 0 || n > p.N())
    throw DegreeOutOfRange("degree " + std::to_string(n) + " outside 0.." +
                           std::to_string(p.N()));
}

Wide a_coeff(int n, const HahnParams& p) {
  const Wide s = Wide(p.alpha()) + Wide(p.beta());
  const Wide num = (n + s + 1) * (n + Wide(p.alpha()) + 1) * (p.N() - n);
  return num / ((2 * n + s + 1) * (2 * n + s + 2));
}

Wide c_coeff(int n, const HahnParams& p) {
  const Wide s = Wide(p.alpha()) + Wide(p.beta());
  const Wide num = n * (n + s + p.N() + 1) * (n + Wide(p.beta()));
  return num / ((2 * n + s) * (2 * n + s + 1));
}

// Fills out[0..m] with Q_0(x)..Q_m(x).
void recurrence_sweep(int m, Wide x, const HahnParams& p, std::span<Wide> out) {
  out[0] = 1;
  if (m == 0) return;
  const Wide s = Wide(p.alpha()) + Wide(p.beta());
  // Q_1 expanded directly from the two-term hypergeometric sum.
  out[1] = 1 - (s + 2) * x / ((Wide(p.alpha()) + 1) * p.N());
  for (int n = 1; n < m; ++n) {
    const Wide a = a_coeff(n, p);
    const Wide c = c_coeff(n, p);
    if (a == 0)
      throw DegenerateRecurrence("A_" + std::to_string(n) + " vanished before reaching degree " +
                                 std::to_string(m));
    out[n + 1] = ((a + c - x) * out[n] - c * out[n - 1]) / a;
  }
}

}  // namespace

double WeightTable::at(int x) const {
  if (x == params.N() + 1) return 0.0;
  return values.at(static_cast<std::size_t>(x));
}

WeightTable weight_table(const HahnParams& params) {
  WeightTable table{params, {}, 0.0};
  table.values.reserve(static_cast<std::size_t>(params.num_points()));
  long double total = 0;
  for (int x = 0; x <= params.N(); ++x) {
    table.values.push_back(log_gamma_ratio_weight(x, params));
    total += table.values.back();
  }
  table.total = static_cast<double>(total);
  return table;
}

double hahn_eval_series(int n, double x, const HahnParams& params) {
  check_degree(n, params);
  const Terminating3F2Spec spec{
      {-static_cast<double>(n), n + params.alpha() + params.beta() + 1, -x},
      {params.alpha() + 1, -static_cast<double>(params.N())},
      1.0};
  return terminating_3f2(spec);
}

double hahn_eval_recurrence(int n, double x, const HahnParams& params) {
  check_degree(n, params);
  std::vector<Wide> q(static_cast<std::size_t>(n) + 1);
  recurrence_sweep(n, x, params, q);
  return static_cast<double>(q.back());
}

std::vector<double> hahn_eval_upto(int m, double x, const HahnParams& params) {
  check_degree(m, params);
  std::vector<Wide> q(static_cast<std::size_t>(m) + 1);
  recurrence_sweep(m, x, params, q);
  std::vector<double> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = static_cast<double>(q[i]);
  return out;
}

double recurrence_a(int n, const HahnParams& params) {
  check_degree(n, params);
  return static_cast<double>(a_coeff(n, params));
}

double recurrence_c(int n, const HahnParams& params) {
  check_degree(n, params);
  if (n == 0) return 0.0;
  return static_cast<double>(c_coeff(n, params));
}

double norm_sq_closed(int n, const HahnParams& params) {
  check_degree(n, params);
  const long double a = params.alpha();
  const long double b = params.beta();
  const int N = params.N();

  // (n+a+b+1)_{N+1} / (2n+a+b+1); at n = 0 the leading factor cancels the
  // denominator, which also covers a + b = -1.
  long double poch_over_denom;
  if (n == 0)
    poch_over_denom = pochhammer_ext(a + b + 2, N);
  else
    poch_over_denom = pochhammer_ext(n + a + b + 1, N + 1) / (2 * n + a + b + 1);

  // (-1)^n (-N)_n = N! / (N-n)!, so the quotient below is positive.
  long double ratio = poch_over_denom;
  ratio *= pochhammer_ext(b + 1, n) / pochhammer_ext(a + 1, n);
  for (int j = 1; j <= n; ++j) ratio *= static_cast<long double>(j) / (N - n + j);
  for (int j = 1; j <= N; ++j) ratio /= j;
  return static_cast<double>(ratio);
}

double normalized_eval(int n, double x, const HahnParams& params) {
  return hahn_eval_recurrence(n, x, params) / std::sqrt(norm_sq_closed(n, params));
}

double EigenData::B(double x) const { return (x + params.alpha() + 1) * (x - params.N()); }

double EigenData::D(double x) const { return x * (x - params.beta() - params.N() - 1); }

double eigenvalue(int n, const HahnParams& params) {
  check_degree(n, params);
  return n * (n + params.alpha() + params.beta() + 1);
}

EigenData eigen_data(int n, const HahnParams& params) {
  return EigenData{params, n, eigenvalue(n, params)};
}

HahnBasis::HahnBasis(const HahnParams& params)
    : params_(params), weights_(weight_table(params)) {
  const int N = params.N();
  const auto n_pts = static_cast<std::size_t>(N + 1);
  norms_.resize(n_pts);
  for (int n = 0; n <= N; ++n) norms_[static_cast<std::size_t>(n)] = std::sqrt(norm_sq_closed(n, params));

  grid_values_.resize(n_pts * n_pts);
  for (int x = 0; x <= N; ++x) {
    const auto q = hahn_eval_upto(N, x, params);
    for (int n = 0; n <= N; ++n) {
      const auto nn = static_cast<std::size_t>(n);
      grid_values_[nn * n_pts + static_cast<std::size_t>(x)] = q[nn] / norms_[nn];
    }
  }
}

std::span<const double> HahnBasis::on_grid(int n) const {
  check_degree(n, params_);
  const auto n_pts = static_cast<std::size_t>(params_.N() + 1);
  return std::span<const double>(grid_values_).subspan(static_cast<std::size_t>(n) * n_pts, n_pts);
}

std::vector<double> HahnBasis::normalized_upto(int m, double x) const {
  auto q = hahn_eval_upto(m, x, params_);
  for (std::size_t n = 0; n < q.size(); ++n) q[n] /= norms_[n];
  return q;
}

}  // namespace hahn
