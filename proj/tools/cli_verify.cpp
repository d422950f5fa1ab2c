#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cli_app.hpp"
#include "cli_support.hpp"

namespace hahn::cli {

namespace {

constexpr unsigned kSeed = 20240611u;
constexpr int kMaxCheckedDegree = 20;

struct Check {
  std::string name;
  double value;
  double tolerance;
  bool pass() const { return std::isfinite(value) && value <= tolerance; }
};

double max_abs(std::span<const double> v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

GridFunction random_grid(const HahnParams& p, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(p.num_points()));
  for (auto& x : v) x = dist(rng);
  return {p, std::move(v)};
}

std::vector<Check> checks_for(const HahnBasis& basis, const IntervalMap& map) {
  const HahnParams& p = basis.params();
  const WeightTable& w = basis.weights();
  const int N = p.N();
  const int top = std::min(N, kMaxCheckedDegree);
  std::vector<Check> out;

  double ortho = 0;
  for (int n = 0; n <= N; ++n)
    for (int m = n; m <= N; ++m)
      ortho = std::max(ortho, std::abs(inner_product(basis.on_grid(n), basis.on_grid(m), w) - (n == m ? 1.0 : 0.0)));
  out.push_back({"orthonormality", ortho, 1e-9});

  double paths = 0;
  for (int n = 0; n <= top; ++n)
    for (int x = 0; x <= N; ++x) {
      const double r = hahn_eval_recurrence(n, x, p);
      paths = std::max(paths, std::abs(hahn_eval_series(n, x, p) - r) / std::max(1.0, std::abs(r)));
    }
  out.push_back({"series_vs_recurrence", paths, 1e-9});

  double rec = 0;
  for (int x = 0; x <= N; ++x) {
    const auto q = hahn_eval_upto(N, x, p);
    for (int n = 1; n < N; ++n) {
      const double a = recurrence_a(n, p);
      const double c = recurrence_c(n, p);
      const auto i = static_cast<std::size_t>(n);
      const double scale = std::max({std::abs(a * q[i + 1]), std::abs(c * q[i - 1]), std::abs((a + c + x) * q[i]), 1.0});
      rec = std::max(rec, std::abs((a + c - x) * q[i] - a * q[i + 1] - c * q[i - 1]) / scale);
    }
  }
  out.push_back({"recurrence_residual", rec, 1e-12});

  double eig = 0;
  for (int n = 1; n <= top; ++n) {
    const auto q = basis.on_grid(n);
    const GridFunction qn(p, {q.begin(), q.end()});
    const GridFunction lq = l_disk_apply(qn, w);
    const double lambda = eigenvalue(n, p);
    double r = 0;
    for (int x = 0; x <= N; ++x) r = std::max(r, std::abs(lq[x] + lambda * qn[x]));
    eig = std::max(eig, r / (lambda * max_abs(q)));
  }
  out.push_back({"eigen_residual", eig, 1e-9});

  std::mt19937 rng(kSeed);
  const GridFunction f = random_grid(p, rng);
  const GridFunction g = random_grid(p, rng);
  const GridFunction lf = l_disk_apply(f, w);
  const GridFunction lg = l_disk_apply(g, w);
  const double sa_scale = std::sqrt(inner_product(lf, lf, w) * inner_product(g, g, w)) +
                          std::sqrt(inner_product(f, f, w) * inner_product(lg, lg, w));
  out.push_back({"self_adjointness", std::abs(inner_product(lf, g, w) - inner_product(f, lg, w)) / sa_scale, 1e-12});

  const GridFunction u = GridFunction::sample(p, [&](double x) { return std::sin(std::numbers::pi * map.to_physical(x)); });
  const auto full = project(u, N, basis);
  double sq = 0;
  for (double c : full.coeffs) sq += c * c;
  const double unorm = inner_product(u, u, w);
  out.push_back({"parseval", std::abs(sq - unorm) / unorm, 1e-10});

  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const SbpExtension ext{dist(rng), dist(rng)};
  out.push_back({"summation_by_parts", hahn::sbp_residual(f, g, ext) / (N + 1), 1e-13});

  std::vector<int> degrees;
  for (int n = 1; n <= std::min(N, 10); ++n) degrees.push_back(n);
  double violations = 0;
  for (int k = 1; k <= 3; ++k)
    for (const auto& r : decay_report(u, p, k, degrees))
      if (!r.bound_holds()) violations += 1;
  out.push_back({"decay_bound_violations", violations, 0.0});

  double norms = 0;
  for (int n = 0; n <= top; ++n) {
    double direct = 0;
    for (int x = 0; x <= N; ++x) {
      const double q = hahn_eval_recurrence(n, x, p);
      direct += w.values[static_cast<std::size_t>(x)] * q * q;
    }
    const double closed = norm_sq_closed(n, p);
    norms = std::max(norms, std::abs(direct - closed) / closed);
  }
  out.push_back({"norm_closed_form", norms, 1e-9});
  return out;
}

}  // namespace

CommandResult cmd_verify(const RunConfig& config) {
  CsvWriter csv;
  write_metadata(csv, config);
  csv.comment("seed: " + std::to_string(kSeed));
  csv.header({"params", "check", "value", "tolerance", "status"});
  bool all = true;
  for (const auto& s : config.param_sets) {
    const HahnBasis basis(HahnParams(s.alpha, s.beta, config.N));
    const IntervalMap map(config.a, config.b, config.N);
    for (const auto& c : checks_for(basis, map)) {
      all = all && c.pass();
      csv.row({label(s), c.name, fmt(c.value), fmt(c.tolerance), c.pass() ? "PASS" : "FAIL"});
    }
  }
  csv.comment(std::string("overall: ") + (all ? "PASS" : "FAIL"));
  return {csv.str(), all ? kSuccess : kInvariantViolation};
}

}  // namespace hahn::cli
