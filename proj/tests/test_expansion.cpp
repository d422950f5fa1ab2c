#include "hahn/expansion.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "hahn/errors.hpp"

using namespace hahn;

namespace {

const std::vector<std::pair<double, double>> kPaperSets{{0.0, 0.0}, {0.5, 0.5}, {5.0, 0.0}};

double sin_pi(double t) { return std::sin(std::numbers::pi * t); }
double runge(double t) { return 1.0 / (1.0 + 25.0 * t * t); }

GridFunction on_interval(const HahnParams& p, double (*f)(double)) {
  const IntervalMap map(-1.0, 1.0, p.N());
  return GridFunction::sample(p, [&](double x) { return f(map.to_physical(x)); });
}

double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST_CASE("inner product") {
  const HahnParams p(0, 0, 30);
  const auto w = weight_table(p);
  const auto ones = GridFunction::constant(p, 1.0);
  CHECK(inner_product(ones, ones, w) == 31.0);

  const HahnBasis basis(HahnParams(0.5, 0.5, 30));
  for (int n : {0, 3, 17, 30}) {
    CHECK(inner_product(basis.on_grid(n), basis.on_grid(n), basis.weights()) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(inner_product(basis.on_grid(n), basis.on_grid((n + 5) % 31), basis.weights())) <=
          1e-7);
  }
  CHECK_THROWS_AS(inner_product(ones, GridFunction::constant(HahnParams(0, 0, 29), 1.0), w),
                  LengthMismatch);
}

TEST_CASE("projection") {
  const HahnBasis basis(HahnParams(5, 0, 30));
  const auto q3 = basis.on_grid(3);
  const GridFunction u(basis.params(), {q3.begin(), q3.end()});
  const auto c = project(u, 12, basis);
  REQUIRE(c.coeffs.size() == 13);
  CHECK(c.normalized);
  for (int n = 0; n <= 12; ++n) CHECK(std::abs(c.coeffs[n] - (n == 3 ? 1.0 : 0.0)) <= 1e-7);
  CHECK_THROWS_AS(project(u, 31, basis), DegreeOutOfRange);

  SUBCASE("parity for symmetric parameters") {
    const HahnParams p(0, 0, 30);
    const auto s = project(on_interval(p, sin_pi), 10, p);
    const double smax = max_abs(s.coeffs);
    for (int n = 0; n <= 10; n += 2) CHECK(std::abs(s.coeffs[n]) <= 1e-12 * smax);

    const auto g = project(on_interval(p, runge), 30, p);
    const double gmax = max_abs(g.coeffs);
    for (int n = 1; n <= 30; n += 2) CHECK(std::abs(g.coeffs[n]) <= 1e-10 * gmax);
  }
}

TEST_CASE("evaluating an expansion") {
  for (auto [a, b] : kPaperSets) {
    const HahnBasis basis(HahnParams(a, b, 30));
    for (auto f : {sin_pi, runge}) {
      const auto u = on_interval(basis.params(), f);
      const auto c = project(u, 30, basis);
      double umax = 0;
      for (double v : u.values) umax = std::max(umax, std::abs(v));
      for (int x = 0; x <= 30; ++x) CHECK(std::abs(eval_expansion(c, x, basis) - u[x]) <= 1e-8 * umax);
    }
  }
  SUBCASE("single mode") {
    const HahnParams p(0.5, 0.5, 10);
    CoefficientVector c{p, 4, {2.5, 0, 0, 0, 0}, true};
    for (double x : {-1.0, 0.0, 3.3, 11.0})
      CHECK(eval_expansion(c, x) == doctest::Approx(2.5 / std::sqrt(norm_sq_closed(0, p))));
  }
  SUBCASE("convenience overload matches the basis overload") {
    const HahnBasis basis(HahnParams(5, 0, 20));
    const auto c = project(on_interval(basis.params(), runge), 12, basis);
    for (double x : {0.5, 7.25, 19.75})
      CHECK(eval_expansion(c, x) == doctest::Approx(eval_expansion(c, x, basis)).epsilon(1e-14));
    const auto raw = to_unnormalized(c);
    CHECK_FALSE(raw.normalized);
    for (double x : {0.5, 7.25, 19.75})
      CHECK(eval_expansion(raw, x) == doctest::Approx(eval_expansion(c, x)).epsilon(1e-12));
  }
}

TEST_CASE("Parseval, idempotence and polynomial exactness") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (auto [a, b] : kPaperSets) {
    const HahnBasis basis(HahnParams(a, b, 30));
    for (int trial = 0; trial < 10; ++trial) {
      const auto u = GridFunction::sample(basis.params(), [&](double) { return dist(rng); });
      const auto c = project(u, 30, basis);
      double sum_sq = 0;
      for (double v : c.coeffs) sum_sq += v * v;
      const double norm_sq = inner_product(u, u, basis.weights());
      CHECK(std::abs(sum_sq - norm_sq) <= 1e-8 * norm_sq);
    }
    // project(P_m u) returns the coefficients of P_m u
    for (int m : {0, 5, 17, 30}) {
      CoefficientVector c{basis.params(), m, std::vector<double>(m + 1), true};
      for (double& v : c.coeffs) v = dist(rng);
      const auto samples =
          GridFunction::sample(basis.params(), [&](double x) { return eval_expansion(c, x, basis); });
      const auto back = project(samples, m, basis);
      for (int n = 0; n <= m; ++n) CHECK(std::abs(back.coeffs[n] - c.coeffs[n]) <= 1e-8);
    }
    // degree-4 polynomial reproduced everywhere on [0, N]
    auto poly = [](double x) { return 1.0 - 0.3 * x + 0.02 * x * x - 1e-3 * x * x * x + 2e-5 * x * x * x * x; };
    const auto c = project(GridFunction::sample(basis.params(), poly), 4, basis);
    for (double x = 0; x <= 30; x += 0.37) CHECK(std::abs(eval_expansion(c, x, basis) - poly(x)) <= 1e-8 * 10);
  }
}

TEST_CASE("interval map") {
  const IntervalMap m(-1.0, 1.0, 30);
  CHECK(m.to_physical(0) == -1.0);
  CHECK(m.to_physical(30) == 1.0);
  CHECK(m.to_physical(15) == 0.0);
  for (int i = 0; i <= 30; ++i) CHECK(m.to_physical(30 - i) == -m.to_physical(i));
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double t = dist(rng);
    CHECK(std::abs(m.to_physical(m.to_grid(t)) - t) <= 4e-16 * std::max(1.0, std::abs(t)));
  }
  const IntervalMap shifted(2.0, 5.0, 6);
  CHECK(shifted.to_physical(2) == 3.0);
  CHECK(shifted.to_grid(3.0) == 2.0);
  CHECK_THROWS_AS(IntervalMap(1.0, 1.0, 4), DegenerateInterval);
  CHECK_THROWS_AS(IntervalMap(2.0, -1.0, 4), DegenerateInterval);
}

TEST_CASE("decay report") {
  const HahnParams p(0, 0, 30);
  const auto u = on_interval(p, sin_pi);
  const std::vector<int> degrees{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};

  SUBCASE("k = 0 is the Bessel bound") {
    const std::vector<int> with_zero{0, 1, 2, 3};
    const auto r = decay_report(u, p, 0, with_zero);
    const double unorm = std::sqrt(inner_product(u, u, weight_table(p)));
    for (const auto& d : r) {
      CHECK(d.bound_exact == doctest::Approx(unorm).epsilon(1e-14));
      CHECK(d.bound_holds());
    }
  }
  SUBCASE("bounds hold for k = 1..3") {
    for (int k = 1; k <= 3; ++k) {
      for (const auto& d : decay_report(u, p, k, degrees)) {
        CAPTURE(k);
        CAPTURE(d.n);
        CHECK(d.bound_holds());
        CHECK(d.identity_rel_error <= 1e-6);
        CHECK(d.bound_n2k == doctest::Approx(d.lk_norm / std::pow(d.n, 2 * k)));
      }
    }
  }
  SUBCASE("a single eigenmode saturates the bound") {
    const HahnBasis basis(HahnParams(0.5, 0.5, 30));
    const auto q5 = basis.on_grid(5);
    const GridFunction mode(basis.params(), {q5.begin(), q5.end()});
    const std::vector<int> n5{5};
    for (int k = 0; k <= 3; ++k) {
      const auto r = decay_report(mode, basis.params(), k, n5).front();
      CHECK(r.actual == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(r.bound_exact == doctest::Approx(r.actual).epsilon(1e-8));
    }
  }
  SUBCASE("degree zero needs k = 0") {
    const std::vector<int> bad{0, 1};
    CHECK_THROWS_AS(decay_report(u, p, 1, bad), ZeroLambda);
    const std::vector<int> high{31};
    CHECK_THROWS_AS(decay_report(u, p, 1, high), DegreeOutOfRange);
  }
}
