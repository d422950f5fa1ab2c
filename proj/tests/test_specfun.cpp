#include "hahn/specfun.hpp"

#include <cmath>

#include "doctest.h"
#include "exact_oracle.hpp"
#include "hahn/errors.hpp"

using namespace hahn;

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.0, 0) == 1.0);
  CHECK(pochhammer(-7.25, 0) == 1.0);
  CHECK(pochhammer(1.0, 4) == 24.0);
  CHECK(pochhammer(-30.0, 3) == -24360.0);

  SUBCASE("factorials are exact through 20!") {
    double fact = 1.0;
    for (int k = 1; k <= 20; ++k) {
      fact *= k;
      CHECK(pochhammer(1.0, k) == fact);
    }
  }
  SUBCASE("step recurrence") {
    for (double a : {-4.5, -3.0, 0.25, 1.0, 7.5}) {
      for (int k = 0; k < 15; ++k)
        CHECK(pochhammer(a, k + 1) == doctest::Approx(pochhammer(a, k) * (a + k)).epsilon(1e-15));
    }
  }
}

TEST_CASE("terminating 3F2") {
  SUBCASE("n = 0 has a single term") {
    CHECK(terminating_3f2({{0.0, 3.5, -2.0}, {1.5, -10.0}, 1.0}) == 1.0);
  }
  SUBCASE("two-term Hahn case") {
    for (double a : {0.0, 0.5, 5.0}) {
      for (double b : {0.0, 0.5}) {
        const int N = 30;
        for (double x : {0.0, 3.0, 17.5, 30.0}) {
          const double expect = 1.0 - (a + b + 2) * x / ((a + 1) * N);
          CHECK(terminating_3f2({{-1.0, a + b + 2, -x}, {a + 1, -double(N)}, 1.0}) ==
                doctest::Approx(expect).epsilon(1e-15));
        }
      }
    }
  }
  SUBCASE("x = 0 gives 1 for every degree") {
    for (int n = 0; n <= 30; ++n)
      CHECK(terminating_3f2({{-double(n), n + 1.0, -0.0}, {1.0, -30.0}, 1.0}) == 1.0);
  }
  SUBCASE("agrees with exact rationals for integer parameters") {
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        const oracle::ExactParams ep(a, b, 12);
        for (int n = 0; n <= 12; ++n) {
          for (int x = 0; x <= 12; ++x) {
            const double exact = oracle::to_double(oracle::exact_hahn_eval(n, x, ep));
            const double got = terminating_3f2(
                {{-double(n), n + a + b + 1.0, -double(x)}, {a + 1.0, -12.0}, 1.0});
            CHECK(std::abs(got - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
          }
        }
      }
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(terminating_3f2({{-1.5, 1.0, 1.0}, {1.0, 1.0}, 1.0}), NonTerminating);
    CHECK_THROWS_AS(terminating_3f2({{2.0, 1.0, 1.0}, {1.0, 1.0}, 1.0}), NonTerminating);
    // (-3)_k vanishes at k = 4 <= n = 5
    CHECK_THROWS_AS(terminating_3f2({{-5.0, 1.0, 1.0}, {1.0, -3.0}, 1.0}), ZeroDenominator);
    CHECK_NOTHROW(terminating_3f2({{-5.0, 1.0, 1.0}, {1.0, -5.0}, 1.0}));
  }
}

TEST_CASE("weight") {
  SUBCASE("unit weights for alpha = beta = 0") {
    const HahnParams p(0, 0, 30);
    for (int x = 0; x <= 30; ++x) CHECK(log_gamma_ratio_weight(x, p) == 1.0);
  }
  SUBCASE("integer parameters") {
    const HahnParams p(5, 0, 30);
    CHECK(log_gamma_ratio_weight(0, p) == 1.0);
    CHECK(log_gamma_ratio_weight(1, p) == 6.0);
    CHECK(log_gamma_ratio_weight(30, p) == 324632.0);  // binom(35, 30)
  }
  SUBCASE("both routes match exact binomials for integer parameters, N <= 40") {
    for (int a = 0; a <= 6; ++a) {
      for (int b = 0; b <= 6; b += 3) {
        for (int N : {1, 7, 25, 40}) {
          const HahnParams p(a, b, N);
          const oracle::ExactParams ep(a, b, N);
          for (int x = 0; x <= N; ++x) {
            const double exact = oracle::to_double(oracle::exact_weight(x, ep));
            CHECK(log_gamma_ratio_weight(x, p) == doctest::Approx(exact).epsilon(1e-15));
            CHECK(std::abs(log_gamma_weight(x, p) - exact) <= 1e-12 * exact);
          }
        }
      }
    }
  }
  SUBCASE("half-integer parameters") {
    const HahnParams p(0.5, 0.5, 12);
    const oracle::ExactParams ep(mpq_class(1, 2), mpq_class(1, 2), 12);
    for (int x = 0; x <= 12; ++x) {
      const double exact = oracle::to_double(oracle::exact_weight(x, ep));
      CHECK(std::abs(log_gamma_ratio_weight(x, p) - exact) <= 1e-12 * exact);
    }
  }
  SUBCASE("domain") {
    const HahnParams p(0.5, 0.5, 4);
    CHECK_THROWS_AS(log_gamma_ratio_weight(-1, p), DomainError);
    CHECK_THROWS_AS(log_gamma_ratio_weight(5, p), DomainError);
    CHECK_THROWS_AS(HahnParams(-1.0, 0.0, 4), DomainError);
    CHECK_THROWS_AS(HahnParams(0.0, -1.5, 4), DomainError);
    CHECK_THROWS_AS(HahnParams(0.0, 0.0, 0), DomainError);
  }
}
