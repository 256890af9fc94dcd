// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "gelliptic/hyp2f1.hpp"
#include "oracles.hpp"

using namespace gell;

TEST_CASE("f21: basic values") {
  CHECK(f21(HypParams(0.7, 1.3, 2.1), 0.0).value == 1.0);
  // F(1,1;2;x) = -log(1-x)/x
  const HypResult r = f21(HypParams(1, 1, 2), 0.5);
  CHECK(r.value == Catch::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(r.value == Catch::Approx(oracle::hyp2f1_series(1, 1, 2, 0.5)).epsilon(1e-14));
  CHECK(r.method == HypMethod::direct_series);
  CHECK(r.error_estimate <= 1e-12);
  // F(1/2,1/2;2;1) = 4/pi
  const HypResult r1 = f21(HypParams(0.5, 0.5, 2.0), 1.0);
  CHECK(r1.value == Catch::Approx(4.0 / M_PI).epsilon(1e-13));
  CHECK(r1.method == HypMethod::closed_form_at_one);
}

TEST_CASE("f21: domain checks") {
  CHECK_THROWS_AS(f21(HypParams(0.5, 0.5, 1.0), 1.0), DivergesAtOne);
  CHECK_THROWS_AS(f21(HypParams(0.9, 0.9, 1.2), 1.0), DivergesAtOne);
  CHECK_THROWS_AS(f21(HypParams(0.5, 0.5, 1.0), 1.5), DomainError);
  CHECK_THROWS_AS(f21(HypParams(0.5, 0.5, 1.0), -0.1), DomainError);
  CHECK_THROWS_AS(HypParams(0.5, 0.5, 0.0), DomainError);
  CHECK_THROWS_AS(HypParams(0.5, 0.5, -2.0), DomainError);
}

TEST_CASE("f21_at_one matches the gamma closed form") {
  CHECK(f21_at_one(HypParams(0.5, 0.5, 2.0)) ==
        Catch::Approx(4.0 / M_PI).epsilon(1e-14));
  CHECK(f21_at_one(HypParams(0.2, 0.3, 1.0)) ==
        Catch::Approx(gell::gamma(1.0) * gell::gamma(0.5) / (gell::gamma(0.8) * gell::gamma(0.7)))
            .epsilon(1e-13));
  CHECK(f21_at_one(HypParams(1.0, 1.0, 3.0)) == Catch::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(f21_at_one(HypParams(0.5, 0.5, 1.0)), DomainError);
}

TEST_CASE("f21: method selection and cross-path consistency") {
  // direct vs Euler transform agree where both converge comfortably
  for (double x : {0.80, 0.90, 0.95}) {
    for (auto [a, b, c] : {std::array<double, 3>{0.4, 0.7, 0.9},
                           std::array<double, 3>{0.7, 0.7, 0.75},
                           std::array<double, 3>{1.3, 0.4, 1.1}}) {
      const auto direct = detail::series_2f1(a, b, c, x);
      auto euler = detail::series_2f1(c - a, c - b, c, x);
      const double ev = euler.value * std::pow(1.0 - x, c - a - b);
      CHECK(std::abs(direct.value - ev) <= 1e-10 * std::abs(direct.value));
    }
  }
  // near-one connection agrees with the brute-force series at x = 0.97
  for (auto [a, b, c] : {std::array<double, 3>{0.3, 0.5, 1.0},   // d noninteger
                         std::array<double, 3>{0.4, 0.7, 1.1},   // zero-balanced
                         std::array<double, 3>{0.5, 0.5, 2.0},   // d = 1
                         std::array<double, 3>{0.9, 1.2, 1.1}}) {  // d = -1
    const double x = 0.97;
    const double want = oracle::hyp2f1_series(a, b, c, x);
    const auto got = f21(HypParams(a, b, c), x);
    INFO("a=" << a << " b=" << b << " c=" << c
              << " method=" << to_string(got.method));
    CHECK(std::abs(got.value - want) <= 1e-12 * std::abs(want));
  }
  // method bookkeeping
  CHECK(f21(HypParams(0.4, 0.7, 0.9), 0.9).method == HypMethod::euler_transform);
  CHECK(f21(HypParams(0.4, 0.7, 1.1), 0.999).method ==
        HypMethod::zero_balanced_asymptotic);
  CHECK(f21(HypParams(0.3, 0.5, 1.0), 0.999).method ==
        HypMethod::near_one_connection);
}

TEST_CASE("zero-balanced asymptotic agreement near one") {
  const HypParams p(0.5, 0.5, 1.0);
  const double x = 1.0 - 1e-8;
  const double full = f21(p, x).value;
  const double lead = zero_balanced_near_one(p, x);
  CHECK(std::abs(full - lead) <= 5e-7);
  // leading term formula at another zero-balanced triple
  const HypParams p2(1.0 / 3.0, 2.0 / 3.0, 1.0);
  const double lead2 = zero_balanced_near_one(p2, x);
  const double expect2 = (ramanujan_R(1.0 / 3.0, 2.0 / 3.0) - std::log(1.0 - x)) /
                         beta(1.0 / 3.0, 2.0 / 3.0);
  CHECK(lead2 == Catch::Approx(expect2).epsilon(1e-10));
  CHECK_THROWS_AS(zero_balanced_near_one(HypParams(0.5, 0.6, 1.0), x), DomainError);
  CHECK_THROWS_AS(zero_balanced_near_one(p, 0.5), DomainError);
}

TEST_CASE("f21_complement keeps precision for tiny complements") {
  // F(a,b;a+b;1-w) ~ (R - log w)/B: exact complement must survive
  const HypParams p(0.5, 0.5, 1.0);
  const double w = 1e-30;
  const double got = f21_complement(p, w).value;
  const double lead = (ramanujan_R(0.5, 0.5) - std::log(w)) / M_PI;
  CHECK(got == Catch::Approx(lead).epsilon(1e-12));
}

TEST_CASE("contiguous_uv: derivatives") {
  const HypParams p(0.5, 0.5, 1.0);
  const double x = 0.25;
  const auto uv = contiguous_uv(p, x);
  auto fv = [&](double xx) { return f21(p, xx).value; };
  auto fu = [&](double xx) { return f21(HypParams(-0.5, 0.5, 1.0), xx).value; };
  CHECK(uv.dv == Catch::Approx(oracle::deriv5(fv, x, 1e-5)).epsilon(1e-6));
  CHECK(uv.du == Catch::Approx(oracle::deriv5(fu, x, 1e-5)).epsilon(1e-6));
  // a = 1: u = F(0,b;c;x) = 1, du = 0
  const auto uv1 = contiguous_uv(HypParams(1.0, 0.7, 1.4), 0.4);
  CHECK(uv1.u == 1.0);
  CHECK(uv1.du == 0.0);
}

TEST_CASE("identity (3.8): (ab/c) x(1-x) F(a+1,b+1;c+1;x) = (c-a)u + (a-c+bx)v") {
  const double a = 0.4, b = 0.7, c = 1.2, x = 0.37;
  const double lhs = (a * b / c) * x * (1.0 - x) *
                     oracle::hyp2f1_series(a + 1, b + 1, c + 1, x);
  const double u = oracle::hyp2f1_series(a - 1, b, c, x);
  const double v = oracle::hyp2f1_series(a, b, c, x);
  const double rhs = (c - a) * u + (a - c + b * x) * v;
  CHECK(std::abs(lhs - rhs) <= 1e-11);
  // and the library's uv agrees with the oracle route
  const auto uv = contiguous_uv(HypParams(a, b, c), x);
  CHECK(uv.dv == Catch::Approx((lhs) / (x * (1 - x))).epsilon(1e-11));
}

TEST_CASE("derivative identity dv = (ab/c) F(a+1,b+1;c+1;x)") {
  const double a = 0.6, b = 0.9, c = 1.3;
  for (int i = 1; i <= 10; ++i) {
    const double x = i / 11.0;
    const auto uv = contiguous_uv(HypParams(a, b, c), x);
    const double rhs = (a * b / c) * f21(HypParams(a + 1, b + 1, c + 1), x).value;
    CHECK(uv.dv == Catch::Approx(rhs).epsilon(1e-11));
  }
}

TEST_CASE("f21 accuracy contract: random positive parameters, x <= 0.95") {
  std::mt19937 rng(1234567);
  std::uniform_real_distribution<double> pu(0.05, 5.0), cu(0.1, 5.0),
      xu(0.0, 0.95);
  for (int i = 0; i < 25; ++i) {
    const double a = pu(rng), b = pu(rng), c = cu(rng), x = xu(rng);
    const double want = oracle::hyp2f1_series(a, b, c, x);
    const auto got = f21(HypParams(a, b, c), x);
    INFO("a=" << a << " b=" << b << " c=" << c << " x=" << x
              << " method=" << to_string(got.method));
    CHECK(std::abs(got.value - want) <= 1e-12 * std::abs(want));
  }
}

TEST_CASE("f21 nondecreasing in x for positive parameters") {
  const HypParams p(0.8, 1.1, 1.7);
  double prev = 1.0;
  for (double x = 0.05; x < 1.0; x += 0.05) {
    const double v = f21(p, x).value;
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("series cap produces NoConvergence") {
  // zero-balanced at x extremely close to 1 but still in the direct-series
  // window (0.75, 0.95) cannot converge under a tiny cap
  setenv("GELLIPTIC_MAX_TERMS", "50", 1);
  // note: the cap is latched on first use in this process, which already
  // happened above, so exercise the series routine directly instead
  unsetenv("GELLIPTIC_MAX_TERMS");
  CHECK_THROWS_AS(detail::series_2f1(0.5, 0.5, 1.0, 0.9999999999), NoConvergence);
}

TEST_CASE("theorem 3.4 monotone report") {
  std::vector<double> grid;
  for (double x = 0.0; x <= 8.0; x += 0.25) grid.push_back(x);
  // c = a+b case: h(0) = ab/c
  auto rep = check_thm_3_4(0.5, 0.5, 1.0, grid);
  INFO(rep.to_text());
  CHECK(rep.all_passed());
  // a+b < c: f(inf) limit via gammas
  auto rep2 = check_thm_3_4(0.3, 0.4, 1.0, grid);
  INFO(rep2.to_text());
  CHECK(rep2.all_passed());
  // degenerate single-point grid is trivially monotone
  auto rep3 = check_thm_3_4(0.5, 0.5, 1.0, {0.7});
  CHECK(rep3.all_passed());
}

TEST_CASE("theorem 3.5 monotone report") {
  std::vector<double> grid;
  for (double x = 0.0; x <= 50.0; x += 2.0) grid.push_back(x);
  auto rep = check_thm_3_5(0.7, 0.8, 1.0, 1.0, grid);
  INFO(rep.to_text());
  CHECK(rep.all_passed());
  CHECK(check_thm_3_5(0.7, 0.8, 1.0, 1.0, {3.0}).all_passed());
  // violated preconditions are reported, not thrown
  CHECK_FALSE(check_thm_3_5(0.7, 0.8, 2.0, 1.0, grid).all_passed());
}
