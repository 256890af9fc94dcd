// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "gelliptic/specfun.hpp"
#include "oracles.hpp"

using namespace gell;

TEST_CASE("gamma: reference values") {
  CHECK(gell::gamma(0.5) == Catch::Approx(1.7724538509055160).epsilon(1e-15));  // sqrt(pi)
  CHECK(gell::gamma(5.0) == Catch::Approx(24.0).epsilon(1e-15));
  // reflection: gell::gamma(0.3) gell::gamma(0.7) = pi / sin(0.3 pi)
  CHECK(gell::gamma(0.3) * gell::gamma(0.7) ==
        Catch::Approx(M_PI / std::sin(0.3 * M_PI)).epsilon(1e-13));
}

TEST_CASE("gamma: errors") {
  CHECK_THROWS_AS(gell::gamma(0.0), PoleError);
  CHECK_THROWS_AS(gell::gamma(-3.0), PoleError);
  CHECK_THROWS_AS(gell::gamma(-2.0 + 5e-13), PoleError);
  CHECK_THROWS_AS(gell::gamma(200.0), OverflowError);
  CHECK_NOTHROW(gell::gamma(-2.5));
}

TEST_CASE("gamma: recurrence and reflection on grids") {
  for (double x = 0.1; x <= 10.0; x += 0.1) {
    const double lhs = gell::gamma(x + 1.0);
    CHECK(std::abs(lhs - x * gell::gamma(x)) <= 1e-13 * std::abs(lhs));
  }
  for (double x = 0.05; x < 1.0; x += 0.05) {
    const double prod = gell::gamma(x) * gell::gamma(1.0 - x) * std::sin(M_PI * x) / M_PI;
    CHECK(std::abs(prod - 1.0) <= 1e-12);
  }
}

TEST_CASE("digamma: values and recurrence") {
  CHECK(digamma(1.0) == Catch::Approx(-0.5772156649015329).margin(1e-14));
  CHECK(digamma(0.5) ==
        Catch::Approx(-kEulerGamma - 2.0 * std::log(2.0)).margin(1e-14));
  CHECK(digamma(2.0) == Catch::Approx(1.0 - kEulerGamma).margin(1e-14));
  for (double x = 0.2; x <= 20.0; x += 0.4) {
    CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) <= 1e-13);
  }
}

TEST_CASE("digamma and trigamma vs direct series of the definitions") {
  for (double x : {0.3, 0.5, 1.0, 1.7, 3.2, 7.5, 12.0}) {
    CHECK(digamma(x) == Catch::Approx(oracle::digamma_series(x)).margin(5e-13));
    CHECK(trigamma(x) == Catch::Approx(oracle::trigamma_series(x)).margin(5e-13));
  }
}

TEST_CASE("trigamma: values and monotonicity") {
  CHECK(trigamma(1.0) == Catch::Approx(M_PI * M_PI / 6.0).epsilon(1e-13));
  CHECK(trigamma(2.0) == Catch::Approx(M_PI * M_PI / 6.0 - 1.0).epsilon(1e-13));
  CHECK(trigamma(0.5) == Catch::Approx(M_PI * M_PI / 2.0).epsilon(1e-13));
  double prev_psi = digamma(0.05), prev_tri = trigamma(0.05);
  for (double x = 0.25; x <= 20.0; x += 0.2) {
    const double psi = digamma(x), tri = trigamma(x);
    CHECK(psi > prev_psi);   // Psi strictly increasing
    CHECK(tri < prev_tri);   // Psi' strictly decreasing
    CHECK(tri > 0.0);
    prev_psi = psi;
    prev_tri = tri;
  }
}

TEST_CASE("beta: values, symmetry, domain") {
  CHECK(beta(0.5, 0.5) == Catch::Approx(M_PI).epsilon(1e-14));
  CHECK(beta(1.0, 1.0) == Catch::Approx(1.0).epsilon(1e-14));
  CHECK(beta(2.0, 3.0) == Catch::Approx(1.0 / 12.0).epsilon(1e-13));
  CHECK_THROWS_AS(beta(-1.0, 2.0), DomainError);
  CHECK_THROWS_AS(beta(1.0, 0.0), DomainError);
  for (double x : {0.3, 1.7, 4.2}) {
    for (double y : {0.9, 2.8}) {
      CHECK(beta(x, y) == beta(y, x));  // identical log-sum, bit-exact
    }
  }
}

TEST_CASE("pochhammer: integer and extended") {
  CHECK(pochhammer(7.3, 0) == 1.0);
  CHECK(pochhammer(3.0, 4) == 360.0);
  CHECK(pochhammer(0.5, 2) == 0.75);
  CHECK(pochhammer_ext(3.0, 4.0) == Catch::Approx(360.0).epsilon(1e-12));
  CHECK(pochhammer_ext(2.7, 0.0) == Catch::Approx(1.0).epsilon(1e-15));
  CHECK(pochhammer_ext(0.5, 0.5) ==
        Catch::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-13));
  CHECK_THROWS_AS(pochhammer_ext(-1.0, 0.5), PoleError);
  CHECK_THROWS_AS(pochhammer_ext(0.5, -2.5), PoleError);  // a+t at a pole
  for (unsigned n : {1u, 3u, 6u}) {
    for (double a : {0.4, 1.9, -1.3}) {
      CHECK(pochhammer_ext(a, n) ==
            Catch::Approx(pochhammer(a, n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("ramanujan R") {
  CHECK(ramanujan_R(0.5, 0.5) == Catch::Approx(std::log(16.0)).epsilon(1e-14));
  CHECK(ramanujan_R(1.0, 1.0) == Catch::Approx(0.0).margin(5e-15));
  const double expect =
      -oracle::digamma_series(1.0 / 3.0) - oracle::digamma_series(2.0 / 3.0) -
      2.0 * kEulerGamma;
  CHECK(ramanujan_R(1.0 / 3.0, 2.0 / 3.0) == Catch::Approx(expect).margin(5e-13));
  CHECK_THROWS_AS(ramanujan_R(-0.5, 1.0), DomainError);
}
