// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "gelliptic/seriesmono.hpp"

using namespace gell;

namespace {

// random pair with increasing coefficient ratio and positive b
std::pair<CoeffSeq, CoeffSeq> random_increasing_pair(std::mt19937& rng,
                                                     std::size_t deg) {
  std::uniform_real_distribution<double> bu(0.1, 2.0), ru(0.05, 0.5);
  std::vector<double> b(deg + 1), a(deg + 1);
  double ratio = ru(rng);
  for (std::size_t i = 0; i <= deg; ++i) {
    b[i] = bu(rng);
    a[i] = ratio * b[i];
    ratio += ru(rng);  // strictly increasing ratios
  }
  return {CoeffSeq(a), CoeffSeq(b, true)};
}

std::vector<double> unit_grid(std::size_t n, double hi) {
  std::vector<double> g;
  for (std::size_t i = 1; i <= n; ++i) g.push_back(hi * i / (n + 1.0));
  return g;
}

}  // namespace

TEST_CASE("t_sum: hand values and antisymmetry") {
  CoeffSeq a({1.0, 2.0}), b({1.0, 1.0}, true);
  CHECK(t_sum(a, b, 1) == 1.0);  // T_1 = a1 b0 - a0 b1
  CoeffSeq c({0.3, 0.7, 1.9});
  for (std::size_t n : {1u, 2u}) CHECK(t_sum(c, c, n) == 0.0);
  CHECK_THROWS_AS(t_sum(a, b, 5), LengthError);
}

TEST_CASE("t_sum positive for increasing-ratio pairs") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 20; ++trial) {
    auto [a, b] = random_increasing_pair(rng, 7);
    for (std::size_t n = 1; n <= 7; ++n) {
      INFO("trial " << trial << " n " << n);
      CHECK(t_sum(a, b, n) > 0.0);
    }
  }
}

TEST_CASE("quotient certificate: constant and simple cases") {
  // constant ratio: all T_n = 0
  CoeffSeq b({1.0, 0.5, 0.25}, true);
  CoeffSeq a({3.0, 1.5, 0.75});
  auto rep = quotient_monotone_certificate(a, b, 2, unit_grid(10, 0.9));
  INFO(rep.to_text());
  CHECK(rep.all_passed());

  // a_n = (n+1) b_n with b_n = 1/n!: increasing quotient on (0,2)
  std::vector<double> bn, an;
  double fact = 1.0;
  for (int n = 0; n <= 8; ++n) {
    if (n > 0) fact *= n;
    bn.push_back(1.0 / fact);
    an.push_back((n + 1.0) / fact);
  }
  auto rep2 = quotient_monotone_certificate(CoeffSeq(an), CoeffSeq(bn, true), 8,
                                            unit_grid(40, 1.9));
  INFO(rep2.to_text());
  CHECK(rep2.all_passed());
}

TEST_CASE("quotient certificate: the f1 coefficient pattern") {
  // ratio (b/c)(b+n)/(c+n) with b < c: increasing in n (the f1 proof)
  const double b = 0.5, c = 0.8;
  std::vector<double> den(9, 0.0), num(9, 0.0);
  double coeff = 1.0;
  for (int n = 0; n <= 8; ++n) {
    den[n] = coeff;  // stand-in positive denominators
    num[n] = coeff * (b / c) * (b + n) / (c + n);
    coeff *= 0.6;
  }
  auto rep = quotient_monotone_certificate(CoeffSeq(num), CoeffSeq(den, true), 8,
                                           unit_grid(30, 0.95));
  INFO(rep.to_text());
  CHECK(rep.all_passed());
}

TEST_CASE("poly certificate: degree 1 and f = g") {
  CoeffSeq f({1.0, 3.0}), g({2.0, 1.0}, true);
  auto rep = poly_quotient_certificate(f, g);  // a1 b0 - a0 b1 = 5 > 0
  CHECK(rep.all_passed());
  CoeffSeq h({0.4, 1.2, 0.9});
  CHECK(poly_quotient_certificate(h, CoeffSeq({0.4, 1.2, 0.9}, true)).all_passed());
  CHECK_THROWS_AS(poly_quotient_certificate(f, CoeffSeq({1.0, 2.0, 3.0}, true)),
                  LengthError);
}

TEST_CASE("three routes agree in sign: T_n, gf'-fg', grid quotient") {
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<int> degd(2, 10);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t deg = degd(rng);
    auto [a, b] = random_increasing_pair(rng, deg);
    auto repq = quotient_monotone_certificate(a, b, deg, unit_grid(100, 0.95));
    auto repp = poly_quotient_certificate(a, b);
    INFO("trial " << trial << "\n" << repq.to_text() << repp.to_text());
    CHECK(repq.all_passed());
    CHECK(repp.all_passed());

    // decreasing mirror with the same positive denominators
    std::vector<double> c(deg + 1);
    double ratio = 5.0;
    for (std::size_t i = 0; i <= deg; ++i) {
      c[i] = ratio * b[i];
      ratio *= 0.8;
    }
    auto repd = quotient_monotone_certificate(CoeffSeq(c), b, deg,
                                              unit_grid(100, 0.95));
    auto repdp = poly_quotient_certificate(CoeffSeq(c), b);
    INFO("decreasing trial " << trial << "\n" << repd.to_text() << repdp.to_text());
    CHECK(repd.all_passed());
    CHECK(repdp.all_passed());
    for (std::size_t n = 1; n <= deg; ++n) CHECK(t_sum(CoeffSeq(c), b, n) < 0.0);
  }
}

TEST_CASE("non-monotone ratio reports inconclusive") {
  CoeffSeq a({1.0, 3.0, 1.0}), b({1.0, 1.0, 1.0}, true);
  CHECK_FALSE(quotient_monotone_certificate(a, b, 2, unit_grid(5, 0.9)).all_passed());
  CHECK_FALSE(poly_quotient_certificate(a, b).all_passed());
}
