// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>
#include <random>

#include "gelliptic/quadmod.hpp"

using namespace gell;

namespace {
// Reference table: QM(m+in, i) for m, n = 1..5, values truncated to six
// decimal places.
const double kTable[5][5] = {
    {1.000000, 1.279261, 1.354244, 1.383086, 1.397799},
    {0.781700, 1.000000, 1.127663, 1.201627, 1.248066},
    {0.738419, 0.886789, 1.000000, 1.080783, 1.138566},
    {0.723020, 0.832204, 0.925254, 1.000000, 1.058739},
    {0.715410, 0.801239, 0.878297, 0.944519, 1.000000}};
const Complex kI(0.0, 1.0);
}  // namespace

TEST_CASE("QuadSpec: derived angles and validation") {
  const QuadSpec s(Complex(1.0, 1.0), kI);
  CHECK(s.a == Catch::Approx(0.5).margin(1e-15));
  CHECK(s.b == Catch::Approx(0.5).margin(1e-15));
  CHECK(s.c == Catch::Approx(1.0).margin(1e-15));
  CHECK_THROWS_AS(QuadSpec(Complex(1.0, -1.0), kI), DomainError);
  CHECK_THROWS_AS(QuadSpec(Complex(1.0, 1.0), Complex(0.0, -1.0)), DomainError);
  // a reflex quadrilateral: A far below the 0..1 edge direction
  CHECK_THROWS_AS(QuadSpec(Complex(-3.0, 0.05), Complex(-4.0, 0.1)),
                  AngleConstraintError);
}

TEST_CASE("qm: single reference values") {
  const QMResult r11 = qm(QuadSpec(Complex(1.0, 1.0), kI));
  CHECK(r11.modulus == Catch::Approx(1.0).margin(2e-6));
  CHECK(r11.residual <= 1e-11);
  const QMResult r12 = qm(QuadSpec(Complex(1.0, 2.0), kI));
  CHECK(r12.modulus == Catch::Approx(1.279261).margin(2e-6));
  const QMResult r21 = qm(QuadSpec(Complex(2.0, 1.0), kI));
  CHECK(r21.modulus == Catch::Approx(0.781700).margin(2e-6));
}

TEST_CASE("qm_table reproduces the five-by-five reference values") {
  const auto tab = qm_table(5, 5);
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      INFO("m=" << m << " n=" << n);
      CHECK(std::abs(tab[m - 1][n - 1] - kTable[m - 1][n - 1]) <= 2e-6);
    }
  }
  // diagonal is exactly the symmetric case
  for (int m = 1; m <= 5; ++m) CHECK(tab[m - 1][m - 1] == Catch::Approx(1.0).margin(1e-8));
  CHECK(qm_table(1, 1)[0][0] == Catch::Approx(1.0).margin(1e-8));
}

TEST_CASE("diagonal symmetry: QM(m+in,i) QM(n+im,i) = 1") {
  for (int m = 1; m <= 5; ++m) {
    for (int n = m + 1; n <= 5; ++n) {
      const double q1 = qm(QuadSpec(Complex(m, n), kI)).modulus;
      const double q2 = qm(QuadSpec(Complex(n, m), kI)).modulus;
      INFO("m=" << m << " n=" << n);
      CHECK(q1 * q2 == Catch::Approx(1.0).margin(1e-5));
    }
  }
}

TEST_CASE("symmetric quadrilaterals have modulus 1") {
  auto rep = symmetric_check({0.5, 1.0, 2.0, 4.0});
  INFO(rep.to_text());
  CHECK(rep.all_passed());
}

TEST_CASE("reciprocal pairs multiply to 1") {
  for (auto [t, alpha] : {std::pair<double, double>{1.0, M_PI / 8.0},
                          std::pair<double, double>{1.3, M_PI / 12.0}}) {
    auto rep = reciprocal_check(t, alpha);
    INFO(rep.to_text());
    CHECK(rep.all_passed());
  }
  // alpha -> 0 degenerates to the symmetric case: both factors near 1
  const double q = qm(QuadSpec(std::exp(Complex(0.0, M_PI / 4.0 - 1e-6)), kI)).modulus;
  CHECK(q == Catch::Approx(1.0).margin(1e-4));
  CHECK_THROWS_AS(reciprocal_check(-1.0, 0.1), DomainError);
  CHECK_THROWS_AS(reciprocal_check(1.0, 1.0), DomainError);
}

TEST_CASE("duplication formula") {
  for (auto [h, k] : {std::pair<double, double>{1.0, 1.0},
                      std::pair<double, double>{1.0, 2.0},
                      std::pair<double, double>{2.0, 1.0},
                      std::pair<double, double>{0.7, 1.6}}) {
    auto rep = duplication_check(h, k);
    INFO(rep.to_text());
    CHECK(rep.all_passed());
  }
  // h = k = 1: QM(1+2i, 2i) = 2 QM(1+i, i) = 2
  CHECK(qm(QuadSpec(Complex(1.0, 2.0), Complex(0.0, 2.0))).modulus ==
        Catch::Approx(2.0).margin(1e-7));
}

TEST_CASE("homothety invariance through the affine normalizer") {
  const Complex s(0.7, 0.3), t(2.0, -1.0);
  auto S = [&](Complex z) { return s * z + t; };
  const double direct = qm(QuadSpec(Complex(1.0, 2.0), kI)).modulus;
  const double normalized =
      qm_normalized(S(Complex(1.0, 2.0)), S(kI), S(Complex(0.0, 0.0)),
                    S(Complex(1.0, 0.0)))
          .modulus;
  CHECK(normalized == Catch::Approx(direct).margin(1e-8));
}

TEST_CASE("rotating the vertex list inverts the modulus") {
  // QM(B,0,1,A) = 1/QM(A,B,0,1): normalize the rotated list by the
  // affine map sending (1,A) onto (0,1) and compare
  std::mt19937 rng(55555);
  std::uniform_real_distribution<double> xu(-0.5, 2.5), yu(0.4, 2.5);
  int tested = 0;
  for (int i = 0; i < 40 && tested < 10; ++i) {
    const Complex A(xu(rng), yu(rng)), B(xu(rng) - 1.0, yu(rng));
    double q0;
    try {
      q0 = qm(QuadSpec(A, B)).modulus;
    } catch (const AngleConstraintError&) {
      continue;  // sample was not a simple quadrilateral in this order
    } catch (const OutOfRange&) {
      continue;
    }
    try {
      const double q1 = qm_normalized(B, Complex(0.0, 0.0), Complex(1.0, 0.0), A).modulus;
      INFO("A=" << A << " B=" << B);
      CHECK(q0 * q1 == Catch::Approx(1.0).margin(1e-6));
      ++tested;
    } catch (const AngleConstraintError&) {
      continue;
    } catch (const OutOfRange&) {
      continue;
    }
  }
  CHECK(tested >= 10);
}

TEST_CASE("bowman modulus: formula and qm agreement") {
  CHECK_THROWS_AS(bowman_modulus(1.0), DomainError);
  // 0,1,1+hi,(h-1)i is the table quadrilateral for h = 2
  CHECK(bowman_modulus(2.0) == Catch::Approx(1.279261).margin(2e-6));
  for (double h : {1.5, 2.0, 3.0}) {
    const double qb = bowman_modulus(h);
    const double direct =
        qm(QuadSpec(Complex(1.0, h), Complex(0.0, h - 1.0))).modulus;
    INFO("h=" << h);
    CHECK(qb == Catch::Approx(direct).margin(1e-7));
    // exploratory bracket from the paper's remark
    CHECK(qb >= h - 1.0);
    CHECK(qb <= h);
  }
}
