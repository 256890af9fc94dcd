// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent oracles for the test suites.  Deliberately primitive:
// long-double brute-force series, direct summation of the digamma /
// trigamma series with Euler-Maclaurin tails, central finite
// differences.  None of them share code with the library paths they
// check.

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

// Brute-force 2F1 by long double summation; valid for |x| < 1 away from
// the unit argument (practically x <= 0.99).
inline double hyp2f1_series(double a, double b, double c, double x,
                            long double tol = 1e-18L, std::size_t cap = 5000000) {
  long double term = 1.0L, sum = 1.0L;
  std::size_t quiet = 0;
  for (std::size_t n = 0; n < cap; ++n) {
    const long double k = static_cast<long double>(n);
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0L)) * x;
    sum += term;
    if (fabsl(term) <= tol * fabsl(sum)) {
      if (++quiet >= 5) return static_cast<double>(sum);
    } else {
      quiet = 0;
    }
  }
  throw std::runtime_error("oracle::hyp2f1_series did not converge");
}

// Psi(z) by direct summation of Psi(z) = -gamma - 1/z + sum z/(n(n+z))
// with an Euler-Maclaurin tail after N terms.
inline double digamma_series(double z, std::size_t N = 200000) {
  const double euler = 0.57721566490153286060651209008240;
  long double s = 0.0L;
  for (std::size_t n = N; n >= 1; --n)  // sum small terms first
    s += static_cast<long double>(z) / (static_cast<long double>(n) *
                                        (static_cast<long double>(n) + z));
  // tail: sum_{n>N} (1/n - 1/(n+z)) via Euler-Maclaurin
  const long double t = static_cast<long double>(N) + 1.0L;
  auto f = [&](long double u) { return 1.0L / u - 1.0L / (u + z); };
  auto fp = [&](long double u) { return -1.0L / (u * u) + 1.0L / ((u + z) * (u + z)); };
  const long double tail =
      logl((t + z) / t) + 0.5L * f(t) - fp(t) / 12.0L;
  return static_cast<double>(-euler - 1.0L / static_cast<long double>(z) + s + tail);
}

// Psi'(z) = sum 1/(n+z)^2 with an Euler-Maclaurin tail.
inline double trigamma_series(double z, std::size_t N = 100000) {
  long double s = 0.0L;
  for (std::size_t n = N; n-- > 0;)
    s += 1.0L / ((static_cast<long double>(n) + z) * (static_cast<long double>(n) + z));
  const long double t = static_cast<long double>(N) + z;
  const long double tail = 1.0L / t + 0.5L / (t * t) + 1.0L / (6.0L * t * t * t);
  return static_cast<double>(s + tail);
}

// central 5-point first derivative
inline double deriv5(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

// central 5-point second/third derivatives (used by the Schwarzian checks)
inline double deriv5_2(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
         (12 * h * h);
}

inline double deriv5_3(const std::function<double(double)>& f, double x, double h) {
  return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) /
         (2 * h * h * h);
}

}  // namespace oracle
