// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0
//
// Gamma-family kernels: gamma, log-gamma, digamma, trigamma, beta,
// Pochhammer symbols and Ramanujan's constant R(a,b).

#pragma once

#include <cmath>
#include <limits>

#include "gelliptic/errors.hpp"

namespace gell {

inline constexpr double kEulerGamma = 0.5772156649015328606065120900824024;
inline constexpr double kPoleTol = 1e-12;

// True when x is within kPoleTol of a non-positive integer.
inline bool is_gamma_pole(double x) {
  if (!std::isfinite(x)) return true;
  if (x > 0.5) return false;
  return std::abs(x - std::round(x)) <= kPoleTol;
}

inline void require_non_pole(double x, const char* who) {
  if (is_gamma_pole(x))
    throw PoleError(std::string(who) + ": argument " + std::to_string(x) +
                    " is at (or within 1e-12 of) a non-positive integer");
}

// Gamma function on the real line away from poles.
inline double gamma(double x) {
  require_non_pole(x, "gamma");
  const double g = std::tgamma(x);
  if (!std::isfinite(g))
    throw OverflowError("gamma: result not representable at x = " + std::to_string(x));
  return g;
}

// log|Gamma(x)|; companion used wherever products of gammas could overflow.
inline double lgamma_abs(double x) {
  require_non_pole(x, "lgamma");
  return std::lgamma(x);
}

// sign of Gamma(x) for non-pole real x
inline int gamma_sign(double x) {
  if (x > 0) return 1;
  // Gamma alternates sign between consecutive negative integers.
  return (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
}

// 1/Gamma(x), zero at the poles (entire function).
inline double rgamma(double x) {
  if (x > 0.5 || std::abs(x - std::round(x)) > kPoleTol) return 1.0 / std::tgamma(x);
  return 0.0;
}

// Digamma Psi(x) = Gamma'(x)/Gamma(x). Upward recurrence into the region
// where the asymptotic expansion is accurate to full double precision.
inline double digamma(double x) {
  require_non_pole(x, "digamma");
  double result = 0.0;
  if (x < 0.0) {
    // reflection: Psi(x) = Psi(1-x) - pi*cot(pi x)
    result -= M_PI / std::tan(M_PI * x);
    x = 1.0 - x;
  }
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double w = 1.0 / (x * x);
  // asymptotic series with Bernoulli coefficients B_2..B_14
  double series = w * (1.0 / 12.0 -
                  w * (1.0 / 120.0 -
                  w * (1.0 / 252.0 -
                  w * (1.0 / 240.0 -
                  w * (1.0 / 132.0 -
                  w * (691.0 / 32760.0 -
                  w * (1.0 / 12.0)))))));
  result += std::log(x) - 0.5 / x - series;
  return result;
}

namespace detail {

// Psi'(x) for x >= 6 by the Bernoulli asymptotic expansion
inline double trigamma_asymptotic(double x) {
  const double w = 1.0 / (x * x);
  const double poly =
      1.0 / 6.0 -
      w * (1.0 / 30.0 -
           w * (1.0 / 42.0 -
                w * (1.0 / 30.0 - w * (5.0 / 66.0 - w * 691.0 / 2730.0))));
  return 1.0 / x + 0.5 * w + poly * w / x;
}

}  // namespace detail

// Trigamma Psi'(x) = sum 1/(n+x)^2.
inline double trigamma(double x) {
  require_non_pole(x, "trigamma");
  if (x < 0.0) {
    // Psi'(x) + Psi'(1-x) = pi^2 / sin^2(pi x)
    const double s = std::sin(M_PI * x);
    return M_PI * M_PI / (s * s) - trigamma(1.0 - x);
  }
  double result = 0.0;
  while (x < 10.0) {
    result += 1.0 / (x * x);
    x += 1.0;
  }
  return result + detail::trigamma_asymptotic(x);
}

// Beta function, x, y > 0. Computed in log space, exponentiated once.
inline double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0))
    throw DomainError("beta: requires x, y > 0");
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

// Appell symbol (a, n) = a (a+1) ... (a+n-1), (a, 0) = 1.
inline double pochhammer(double a, unsigned n) {
  double p = 1.0;
  for (unsigned k = 0; k < n; ++k) p *= a + k;
  return p;
}

// Extended Appell symbol (a, t) = Gamma(a+t)/Gamma(a) for real shift t.
inline double pochhammer_ext(double a, double t) {
  require_non_pole(a, "pochhammer_ext");
  require_non_pole(a + t, "pochhammer_ext");
  if (a > 0.0 && a + t > 0.0) {
    const double lg = std::lgamma(a + t) - std::lgamma(a);
    if (lg > 700.0) throw OverflowError("pochhammer_ext: overflow");
    return std::exp(lg);
  }
  const double num = std::tgamma(a + t), den = std::tgamma(a);
  if (!std::isfinite(num) || !std::isfinite(den))
    throw OverflowError("pochhammer_ext: gamma overflow");
  return num / den;
}

// R(a,b) = -Psi(a) - Psi(b) - 2*gamma. R(1/2,1/2) = log 16.
inline double ramanujan_R(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("ramanujan_R: requires a, b > 0");
  return -digamma(a) - digamma(b) - 2.0 * kEulerGamma;
}

}  // namespace gell
