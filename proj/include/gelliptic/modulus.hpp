// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0
//
// Generalized modulus mu_{a,b,c}(r) = (B(a,b)/2) F(a,b;c;r'^2)/F(a,b;c;r^2),
// its inverse, the modular function phi_K, and the identity suite
// mu(r) mu(r') = (B/2)^2, phi_K(r)^2 + phi_{1/K}(r')^2 = 1, and the
// c < a+b transfer identity.

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gelliptic/errors.hpp"
#include "gelliptic/hyp2f1.hpp"
#include "gelliptic/report.hpp"
#include "gelliptic/rootfind.hpp"
#include "gelliptic/specfun.hpp"

namespace gell {

namespace detail {

inline void require_mu_params(double a, double b, double c, const char* who) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0))
    throw DomainError(std::string(who) + ": requires a, b, c > 0");
}

// Unnormalized quotient F(a,b;c;r'^2) / F(a,b;c;r^2) with exact
// complements on both sides.
inline double mu_quotient(double a, double b, double c, double r) {
  const HypParams p(a, b, c);
  const double r2 = r * r;
  const double rp2 = (1.0 - r) * (1.0 + r);
  const double num = f21_pair(p, rp2, r2).value;
  const double den = f21_pair(p, r2, rp2).value;
  return num / den;
}

// Same quotient parametrized by r = sin(theta): sin^2/cos^2 give both
// complements exactly, so evaluation and root finding keep full
// precision all the way into the corners of (0,1).
inline double mu_quotient_theta(double a, double b, double c, double theta) {
  const HypParams p(a, b, c);
  const double s = std::sin(theta), co = std::cos(theta);
  const double r2 = s * s, rp2 = co * co;
  return f21_pair(p, rp2, r2).value / f21_pair(p, r2, rp2).value;
}

inline constexpr double kThetaEps = 1e-14;

// Invert a decreasing multiple of the quotient: solve
// scale * quotient(r) = y for r, bracketing in theta space.
inline InverseSolveReport invert_mu_like(double a, double b, double c,
                                         double scale, double y) {
  auto f = [&](double theta) {
    return scale * mu_quotient_theta(a, b, c, theta);
  };
  SolveOptions opt;
  opt.ftol = 1e-12;
  opt.xtol = 1e-15;
  InverseSolveReport rep = solve_monotone(f, y, kThetaEps,
                                          M_PI / 2.0 - kThetaEps,
                                          /*decreasing=*/true, opt);
  rep.r = std::sin(rep.r);
  rep.bracket_lo = std::sin(rep.bracket_lo);
  rep.bracket_hi = std::sin(rep.bracket_hi);
  return rep;
}

}  // namespace detail

inline double mu(double a, double b, double c, double r) {
  detail::require_mu_params(a, b, c, "mu");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("mu: requires 0 < r < 1");
  return 0.5 * beta(a, b) * detail::mu_quotient(a, b, c, r);
}

// Inverse of mu by bracketed root finding on (1e-15, 1-1e-15); strict
// monotonicity (Lemma on the modulus homeomorphism) guarantees the bracket.
inline InverseSolveReport mu_inv(double a, double b, double c, double y) {
  detail::require_mu_params(a, b, c, "mu_inv");
  if (!(y > 0.0)) throw DomainError("mu_inv: requires y > 0");
  const double B = beta(a, b);
  if (c - a - b > 1e-12) {
    // bounded range [B/(2d), B d/2] with d = F(a,b;c;1)
    const double d = f21_at_one(HypParams(a, b, c));
    const double lo = 0.5 * B / d, hi = 0.5 * B * d;
    const double slack = 1e-11 * std::max(1.0, y);
    if (y < lo - slack || y > hi + slack)
      throw OutOfRange("mu_inv: y outside [B/(2d), Bd/2] for a+b < c");
  }
  return detail::invert_mu_like(a, b, c, 0.5 * B, y);
}

// phi_K(r) = mu^{-1}(mu(r)/K).  For a+b < c the modulus has bounded
// range, and phi_K is defined only for K >= 1.
inline double phi_K(double a, double b, double c, double K, double r) {
  detail::require_mu_params(a, b, c, "phi_K");
  if (!(K > 0.0)) throw DomainError("phi_K: requires K > 0");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("phi_K: requires 0 < r < 1");
  if (K == 1.0) return r;
  if (c - a - b > 1e-12 && K < 1.0)
    throw OutOfRange("phi_K: for a+b < c the modular function needs K >= 1");
  return mu_inv(a, b, c, mu(a, b, c, r) / K).r;
}

// phi through the unnormalized quotient mu~; equal to phi_K by the
// scaling lemma.  Exposed for the identity suite.
inline double phi_K_unnormalized(double a, double b, double c, double K, double r) {
  detail::require_mu_params(a, b, c, "phi_K_unnormalized");
  if (!(K > 0.0)) throw DomainError("phi_K_unnormalized: requires K > 0");
  const double target = detail::mu_quotient(a, b, c, r) / K;
  return detail::invert_mu_like(a, b, c, 1.0, target).r;
}

// Identity suite over the sample radii and K values:
//   (4.7)  mu(r) mu(r') = (B/2)^2
//   (4.8)  mu^-1(x)^2 + mu^-1(y)^2 = 1 when x y = (B/2)^2
//   (4.9)  phi_K(r)^2 + phi_{1/K}(r')^2 = 1
//   (4.10) r'^{2(c-a-b)} mu_{a,b,c}(r) = r^{2(c-a-b)} mu_{c-a,c-b,c}(r)
//   and the unnormalized-quotient recomputation of phi.
inline Report identity_suite(double a, double b, double c,
                             const std::vector<double>& radii,
                             const std::vector<double>& Ks) {
  detail::require_mu_params(a, b, c, "identity_suite");
  Report rep;
  rep.title = "identity_suite(" + std::to_string(a) + "," + std::to_string(b) +
              "," + std::to_string(c) + ")";
  const double B = beta(a, b);
  const double half_B_sq = 0.25 * B * B;
  char buf[160];

  for (double r : radii) {
    const double rp = std::sqrt((1.0 - r) * (1.0 + r));
    std::snprintf(buf, sizeof(buf), "(4.7) mu(r)mu(r') = (B/2)^2 at r=%g", r);
    rep.check_abs(buf, mu(a, b, c, r) * mu(a, b, c, rp), half_B_sq,
                  1e-9 * std::max(1.0, half_B_sq));

    const double x = mu(a, b, c, r);
    const double y = half_B_sq / x;
    const double ix = mu_inv(a, b, c, x).r;
    const double iy = mu_inv(a, b, c, y).r;
    std::snprintf(buf, sizeof(buf), "(4.8) inv^2 sum = 1 at r=%g", r);
    rep.check_abs(buf, ix * ix + iy * iy, 1.0, 1e-9);

    for (double K : Ks) {
      const double s1 = phi_K(a, b, c, K, r);
      const double s2 = phi_K(a, b, c, 1.0 / K, rp);
      std::snprintf(buf, sizeof(buf), "(4.9) phi_K^2 + phi_1/K'^2 = 1 at r=%g K=%g",
                    r, K);
      rep.check_abs(buf, s1 * s1 + s2 * s2, 1.0, 1e-9);

      const double s3 = phi_K_unnormalized(a, b, c, K, r);
      std::snprintf(buf, sizeof(buf), "phi via unnormalized quotient at r=%g K=%g",
                    r, K);
      rep.check_abs(buf, s3, s1, 1e-9);
    }

    if (a + b - c > 1e-12 && c - a > 0.0 && c - b > 0.0) {
      // transfer identity between the (a,b,c) and (c-a,c-b,c) moduli; an
      // Euler-transform consequence, so each side carries its own beta
      // normalization
      const double lhs =
          std::pow(rp, 2.0 * (c - a - b)) * mu(a, b, c, r) / B;
      const double rhs = std::pow(r, 2.0 * (c - a - b)) *
                         mu(c - a, c - b, c, r) / beta(c - a, c - b);
      std::snprintf(buf, sizeof(buf), "transfer identity at r=%g", r);
      rep.check_abs(buf, lhs, rhs, 1e-9 * std::max(1.0, std::abs(rhs)));
    }
  }
  return rep;
}

}  // namespace gell
