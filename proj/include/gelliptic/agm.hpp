// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0
//
// Arithmetic-geometric mean and the classical complete elliptic
// integrals K, E it yields.  Kept independent of the hypergeometric
// engine on purpose: it serves as a cross-module oracle.

#pragma once

#include <cmath>

#include "gelliptic/errors.hpp"

namespace gell {

inline double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("agm: requires a, b > 0");
  for (int i = 0; i < 64; ++i) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    a = an;
    b = bn;
    if (std::abs(a - b) <= 4e-16 * a) break;
  }
  return 0.5 * (a + b);
}

// K(r) = pi / (2 AGM(1, r')), modulus convention K(r) = (pi/2) F(1/2,1/2;1;r^2).
inline double agm_K(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("agm_K: requires 0 <= r < 1");
  const double rp = std::sqrt((1.0 - r) * (1.0 + r));
  return M_PI / (2.0 * agm(1.0, rp));
}

// E(r) by the AGM c-sequence (A&S 17.6): E = K (1 - sum 2^{n-1} c_n^2).
inline double agm_E(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("agm_E: requires 0 <= r <= 1");
  if (r == 1.0) return 1.0;
  double a = 1.0, b = std::sqrt((1.0 - r) * (1.0 + r)), c = r;
  double csum = 0.5 * c * c;
  double pow2 = 0.5;
  for (int i = 0; i < 64; ++i) {
    const double an = 0.5 * (a + b);
    const double cn = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    c = cn;
    pow2 *= 2.0;
    csum += pow2 * c * c;
    if (std::abs(c) <= 1e-17 * a) break;
  }
  return (M_PI / (2.0 * a)) * (1.0 - csum);
}

// Classical modulus mu(r) = (pi/2) K(r')/K(r) without the hypergeometric path.
inline double agm_mu(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("agm_mu: requires 0 < r < 1");
  const double rp = std::sqrt((1.0 - r) * (1.0 + r));
  return (M_PI / 2.0) * agm_K(rp) / agm_K(r);
}

}  // namespace gell
