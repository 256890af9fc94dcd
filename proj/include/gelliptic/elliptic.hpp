// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0
//
// Generalized complete elliptic integrals
//   K_{a,b,c}(r) = (B(a,b)/2) F(a,b;c;r^2)
//   E_{a,b,c}(r) = (B(a,b)/2) F(a-1,b;c;r^2)
// their complements K' = K(r'), E' = E(r'), the four derivative
// formulas, and hypergeometric ODE residuals for the two-parameter
// family b = c-a.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "gelliptic/errors.hpp"
#include "gelliptic/hyp2f1.hpp"
#include "gelliptic/specfun.hpp"

namespace gell {

struct EllipticParams {
  double a, b, c;
  bool kdef_valid;  // 0 < a < min{c,1} and 0 < b < c <= a+b
  bool two_param;   // b = c-a

  EllipticParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    kdef_valid = (0.0 < a && a < std::min(c, 1.0)) &&
                 (0.0 < b && b < c && c <= a + b + 1e-12);
    two_param = std::abs(b - (c - a)) <= 1e-12;
  }

  double B() const { return beta(a, b); }
};

namespace detail {

inline void require_kdef(const EllipticParams& p, const char* who) {
  if (!p.kdef_valid)
    throw DomainError(std::string(who) +
                      ": parameters must satisfy 0<a<min{c,1}, 0<b<c<=a+b");
}

inline void require_unit(double r, const char* who) {
  if (!(r >= 0.0 && r <= 1.0))
    throw DomainError(std::string(who) + ": r must lie in [0,1]");
}

}  // namespace detail

// K_{a,b,c}(r); K(1) is reported as InfinityAtOne, never as a float inf.
inline double K_abc(const EllipticParams& p, double r) {
  detail::require_kdef(p, "K_abc");
  detail::require_unit(r, "K_abc");
  if (r == 1.0)
    throw InfinityAtOne("K_abc: K(1) = infinity for c <= a+b");
  return 0.5 * p.B() * f21(HypParams(p.a, p.b, p.c), r * r).value;
}

// E(1) = (1/2) B(a,b) B(c,c+1-a-b) / B(c+1-a,c-b).
inline double E_abc_at_one(const EllipticParams& p) {
  return 0.5 * p.B() * beta(p.c, p.c + 1.0 - p.a - p.b) /
         beta(p.c + 1.0 - p.a, p.c - p.b);
}

inline double E_abc(const EllipticParams& p, double r) {
  detail::require_kdef(p, "E_abc");
  detail::require_unit(r, "E_abc");
  if (r == 1.0) return E_abc_at_one(p);
  return 0.5 * p.B() * f21(HypParams(p.a - 1.0, p.b, p.c), r * r).value;
}

// Complements evaluated through the exact complement r'^2 = (1-r)(1+r),
// so K' near r = 0 keeps full precision in the near-one regime.
inline double K_comp(const EllipticParams& p, double r) {
  detail::require_kdef(p, "K_comp");
  detail::require_unit(r, "K_comp");
  if (r == 0.0)
    throw InfinityAtOne("K_comp: K'(0) = K(1) = infinity for c <= a+b");
  return 0.5 * p.B() * f21_complement(HypParams(p.a, p.b, p.c), r * r).value;
}

inline double E_comp(const EllipticParams& p, double r) {
  detail::require_kdef(p, "E_comp");
  detail::require_unit(r, "E_comp");
  if (r == 0.0) return E_abc_at_one(p);
  return 0.5 * p.B() * f21_complement(HypParams(p.a - 1.0, p.b, p.c), r * r).value;
}

namespace detail {

inline void require_open_unit(double r, const char* who) {
  if (!(r > 0.0 && r < 1.0))
    throw DomainError(std::string(who) + ": r must lie in (0,1)");
}

}  // namespace detail

// dK/dr = (2/(r r'^2)) ((c-a) E + (b r^2 + a - c) K)
inline double dK_dr(const EllipticParams& p, double r) {
  detail::require_open_unit(r, "dK_dr");
  const double rp2 = (1.0 - r) * (1.0 + r);
  const double K = K_abc(p, r), E = E_abc(p, r);
  return 2.0 / (r * rp2) * ((p.c - p.a) * E + (p.b * r * r + p.a - p.c) * K);
}

// dE/dr = (2(a-1)/r) (K - E)
inline double dE_dr(const EllipticParams& p, double r) {
  detail::require_open_unit(r, "dE_dr");
  const double K = K_abc(p, r), E = E_abc(p, r);
  return 2.0 * (p.a - 1.0) / r * (K - E);
}

// d(K-E)/dr = (2/(r r'^2)) (((c-a)-(1-a)r'^2) E + ((a+b)r^2 - c + r'^2) K)
inline double d_KminusE_dr(const EllipticParams& p, double r) {
  detail::require_open_unit(r, "d_KminusE_dr");
  const double rp2 = (1.0 - r) * (1.0 + r);
  const double K = K_abc(p, r), E = E_abc(p, r);
  return 2.0 / (r * rp2) *
         (((p.c - p.a) - (1.0 - p.a) * rp2) * E +
          ((p.a + p.b) * r * r - p.c + rp2) * K);
}

// d(E - r'^2 K)/dr = (2/r) ((1-c) E + (c-1-(b-1)r^2) K)
inline double d_EminusrpK_dr(const EllipticParams& p, double r) {
  detail::require_open_unit(r, "d_EminusrpK_dr");
  const double K = K_abc(p, r), E = E_abc(p, r);
  return 2.0 / r * ((1.0 - p.c) * E + (p.c - 1.0 - (p.b - 1.0) * r * r) * K);
}

enum class OdeKind { K, Kcomp, E, Ecomp };

namespace detail {

// Value and first two derivatives of S(u) = F(alpha,beta;gamma;u^2) by
// term-wise differentiation of the series.  Analytic second derivatives
// are required for the 1e-8 residual tolerance.
struct SeriesJet {
  double f, df, d2f;
};

inline SeriesJet hyp_series_jet(double alpha, double beta_, double gamma_,
                                double u) {
  const double z = u * u;
  double t = 1.0;  // series coefficient times z^n
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  const std::size_t cap = max_series_terms();
  std::size_t small_run = 0;
  for (std::size_t n = 0; n < cap; ++n) {
    const double k = static_cast<double>(n);
    s0 += t;
    s1 += k * t;      // sum n t_n z^n
    s2 += k * k * t;  // sum n^2 t_n z^n
    const double ratio = (alpha + k) * (beta_ + k) / ((gamma_ + k) * (k + 1.0)) * z;
    t *= ratio;
    if (std::abs(t) <= 1e-16 * std::abs(s0)) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    if (n + 1 == cap) throw NoConvergence("hyp_series_jet: cap reached");
  }
  SeriesJet jet{};
  jet.f = s0;
  // d/du [z^n] = 2n z^n / u;  d2/du2 [z^n] = (4n^2 - 2n) z^n / u^2
  jet.df = 2.0 * s1 / u;
  jet.d2f = (4.0 * s2 - 2.0 * s1) / (u * u);
  return jet;
}

}  // namespace detail

// Normalized residual of the hypergeometric ODEs satisfied by K_{a,c},
// K'_{a,c}, E_{a,c}, E'_{a,c} (two-parameter family b = c-a):
//   K : r r'^2 w'' + (2c-1-(2c+1)r^2) w' - 4a(c-a) r w = 0
//   K': r r'^2 w'' + (1-(2c+1)r^2) w'    - 4a(c-a) r w = 0
//   E : r r'^2 w'' + (2c-1) r'^2 w'      + 4(1-a)(c-a) r w = 0
//   E': r r'^2 w'' - (1+(2c-1)r^2) w'    + 4(1-a)(c-a) r w = 0
// At c = 1 the K and K' equations coincide (which pins the sign of the
// K' first-derivative coefficient); the E' equation at c = 1 is
// r r'^2 w'' - (1+r^2) w' + 4(1-a)^2 r w = 0.
inline double ode_residual(OdeKind kind, double a, double c, double r) {
  if (!(0.0 < a && a < c))
    throw DomainError("ode_residual: requires 0 < a < c");
  detail::require_open_unit(r, "ode_residual");
  const double b = c - a;
  const double B = beta(a, b);
  const double rp2 = (1.0 - r) * (1.0 + r);

  const bool comp = (kind == OdeKind::Kcomp || kind == OdeKind::Ecomp);
  const bool first_kind = (kind == OdeKind::K || kind == OdeKind::Kcomp);
  const double alpha = first_kind ? a : a - 1.0;

  double w, dw, d2w;
  if (!comp) {
    const auto jet = detail::hyp_series_jet(alpha, b, c, r);
    w = 0.5 * B * jet.f;
    dw = 0.5 * B * jet.df;
    d2w = 0.5 * B * jet.d2f;
  } else {
    const double u = std::sqrt(rp2);
    const auto jet = detail::hyp_series_jet(alpha, b, c, u);
    w = 0.5 * B * jet.f;
    const double g1 = 0.5 * B * jet.df, g2 = 0.5 * B * jet.d2f;
    dw = -(r / u) * g1;
    d2w = (r * r) / rp2 * g2 - g1 / (u * rp2);
  }

  double t1 = r * rp2 * d2w, t2, t3;
  switch (kind) {
    case OdeKind::K:
      t2 = (2.0 * c - 1.0 - (2.0 * c + 1.0) * r * r) * dw;
      t3 = -4.0 * a * (c - a) * r * w;
      break;
    case OdeKind::Kcomp:
      t2 = (1.0 - (2.0 * c + 1.0) * r * r) * dw;
      t3 = -4.0 * a * (c - a) * r * w;
      break;
    case OdeKind::E:
      t2 = (2.0 * c - 1.0) * rp2 * dw;
      t3 = 4.0 * (1.0 - a) * (c - a) * r * w;
      break;
    case OdeKind::Ecomp:
      t2 = -(1.0 + (2.0 * c - 1.0) * r * r) * dw;
      t3 = 4.0 * (1.0 - a) * (c - a) * r * w;
      break;
    default:
      throw DomainError("ode_residual: unknown kind");
  }
  const double scale =
      std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1e-300});
  return (t1 + t2 + t3) / scale;
}

}  // namespace gell
