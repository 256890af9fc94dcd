// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0
//
// Conformal modulus QM(A,B) of the quadrilateral with vertices
// 0, 1, A, B (Im A, Im B > 0).  Angle parameters are read off the
// vertices, the shape equation
//
//   A - 1 = L r'^(2(c-a-b)) F(c-a,c-b;c+1-a-b;r'^2) / F(a,b;c;r^2) = G(r),
//   L = (B(c-b,1-a)/B(b,c-b)) e^{i pi (b+1-c)}
//
// is solved for r by bracketed root finding on the strictly decreasing
// G, and the modulus is K(r')/K(r) with the classical K computed by the
// AGM (independent of the hypergeometric path on purpose).
//
// The angle constraints enforced are those of a simple quadrilateral
// (all four interior angles in (0, 2 pi), at most one reflex); the
// stronger textbook hypothesis a+b <= c is *not* required -- most of
// the reference table violates it while the shape equation still has a
// unique root, and the symmetric family t e^{i pi/4} needs a reflex
// vertex for small t.

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "gelliptic/agm.hpp"
#include "gelliptic/errors.hpp"
#include "gelliptic/hyp2f1.hpp"
#include "gelliptic/modulus.hpp"
#include "gelliptic/quadrature.hpp"
#include "gelliptic/report.hpp"
#include "gelliptic/rootfind.hpp"
#include "gelliptic/specfun.hpp"

namespace gell {

struct QuadSpec {
  Complex A, B;
  double a = 0.0, b = 0.0, c = 0.0;  // derived angle parameters

  QuadSpec(Complex A_, Complex B_) : A(A_), B(B_) {
    if (!(A.imag() > 0.0) || !(B.imag() > 0.0))
      throw DomainError("QuadSpec: requires Im A > 0 and Im B > 0");
    b = std::arg(B) / M_PI;
    c = (M_PI - std::arg(A - 1.0) + std::arg(B)) / M_PI;
    a = 1.0 - (std::arg(A - 1.0) - std::arg(A - B)) / M_PI;
    // Interior angles b*pi, (c-b)*pi, (1-a)*pi, (1+a-c)*pi must each lie
    // in (0, 2*pi) -- a simple quadrilateral, with at most one reflex
    // vertex (automatic, since the four angles sum to 2*pi).  The angles
    // at 0 and 1 are in (0, pi) by construction when Im A, Im B > 0.  A
    // reflex vertex is accepted at A (the symmetric family needs one for
    // small t) but not at B = f(inf): there the shape equation has no
    // exercised ground truth, so a >= c is refused instead of risking a
    // silent mis-solve.
    const bool simple = (0.0 < b && b < 1.0) && (b < c && c < b + 1.0) &&
                        (-1.0 < a && a < 1.0) && (a < c && c < a + 1.0);
    if (!simple)
      throw AngleConstraintError(
          "QuadSpec: derived angles (a,b,c) = (" + std::to_string(a) + "," +
          std::to_string(b) + "," + std::to_string(c) +
          ") do not describe a simple quadrilateral");
  }
};

struct QMResult {
  double modulus = 0.0;
  double r = 0.0;
  double a = 0.0, b = 0.0, c = 0.0;
  Complex L;
  double residual = 0.0;
  std::size_t iterations = 0;
};

namespace detail {

// G(r)/|L| with exact complements on both hypergeometric arguments.
inline double qm_shape_fn(double a, double b, double c, double r) {
  const double r2 = r * r;
  const double rp2 = (1.0 - r) * (1.0 + r);
  const double num =
      std::pow(rp2, c - a - b) *
      f21_pair(HypParams(c - a, c - b, c + 1.0 - a - b), rp2, r2).value;
  const double den = f21_pair(HypParams(a, b, c), r2, rp2).value;
  return num / den;
}

}  // namespace detail

inline QMResult qm(const QuadSpec& spec) {
  const double a = spec.a, b = spec.b, c = spec.c;
  const Complex L = beta(c - b, 1.0 - a) / beta(b, c - b) *
                    std::exp(Complex(0.0, M_PI * (b + 1.0 - c)));
  const double phase = std::abs(std::arg(spec.A - 1.0) - std::arg(L));
  if (phase > 1e-9)
    throw PhaseMismatch("qm: arg(A-1) != arg(L), mismatch " + std::to_string(phase));
  const double target = ((spec.A - 1.0) / L).real();

  auto G = [&](double r) { return detail::qm_shape_fn(a, b, c, r); };
  SolveOptions opt;
  opt.ftol = 1e-12;  // keeps |G - target| below 1e-11 absolute table-wide
  opt.xtol = 1e-14;
  const InverseSolveReport sol =
      solve_monotone(G, target, 1e-12, 1.0 - 1e-12, /*decreasing=*/true, opt);

  QMResult res;
  res.modulus = agm_K(std::sqrt((1.0 - sol.r) * (1.0 + sol.r))) / agm_K(sol.r);
  res.r = sol.r;
  res.a = a;
  res.b = b;
  res.c = c;
  res.L = L;
  res.residual = sol.residual;
  res.iterations = sol.iterations;
  return res;
}

// Modulus of the quadrilateral with an arbitrary vertex list (p,q,s,t),
// normalized by the homothety T(z) = (z-s)/(t-s) onto (0,1,A,B) form.
inline QMResult qm_normalized(Complex p, Complex q, Complex s, Complex t) {
  const Complex den = t - s;
  if (std::abs(den) == 0.0)
    throw DomainError("qm_normalized: degenerate vertex list");
  return qm(QuadSpec((p - s) / den, (q - s) / den));
}

// Matrix of QM(m+in, i) for m = 1..m_max, n = 1..n_max.
inline std::vector<std::vector<double>> qm_table(unsigned m_max, unsigned n_max) {
  if (m_max < 1 || n_max < 1) throw DomainError("qm_table: sizes must be >= 1");
  std::vector<std::vector<double>> tab(m_max, std::vector<double>(n_max, 0.0));
  for (unsigned m = 1; m <= m_max; ++m)
    for (unsigned n = 1; n <= n_max; ++n)
      tab[m - 1][n - 1] = qm(QuadSpec(Complex(m, n), Complex(0.0, 1.0))).modulus;
  return tab;
}

// |B| = 1 and 2 arg A = arg B force modulus 1: QM(t e^{i pi/4}, i) = 1.
inline Report symmetric_check(const std::vector<double>& ts) {
  Report rep;
  rep.title = "symmetric quadrilateral";
  char buf[96];
  for (double t : ts) {
    const Complex A = t * std::exp(Complex(0.0, M_PI / 4.0));
    const double q = qm(QuadSpec(A, Complex(0.0, 1.0))).modulus;
    std::snprintf(buf, sizeof(buf), "QM(%g e^{i pi/4}, i) = 1", t);
    rep.check_abs(buf, q, 1.0, 1e-8);
  }
  return rep;
}

// QM(t e^{i(pi/4-alpha)}, i) * QM(t e^{i(pi/4+alpha)}, i) = 1.
inline Report reciprocal_check(double t, double alpha) {
  if (!(t > 0.0) || !(alpha > 0.0 && alpha < M_PI / 4.0))
    throw DomainError("reciprocal_check: requires t > 0, alpha in (0, pi/4)");
  Report rep;
  rep.title = "reciprocal pair";
  const Complex i01(0.0, 1.0);
  const double q1 =
      qm(QuadSpec(t * std::exp(Complex(0.0, M_PI / 4.0 - alpha)), i01)).modulus;
  const double q2 =
      qm(QuadSpec(t * std::exp(Complex(0.0, M_PI / 4.0 + alpha)), i01)).modulus;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "QM(t=%g, pi/4-%g) * QM(t, pi/4+%g) = 1", t,
                alpha, alpha);
  rep.check_abs(buf, q1 * q2, 1.0, 1e-7);
  return rep;
}

// QM((1+i(h+k))/c, 2ik/c) = 2 QM(1+ih, ik) with c = 1+i(k-h).
inline Report duplication_check(double h, double k) {
  if (!(h > 0.0 && k > 0.0))
    throw DomainError("duplication_check: requires h, k > 0");
  Report rep;
  rep.title = "duplication formula";
  const Complex cc(1.0, k - h);
  const double lhs =
      qm(QuadSpec(Complex(1.0, h + k) / cc, Complex(0.0, 2.0 * k) / cc)).modulus;
  const double rhs = qm(QuadSpec(Complex(1.0, h), Complex(0.0, k))).modulus;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "duplication h=%g k=%g", h, k);
  rep.check_abs(buf, lhs, 2.0 * rhs, 1e-7);
  return rep;
}

// Bowman's closed formula for the quadrilateral 0, 1, 1+hi, (h-1)i:
//   q = K(r)/K(r'), r = ((t1-t2)/(t1+t2))^2,
//   t1 = mu^{-1}(pi/(2c)), t2 = mu^{-1}(pi c/2), c = 2h-1
// with the classical modulus mu = mu_{1/2,1/2,1}.  Numerically this
// agrees with qm(1+ih, i(h-1)) directly (same vertex correspondence).
inline double bowman_modulus(double h) {
  if (!(h > 1.0)) throw DomainError("bowman_modulus: requires h > 1");
  const double cb = 2.0 * h - 1.0;
  const double t1 = mu_inv(0.5, 0.5, 1.0, M_PI / (2.0 * cb)).r;
  const double t2 = mu_inv(0.5, 0.5, 1.0, M_PI * cb / 2.0).r;
  const double r = std::pow((t1 - t2) / (t1 + t2), 2);
  return agm_K(r) / agm_K(std::sqrt((1.0 - r) * (1.0 + r)));
}

}  // namespace gell
