// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0
//
// Schwarz-Christoffel map of the closed upper half-plane onto the
// quadrilateral with prevertices 0, 1, 1/r^2, infinity:
//
//   f(z) = C int_0^z t^(b-1) (1-t)^(c-b-1) (1-r^2 t)^(-a) dt,
//   C = 1/B(b, c-b).
//
// Branches: the factor t is taken with its argument in [0, pi]; the
// factors 1-t and 1-r^2 t, which live in the lower half-plane for t in
// the upper one, with argument in [-pi, 0].  This is the continuation
// from the interval (0,1) that reproduces the closed-form vertices with
// phases e^{i pi (b+1-c)} and e^{i pi (a+b+1-c)}.
//
// Endpoint singularities are integrable; legs that start or end at a
// prevertex absorb the factor |t - p|^lambda by the substitution
// t = p + (e-p) tau^(1/(lambda+1)).  Paths that merely pass near a
// prevertex detour over it along a circular arc of radius 1e-3.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "gelliptic/errors.hpp"
#include "gelliptic/hyp2f1.hpp"
#include "gelliptic/quadrature.hpp"
#include "gelliptic/specfun.hpp"

namespace gell {

struct SCParams {
  double a, b, c, r;

  SCParams(double a_, double b_, double c_, double r_)
      : a(a_), b(b_), c(c_), r(r_) {
    if (!(0.0 < a && a < 1.0 && 0.0 < b && b < 1.0))
      throw DomainError("SCParams: requires 0 < a, b < 1");
    if (!(std::max(a + b, 1.0) <= c + 1e-12 && c <= 1.0 + std::min(a, b) + 1e-12))
      throw DomainError("SCParams: requires max{a+b,1} <= c <= 1+min{a,b}");
    if (!(0.0 < r && r < 1.0)) throw DomainError("SCParams: requires 0 < r < 1");
  }

  double prevertex_q() const { return 1.0 / (r * r); }
  double C() const { return 1.0 / beta(b, c - b); }
};

struct QuadVertices {
  Complex w0, w1, w2, w3;
  std::array<double, 4> angles;  // interior angles as multiples of pi

  std::array<Complex, 4> list() const { return {w0, w1, w2, w3}; }
};

struct GridImage {
  std::vector<std::vector<Complex>> polylines;
  std::string source;
};

namespace detail {

// power with argument in [0, pi] (continuous on the closed upper half-plane)
inline Complex pow_upper(Complex z, double e) {
  double arg = std::atan2(z.imag(), z.real());
  if (z.imag() == 0.0 && z.real() < 0.0) arg = M_PI;
  return std::exp(Complex(e * std::log(std::abs(z)), e * arg));
}

// power with argument in [-pi, 0] (the factors 1-t, 1-r^2 t for t above)
inline Complex pow_lower(Complex z, double e) {
  double arg = std::atan2(z.imag(), z.real());
  if (z.imag() == 0.0 && z.real() < 0.0) arg = -M_PI;
  return std::exp(Complex(e * std::log(std::abs(z)), e * arg));
}

struct ScIntegrand {
  double a, b, c, r2;

  Complex operator()(Complex t) const {
    return pow_upper(t, b - 1.0) * pow_lower(1.0 - t, c - b - 1.0) *
           pow_lower(1.0 - r2 * t, -a);
  }

  // integrand with the singular factor at prevertex p divided out;
  // pair with pow_upper(t - p, lambda(p)).
  Complex regularized(Complex t, int which) const {
    switch (which) {
      case 0:  // t^(b-1) removed
        return pow_lower(1.0 - t, c - b - 1.0) * pow_lower(1.0 - r2 * t, -a);
      case 1:  // (1-t)^(c-b-1) = e^{-i pi (c-b-1)} (t-1)^(c-b-1)
        return std::exp(Complex(0.0, -M_PI * (c - b - 1.0))) *
               pow_upper(t, b - 1.0) * pow_lower(1.0 - r2 * t, -a);
      case 2:  // (1-r^2 t)^(-a) = e^{i pi a} r^(-2a) (t - 1/r^2)^(-a)
        return std::exp(Complex(0.0, M_PI * a)) * std::pow(r2, -a) *
               pow_upper(t, b - 1.0) * pow_lower(1.0 - t, c - b - 1.0);
    }
    throw BranchError("ScIntegrand: unknown prevertex");
  }

  double lambda(int which) const {
    switch (which) {
      case 0: return b - 1.0;
      case 1: return c - b - 1.0;
      case 2: return -a;
    }
    throw BranchError("ScIntegrand: unknown prevertex");
  }

  double prevertex(int which) const {
    switch (which) {
      case 0: return 0.0;
      case 1: return 1.0;
      case 2: return 1.0 / r2;
    }
    throw BranchError("ScIntegrand: unknown prevertex");
  }
};

inline constexpr double kDetourRadius = 1e-3;
inline constexpr double kQuadTol = 2e-11;

// straight leg with no endpoint singularity
inline Complex leg_regular(const ScIntegrand& g, Complex p, Complex q) {
  const Complex d = q - p;
  return integrate([&](double s) { return g(p + d * s) * d; }, 0.0, 1.0, kQuadTol);
}

// leg from the prevertex `which` (start) to e; substitution removes the
// endpoint singularity exactly
inline Complex leg_from_prevertex(const ScIntegrand& g, int which, Complex e) {
  const double s0 = g.prevertex(which);
  const double lam = g.lambda(which);
  const Complex d = e - s0;
  const double inv = 1.0 / (lam + 1.0);
  const Complex pre = pow_upper(d, lam + 1.0) * inv;
  auto f = [&](double tau) {
    const Complex t = s0 + d * std::pow(tau, inv);
    return g.regularized(t, which);
  };
  return pre * integrate(f, 0.0, 1.0, kQuadTol);
}

// circular arc around center p from angle th1 to th2 (radius rho)
inline Complex leg_arc(const ScIntegrand& g, double p, double rho, double th1,
                       double th2) {
  auto f = [&](double th) {
    const Complex t = p + rho * std::exp(Complex(0.0, th));
    return g(t) * Complex(0.0, 1.0) * rho * std::exp(Complex(0.0, th));
  };
  return integrate(f, th1, th2, kQuadTol);
}

// Integral along the real axis from prevertex/origin structure:
// 0 -> z for real z >= 0, passing through interior prevertices with
// singularity-absorbing legs on each side.
inline Complex real_axis_integral(const ScIntegrand& g, double z) {
  const double q0 = g.prevertex(2);
  std::vector<std::pair<double, int>> nodes;  // (position, prevertex id)
  nodes.push_back({0.0, 0});
  if (z > 1.0) nodes.push_back({1.0, 1});
  if (z > q0) nodes.push_back({q0, 2});
  // target (may itself be a prevertex)
  int z_id = -1;
  if (z == 1.0) z_id = 1;
  if (z == q0) z_id = 2;

  Complex total = 0.0;
  double cur = 0.0;
  int cur_id = 0;
  for (std::size_t i = 1; i <= nodes.size(); ++i) {
    const bool last = (i == nodes.size());
    const double next = last ? z : nodes[i].first;
    const int next_id = last ? z_id : nodes[i].second;
    if (next == cur) {
      cur_id = next_id;
      continue;
    }
    if (next_id >= 0) {
      // both endpoints singular: meet in the middle
      const double mid = 0.5 * (cur + next);
      total += leg_from_prevertex(g, cur_id, mid);
      total -= leg_from_prevertex(g, next_id, mid);
    } else {
      total += leg_from_prevertex(g, cur_id, next);
    }
    cur = next;
    cur_id = next_id;
  }
  return total;
}

// Straight path 0 -> z for Im z > 0, detouring over any prevertex the
// segment passes within kDetourRadius of.
inline Complex upper_path_integral(const ScIntegrand& g, Complex z) {
  struct Crossing {
    double s_in, s_out;  // segment parameters entering/leaving the disc
    double p;            // prevertex
    bool ends_inside;    // z itself lies inside the detour disc
  };
  std::vector<Crossing> crossings;
  const Complex d = z;  // segment 0 -> z
  for (int which = 1; which <= 2; ++which) {
    const double p = g.prevertex(which);
    // |d s - p|^2 = rho^2, quadratic in the segment parameter s
    const double A = std::norm(d);
    const double B2 = -2.0 * (d.real() * p);
    const double C2 = p * p - kDetourRadius * kDetourRadius;
    const double disc = B2 * B2 - 4.0 * A * C2;
    if (disc <= 0.0) continue;
    const double sq = std::sqrt(disc);
    const double s1 = (-B2 - sq) / (2.0 * A), s2 = (-B2 + sq) / (2.0 * A);
    if (s2 <= 0.0 || s1 >= 1.0) continue;
    crossings.push_back({std::max(s1, 0.0), std::min(s2, 1.0), p, s2 > 1.0});
  }

  Complex total = 0.0;
  Complex cur = 0.0;
  bool first = true;  // first leg leaves the singular origin
  auto advance = [&](Complex to) {
    if (std::abs(to - cur) == 0.0) return;
    total += first ? leg_from_prevertex(g, 0, to) : leg_regular(g, cur, to);
    first = false;
    cur = to;
  };
  for (const auto& cr : crossings) {
    const Complex t_in = d * cr.s_in;
    advance(t_in);
    const double th1 =
        std::atan2((t_in - cr.p).imag(), (t_in - cr.p).real());
    if (cr.ends_inside) {
      // z lies inside the disc: arc to the angle of z, then step inward
      const double th2 = std::atan2((z - cr.p).imag(), (z - cr.p).real());
      total += leg_arc(g, cr.p, kDetourRadius, th1, th2);
      cur = cr.p + kDetourRadius * std::exp(Complex(0.0, th2));
      total += leg_regular(g, cur, z);
      return total;
    }
    const Complex t_out = d * cr.s_out;
    const double th2 =
        std::atan2((t_out - cr.p).imag(), (t_out - cr.p).real());
    total += leg_arc(g, cr.p, kDetourRadius, th1, th2);
    cur = cr.p + kDetourRadius * std::exp(Complex(0.0, th2));
    first = false;
  }
  advance(z);
  return total;
}

}  // namespace detail

// Closed-form image vertices and interior angles.
inline QuadVertices sc_vertices(const SCParams& p) {
  const double r2 = p.r * p.r;
  const double rp2 = (1.0 - p.r) * (1.0 + p.r);
  QuadVertices v{};
  v.angles = {p.b, p.c - p.b, 1.0 - p.a, 1.0 + p.a - p.c};
  v.w0 = 0.0;
  v.w1 = f21_pair(HypParams(p.a, p.b, p.c), r2, rp2).value;
  {
    const double edge =
        f21_pair(HypParams(p.c - p.a, p.c - p.b, p.c + 1.0 - p.a - p.b), rp2,
                 r2)
            .value;
    // equivalent Euler-transformed rewriting: a disagreement here means
    // the two hypergeometric routes have drifted apart numerically
    const double edge_alt =
        std::pow(r2, 1.0 - p.c) *
        f21_pair(HypParams(1.0 - p.b, 1.0 - p.a, p.c + 1.0 - p.a - p.b), rp2,
                 r2)
            .value;
    if (std::abs(edge - edge_alt) > 1e-9 * std::abs(edge))
      throw NoConvergence(
          "sc_vertices: the two closed forms of f(1/r^2) disagree beyond 1e-9");
    const double mag = beta(p.c - p.b, 1.0 - p.a) / beta(p.b, p.c - p.b) *
                       std::pow(rp2, p.c - p.a - p.b) * edge;
    v.w2 = v.w1 + mag * std::exp(Complex(0.0, M_PI * (p.b + 1.0 - p.c)));
  }
  {
    const double mag = beta(1.0 - p.a, p.a + 1.0 - p.c) / beta(p.b, p.c - p.b) *
                       std::pow(r2, 1.0 - p.c) * std::pow(rp2, p.c - p.a - p.b) *
                       f21_pair(HypParams(1.0 - p.b, 1.0 - p.a, 2.0 - p.c), r2,
                                rp2)
                           .value;
    v.w3 = v.w2 + mag * std::exp(Complex(0.0, M_PI * (p.a + p.b + 1.0 - p.c)));
  }
  return v;
}

// Forward map by quadrature for any z in the closed upper half-plane,
// including the finite prevertices themselves (used by the vertex
// cross-check).
inline Complex sc_forward_quadrature(const SCParams& p, Complex z) {
  if (z.imag() < -1e-12)
    throw DomainError("sc_forward: z must lie in the closed upper half-plane");
  if (z == Complex(0.0)) return 0.0;
  const detail::ScIntegrand g{p.a, p.b, p.c, p.r * p.r};
  const double C = p.C();
  if (std::abs(z.imag()) == 0.0) {
    if (z.real() < 0.0)
      throw BranchError(
          "sc_forward: negative real axis requires the f(inf) closed form");
    return C * detail::real_axis_integral(g, z.real());
  }
  return C * detail::upper_path_integral(g, z);
}

// Forward map; exact prevertices use the closed forms.
inline Complex sc_forward(const SCParams& p, Complex z) {
  const double q0 = p.prevertex_q();
  if (z.imag() == 0.0) {
    if (z.real() == 0.0) return 0.0;
    if (z.real() == 1.0) return sc_vertices(p).w1;
    if (z.real() == q0) return sc_vertices(p).w2;
    const double near =
        std::min(std::abs(z.real() - 1.0), std::abs(z.real() - q0));
    if (near <= 1e-12 && near != 0.0)
      throw DomainError("sc_forward: z within 1e-12 of a prevertex");
  }
  return sc_forward_quadrature(p, z);
}

namespace detail {

inline bool point_in_polygon(const std::array<Complex, 4>& vs, Complex w,
                             double tol) {
  // convex, counterclockwise: inside iff every cross product >= -tol
  for (int i = 0; i < 4; ++i) {
    const Complex e = vs[(i + 1) % 4] - vs[i];
    const Complex d = w - vs[i];
    const double cross = e.real() * d.imag() - e.imag() * d.real();
    if (cross < -tol) return false;
  }
  return true;
}

}  // namespace detail

// Generalized Jacobi sine: inverse of f, by damped Newton with the
// analytic derivative f'(z) = C g_r(z).
inline Complex sn(const SCParams& p, Complex w) {
  const QuadVertices verts = sc_vertices(p);
  const auto vlist = verts.list();
  double scale = 0.0;
  for (const auto& v : vlist) scale = std::max(scale, std::abs(v));
  if (!detail::point_in_polygon(vlist, w, 1e-9 * scale))
    throw OutsideImage("sn: w outside the image quadrilateral");
  if (std::abs(w) <= 1e-14) return 0.0;

  const detail::ScIntegrand g{p.a, p.b, p.c, p.r * p.r};
  const double C = p.C();
  const double q0 = p.prevertex_q();

  // initial guess: affine pullback of w in the (w1-w0, w3-w0) frame
  const Complex e1 = verts.w1 - verts.w0, e2 = verts.w3 - verts.w0;
  const double det = e1.real() * e2.imag() - e1.imag() * e2.real();
  Complex z;
  if (std::abs(det) > 1e-14) {
    const Complex dw = w - verts.w0;
    const double alpha = (dw.real() * e2.imag() - dw.imag() * e2.real()) / det;
    const double beta_ = (e1.real() * dw.imag() - e1.imag() * dw.real()) / det;
    z = Complex(std::clamp(alpha, 0.05, 0.95) * 1.0,
                std::clamp(beta_, 0.05, 1.5) * std::max(1.0, 0.3 * q0));
  } else {
    z = Complex(0.5, 1.0);
  }

  auto fval = [&](Complex zz) { return sc_forward_quadrature(p, zz); };
  Complex fz = fval(z);
  double best = std::abs(fz - w);
  for (int it = 0; it < 60; ++it) {
    if (best <= 1e-9) {
      if (z.imag() < -1e-12)
        throw NoConvergence("sn: iterate left the upper half-plane");
      return z;
    }
    const Complex deriv = C * g(z);
    Complex step = (fz - w) / deriv;
    // damp: stay in the open half-plane and do not increase the residual
    for (int halve = 0; halve < 12; ++halve) {
      const Complex zn = z - step;
      if (zn.imag() > 1e-12) {
        const Complex fn = fval(zn);
        const double res = std::abs(fn - w);
        if (res < best) {
          z = zn;
          fz = fn;
          best = res;
          break;
        }
      }
      step *= 0.5;
      if (halve == 11) {
        // restart from a coarse sample of the half-plane
        double best_r = best;
        Complex best_z = z;
        for (double xs = 0.1; xs <= q0 + 0.9; xs += (q0 + 1.0) / 8.0) {
          for (double ys : {0.15, 0.5, 1.0, 2.0, 3.5}) {
            const Complex zz(xs, ys);
            const double res = std::abs(fval(zz) - w);
            if (res < best_r) {
              best_r = res;
              best_z = zz;
            }
          }
        }
        if (best_r < best) {
          z = best_z;
          fz = fval(z);
          best = std::abs(fz - w);
        }
      }
    }
  }
  throw NoConvergence("sn: Newton did not reach 1e-9 in 60 iterations");
}

// Images of the horizontal/vertical grid lines of [0, 1/r^2+1] x [0, 3].
inline GridImage grid_image(const SCParams& p, unsigned n_lines,
                            unsigned samples_per_line) {
  if (n_lines < 2) throw DomainError("grid_image: n_lines >= 2 required");
  if (samples_per_line < 8) throw DomainError("grid_image: samples >= 8 required");
  const double xmax = p.prevertex_q() + 1.0;
  const double ymax = 3.0;
  GridImage img;
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "grid %ux%u on [0,%.6g]x[0,%.6g], a=%g b=%g c=%g r=%g", n_lines,
                samples_per_line, xmax, ymax, p.a, p.b, p.c, p.r);
  img.source = buf;

  for (unsigned j = 0; j < n_lines; ++j) {
    const double y = ymax * j / (n_lines - 1);
    std::vector<Complex> line;
    line.reserve(samples_per_line);
    for (unsigned i = 0; i < samples_per_line; ++i) {
      const double x = xmax * i / (samples_per_line - 1);
      line.push_back(sc_forward(p, Complex(x, y)));
    }
    img.polylines.push_back(std::move(line));
  }
  for (unsigned i = 0; i < n_lines; ++i) {
    const double x = xmax * i / (n_lines - 1);
    std::vector<Complex> line;
    line.reserve(samples_per_line);
    for (unsigned jj = 0; jj < samples_per_line; ++jj) {
      const double y = ymax * jj / (samples_per_line - 1);
      line.push_back(sc_forward(p, Complex(x, y)));
    }
    img.polylines.push_back(std::move(line));
  }
  return img;
}

}  // namespace gell
