// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0
//
// Adaptive Gauss-Kronrod (G7,K15) quadrature for complex-valued
// integrands of a real parameter.  Nodes are interior, so integrable
// endpoint singularities that have been softened by substitution never
// get evaluated at the endpoint itself.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include "gelliptic/errors.hpp"

namespace gell {

using Complex = std::complex<double>;

namespace detail {

// QUADPACK dqk15 constants.
inline constexpr double kWG[4] = {
    .129484966168869693270611432679082, .27970539148927666790146777142378,
    .381830050505118944950369775488975, .417959183673469387755102040816327};
inline constexpr double kXGK[8] = {
    .991455371120812639206854697526329, .949107912342758524526189684047851,
    .864864423359769072789712788640926, .741531185599394439863864773280788,
    .58608723546769113029414483825873,  .405845151377397166906606412076961,
    .207784955007898467600689403773245, 0.};
inline constexpr double kWGK[8] = {
    .02293532201052922496373200805897,  .063092092629978553290700663189204,
    .104790010322250183839876322541518, .140653259715525918745189590510238,
    .16900472663926790282658342659855,  .190350578064785409913256402421014,
    .204432940075298892414161999234649, .209482141084727828012999174891714};

struct GkEstimate {
  Complex value;
  double err;
};

template <class F>
GkEstimate gk15(const F& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const Complex fc = f(mid);
  Complex kron = kWGK[7] * fc;
  Complex gauss = kWG[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXGK[j];
    const Complex f1 = f(mid - dx), f2 = f(mid + dx);
    kron += kWGK[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWG[j / 2] * (f1 + f2);
  }
  kron *= h;
  gauss *= h;
  const double diff = std::abs(kron - gauss);
  // QUADPACK-style sharpened error estimate
  const double err = diff > 0.0 ? std::min(diff, 200.0 * diff * std::sqrt(diff))
                                : 0.0;
  return {kron, std::max(err, std::abs(kron) * 1e-16)};
}

}  // namespace detail

// Integrate f over [a,b] to absolute tolerance tol by recursive interval
// bisection of the K15 rule.
inline Complex integrate(const std::function<Complex(double)>& f, double a,
                         double b, double tol = 1e-10, int max_depth = 28) {
  struct Rec {
    static Complex go(const std::function<Complex(double)>& f, double a,
                      double b, double tol, int depth) {
      const auto est = detail::gk15(f, a, b);
      if (est.err <= tol || depth <= 0) {
        if (est.err > tol && depth <= 0)
          throw QuadratureFailure("integrate: refinement depth exhausted (err=" +
                                  std::to_string(est.err) + ")");
        return est.value;
      }
      const double m = 0.5 * (a + b);
      return go(f, a, m, 0.5 * tol, depth - 1) + go(f, m, b, 0.5 * tol, depth - 1);
    }
  };
  return Rec::go(f, a, b, tol, max_depth);
}

}  // namespace gell
