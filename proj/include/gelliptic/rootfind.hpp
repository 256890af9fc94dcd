// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0
//
// Bracketed root finding for strictly monotone functions.  Bisection
// guarantees progress; a secant step inside the bracket accelerates the
// tail.  Never an open Newton: monotonicity hands us the bracket.

#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "gelliptic/errors.hpp"

namespace gell {

struct InverseSolveReport {
  double r = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

struct SolveOptions {
  double ftol = 1e-11;        // |f(r) - y| <= ftol * max(1, |y|)
  double xtol = 1e-13;        // bracket width
  std::size_t max_iter = 200;
};

// Solve f(r) = y for monotone f on [lo, hi]. `decreasing` names f's
// direction.  Endpoint values may be given when the caller already has
// them (or wants infinities treated symbolically).
inline InverseSolveReport solve_monotone(const std::function<double(double)>& f,
                                         double y, double lo, double hi,
                                         bool decreasing,
                                         const SolveOptions& opt = {}) {
  auto side = [&](double fv) {
    // true when the root lies to the right of the evaluation point
    return decreasing ? (fv > y) : (fv < y);
  };
  InverseSolveReport rep;
  rep.bracket_lo = lo;
  rep.bracket_hi = hi;

  double flo = f(lo) - y;
  double fhi = f(hi) - y;
  rep.iterations = 2;
  if (std::abs(flo) <= opt.ftol * std::max(1.0, std::abs(y))) {
    rep.r = lo;
    rep.residual = std::abs(flo);
    return rep;
  }
  if (std::abs(fhi) <= opt.ftol * std::max(1.0, std::abs(y))) {
    rep.r = hi;
    rep.residual = std::abs(fhi);
    return rep;
  }
  if ((flo > 0.0) == (fhi > 0.0))
    throw OutOfRange("solve_monotone: target " + std::to_string(y) +
                     " not bracketed by [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");

  double x = lo, fx = flo;
  bool last_was_secant = false;
  while (rep.iterations < opt.max_iter) {
    // candidate: secant through the bracket endpoints, alternated with
    // bisection so the bracket provably shrinks
    double mid;
    if (!last_was_secant && std::abs(fhi - flo) > 0.0) {
      mid = lo - flo * (hi - lo) / (fhi - flo);
      const double guard = 0.01 * (hi - lo);
      if (!(mid > lo + guard && mid < hi - guard)) mid = 0.5 * (lo + hi);
      last_was_secant = true;
    } else {
      mid = 0.5 * (lo + hi);
      last_was_secant = false;
    }
    fx = f(mid) - y;
    x = mid;
    ++rep.iterations;
    if (std::abs(fx) <= opt.ftol * std::max(1.0, std::abs(y))) break;
    if (side(fx + y)) {
      lo = mid;
      flo = fx;
    } else {
      hi = mid;
      fhi = fx;
    }
    if (hi - lo <= opt.xtol * std::abs(x)) break;  // relative bracket width
  }
  if (rep.iterations >= opt.max_iter &&
      std::abs(fx) > 1e3 * opt.ftol * std::max(1.0, std::abs(y)))
    throw NoConvergence("solve_monotone: iteration cap reached");
  rep.r = x;
  rep.residual = std::abs(fx);
  rep.bracket_lo = lo;
  rep.bracket_hi = hi;
  return rep;
}

}  // namespace gell
