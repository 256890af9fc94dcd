// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0
//
// Gauss hypergeometric function F(a,b;c;x) for real parameters and
// x in [0,1].  Evaluation strategy:
//
//   x <= 0.75          defining power series
//   0.75 < x < 0.95    Euler transform (1-x)^(c-a-b) F(c-a,c-b;c;x)
//                      when a+b > c (improves the term decay), else the
//                      direct series
//   x >= 0.95          connection formulas in w = 1-x: the standard
//                      linear transformation when c-a-b is not an
//                      integer, the psi-series expansions when c-a-b is
//                      zero (Ramanujan's zero-balanced case) or a
//                      nonzero integer
//
// Callers that know the complement w = 1-x to full precision (modulus
// quotients, complementary integrals) use the *_pair entry points so no
// accuracy is lost forming 1-x.

#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "gelliptic/errors.hpp"
#include "gelliptic/report.hpp"
#include "gelliptic/specfun.hpp"

namespace gell {

enum class HypMethod {
  direct_series,
  euler_transform,
  closed_form_at_one,
  zero_balanced_asymptotic,
  near_one_connection,
};

inline const char* to_string(HypMethod m) {
  switch (m) {
    case HypMethod::direct_series: return "direct_series";
    case HypMethod::euler_transform: return "euler_transform";
    case HypMethod::closed_form_at_one: return "closed_form_at_one";
    case HypMethod::zero_balanced_asymptotic: return "zero_balanced_asymptotic";
    case HypMethod::near_one_connection: return "near_one_connection";
  }
  return "?";
}

enum class HypRegime { c_gt_ab, zero_balanced, c_lt_ab };

struct HypParams {
  double a, b, c;

  HypParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c)))
      throw DomainError("HypParams: parameters must be finite");
    if (!(c > 0.0) || is_gamma_pole(c))
      throw DomainError("HypParams: c must be positive and not a pole");
  }

  HypRegime regime() const {
    const double d = c - a - b;
    if (std::abs(d) <= 1e-12) return HypRegime::zero_balanced;
    return d > 0.0 ? HypRegime::c_gt_ab : HypRegime::c_lt_ab;
  }
};

struct HypResult {
  double value = 0.0;
  HypMethod method = HypMethod::direct_series;
  std::size_t terms_used = 0;
  double error_estimate = 0.0;
};

// Series cap; GELLIPTIC_MAX_TERMS overrides the default of 200000.
inline std::size_t max_series_terms() {
  static const std::size_t cap = [] {
    if (const char* s = std::getenv("GELLIPTIC_MAX_TERMS")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(s, &end, 10);
      if (end != s && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{200000};
  }();
  return cap;
}

namespace detail {

inline bool is_nonpos_int(double x) {
  return x <= 1e-12 && std::abs(x - std::round(x)) <= 1e-12;
}

// Defining power series; no parameter screening. Stops when the term is
// below tol * |sum| three times in a row (guards accidental zero terms).
inline HypResult series_2f1(double a, double b, double c, double x,
                            double tol = 1e-14) {
  HypResult res;
  res.method = HypMethod::direct_series;
  double term = 1.0, sum = 1.0;
  std::size_t small_run = 0;
  const std::size_t cap = max_series_terms();
  for (std::size_t n = 0; n < cap; ++n) {
    const double k = static_cast<double>(n);
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
    ++res.terms_used;
    if (std::abs(term) <= tol * std::abs(sum)) {
      if (++small_run >= 3) {
        res.value = sum;
        res.error_estimate =
            std::abs(term) / std::max(std::abs(sum), 1e-300) + 1e-16 * res.terms_used;
        return res;
      }
    } else {
      small_run = 0;
    }
  }
  throw NoConvergence("2F1 series: term cap " + std::to_string(cap) +
                      " reached at x = " + std::to_string(x));
}

// Ramanujan's expansion for the zero-balanced case c = a+b, argument 1-w.
inline HypResult near_one_zero_balanced(double a, double b, double w,
                                        double tol = 1e-15) {
  HypResult res;
  res.method = HypMethod::zero_balanced_asymptotic;
  const double logw = std::log(w);
  double coef = 1.0;  // (a)_n (b)_n / (n!)^2
  double bracket = 2.0 * digamma(1.0) - digamma(a) - digamma(b) - logw;
  double sum = bracket;
  const std::size_t cap = max_series_terms();
  for (std::size_t n = 0; n < cap; ++n) {
    const double k = static_cast<double>(n);
    coef *= (a + k) * (b + k) / ((k + 1.0) * (k + 1.0)) * w;
    bracket += 2.0 / (k + 1.0) - 1.0 / (a + k) - 1.0 / (b + k);
    const double term = coef * bracket;
    sum += term;
    ++res.terms_used;
    if (std::abs(term) <= tol * std::abs(sum) && n > 0) {
      res.value = sum * rgamma(a) * rgamma(b) * gamma(a + b);
      res.error_estimate =
          std::abs(term) / std::max(std::abs(sum), 1e-300) + 1e-15;
      return res;
    }
  }
  throw NoConvergence("2F1 zero-balanced expansion: cap reached");
}

// c = a+b+m with integer m >= 1, argument 1-w.
inline HypResult near_one_int_positive(double a, double b, int m, double w,
                                       double tol = 1e-15) {
  HypResult res;
  res.method = HypMethod::near_one_connection;
  const double c = a + b + m;
  // finite part
  double fin = 0.0, fcoef = 1.0;
  for (int n = 0; n < m; ++n) {
    fin += fcoef;
    fcoef *= (a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n)) * w;
  }
  fin *= gamma(m) * gamma(c) * rgamma(a + m) * rgamma(b + m);
  // log part
  const double logw = std::log(w);
  double coef = 1.0 / gamma(m + 1.0);  // (a+m)_n (b+m)_n / (n! (n+m)!)
  double bracket = logw - digamma(1.0) - digamma(m + 1.0) + digamma(a + m) + digamma(b + m);
  double sum = coef * bracket;
  const std::size_t cap = max_series_terms();
  for (std::size_t n = 0; n < cap; ++n) {
    const double k = static_cast<double>(n);
    coef *= (a + m + k) * (b + m + k) / ((k + 1.0) * (k + m + 1.0)) * w;
    bracket += -1.0 / (k + 1.0) - 1.0 / (k + m + 1.0) + 1.0 / (a + m + k) + 1.0 / (b + m + k);
    const double term = coef * bracket;
    sum += term;
    ++res.terms_used;
    if (std::abs(term) <= tol * (std::abs(sum) + 1e-300) && n > 0) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      const double logpart =
          -sign * gamma(c) * rgamma(a) * rgamma(b) * std::pow(w, m) * sum;
      res.value = fin + logpart;
      res.error_estimate = 1e-15 + 1e-16 * res.terms_used;
      return res;
    }
  }
  throw NoConvergence("2F1 near-one expansion (c-a-b = m): cap reached");
}

// c = a+b-m with integer m >= 1, argument 1-w.
inline HypResult near_one_int_negative(double a, double b, int m, double w,
                                       double tol = 1e-15) {
  HypResult res;
  res.method = HypMethod::near_one_connection;
  const double c = a + b - m;
  double fin = 0.0, fcoef = 1.0;
  for (int n = 0; n < m; ++n) {
    fin += fcoef;
    fcoef *= (a - m + n) * (b - m + n) / ((n + 1.0) * (1.0 - m + n)) * w;
  }
  fin *= gamma(m) * gamma(c) * rgamma(a) * rgamma(b) * std::pow(w, -static_cast<double>(m));
  const double logw = std::log(w);
  double coef = 1.0 / gamma(m + 1.0);  // (a)_n (b)_n / (n! (n+m)!)
  double bracket = logw - digamma(1.0) - digamma(m + 1.0) + digamma(a) + digamma(b);
  double sum = coef * bracket;
  const std::size_t cap = max_series_terms();
  for (std::size_t n = 0; n < cap; ++n) {
    const double k = static_cast<double>(n);
    coef *= (a + k) * (b + k) / ((k + 1.0) * (k + m + 1.0)) * w;
    bracket += -1.0 / (k + 1.0) - 1.0 / (k + m + 1.0) + 1.0 / (a + k) + 1.0 / (b + k);
    const double term = coef * bracket;
    sum += term;
    ++res.terms_used;
    if (std::abs(term) <= tol * (std::abs(sum) + 1e-300) && n > 0) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      res.value = fin - sign * gamma(c) * rgamma(a - m) * rgamma(b - m) * sum;
      res.error_estimate = 1e-15 + 1e-16 * res.terms_used;
      return res;
    }
  }
  throw NoConvergence("2F1 near-one expansion (c-a-b = -m): cap reached");
}

// Non-integer c-a-b, argument 1-w: two-series linear transformation.
inline HypResult near_one_noninteger(double a, double b, double c, double w) {
  HypResult res;
  res.method = HypMethod::near_one_connection;
  const double d = c - a - b;
  const HypResult s1 = series_2f1(a, b, a + b - c + 1.0, w);
  const HypResult s2 = series_2f1(c - a, c - b, c - a - b + 1.0, w);
  const double p1 = gamma(c) * gamma(d) * rgamma(c - a) * rgamma(c - b);
  const double p2 = gamma(c) * gamma(-d) * rgamma(a) * rgamma(b);
  const double t1 = p1 * s1.value;
  const double t2 = p2 * std::pow(w, d) * s2.value;
  res.value = t1 + t2;
  res.terms_used = s1.terms_used + s2.terms_used;
  // cancellation between the two branches dominates the error budget
  const double cancel =
      (std::abs(t1) + std::abs(t2)) / std::max(std::abs(res.value), 1e-300);
  res.error_estimate = s1.error_estimate + s2.error_estimate + 1e-16 * cancel;
  return res;
}

}  // namespace detail

// F(a,b;c;1) for c > a+b.
inline double f21_at_one(const HypParams& p) {
  const double d = p.c - p.a - p.b;
  if (d <= 1e-12)
    throw DomainError("f21_at_one: requires c > a+b");
  const double lg = std::lgamma(p.c) + std::lgamma(d) - std::lgamma(p.c - p.a) -
                    std::lgamma(p.c - p.b);
  const int sign = gamma_sign(p.c) * gamma_sign(d) * gamma_sign(p.c - p.a) *
                   gamma_sign(p.c - p.b);
  return sign * std::exp(lg);
}

// Core dispatcher. x and w = 1-x are both supplied so complements are
// exact.  `tol` is the requested relative accuracy: a result whose
// internal error estimate exceeds it is refused rather than returned.
inline HypResult f21_pair(const HypParams& p, double x, double w,
                          double tol = 1e-12) {
  if (!(x >= 0.0 && x <= 1.0) || !(w >= 0.0 && w <= 1.0))
    throw DomainError("f21: argument must lie in [0,1]");
  if (x == 0.0) return HypResult{1.0, HypMethod::direct_series, 0, 0.0};

  const bool terminating =
      detail::is_nonpos_int(p.a) || detail::is_nonpos_int(p.b);
  auto deliver = [tol](HypResult res) {
    if (res.error_estimate > tol)
      throw NoConvergence("f21: error estimate " +
                          std::to_string(res.error_estimate) +
                          " above the requested tolerance");
    return res;
  };
  if (w == 0.0 && !terminating) {
    if (p.regime() != HypRegime::c_gt_ab)
      throw DivergesAtOne("f21: series diverges at x = 1 for c <= a+b");
    return HypResult{f21_at_one(p), HypMethod::closed_form_at_one, 0, 1e-15};
  }
  if (terminating || x <= 0.75)
    return deliver(detail::series_2f1(p.a, p.b, p.c, x));

  if (w <= 0.05) {
    const double d = p.c - p.a - p.b;
    const double m = std::round(d);
    if (std::abs(d - m) <= 1e-9) {
      const int mi = static_cast<int>(m);
      if (mi == 0) return deliver(detail::near_one_zero_balanced(p.a, p.b, w));
      if (mi > 0) return deliver(detail::near_one_int_positive(p.a, p.b, mi, w));
      return deliver(detail::near_one_int_negative(p.a, p.b, -mi, w));
    }
    return deliver(detail::near_one_noninteger(p.a, p.b, p.c, w));
  }

  if (p.c - p.a - p.b < -1e-12) {
    // Euler transform: parameter excess becomes a deficit, so the tail
    // decays like n^(c-a-b-1) x^n instead of n^(a+b-c-1) x^n.
    HypResult res = detail::series_2f1(p.c - p.a, p.c - p.b, p.c, x);
    res.value *= std::pow(w, p.c - p.a - p.b);
    res.method = HypMethod::euler_transform;
    return deliver(res);
  }
  return deliver(detail::series_2f1(p.a, p.b, p.c, x));
}

inline HypResult f21(const HypParams& p, double x, double tol = 1e-12) {
  return f21_pair(p, x, 1.0 - x, tol);
}

// F(a,b;c;1-w) with the complement w known exactly.
inline HypResult f21_complement(const HypParams& p, double w, double tol = 1e-12) {
  return f21_pair(p, 1.0 - w, w, tol);
}

// Leading-order zero-balanced approximation near x = 1:
// F(a,b;a+b;x) ~ (R(a,b) - log(1-x)) / B(a,b).  Cross-check oracle only.
inline double zero_balanced_near_one(const HypParams& p, double x) {
  if (std::abs(p.a + p.b - p.c) > 1e-12)
    throw DomainError("zero_balanced_near_one: requires a+b = c");
  if (!(x >= 0.99 && x < 1.0))
    throw DomainError("zero_balanced_near_one: requires x in [0.99, 1)");
  return (ramanujan_R(p.a, p.b) - std::log1p(-x)) / beta(p.a, p.b);
}

struct ContiguousUV {
  double u;   // F(a-1,b;c;x)
  double v;   // F(a,b;c;x)
  double du;  // dF(a-1,b;c;x)/dx
  double dv;  // dF(a,b;c;x)/dx
};

// The contiguous derivative pair used throughout:
//   dv/dx = ((c-a)u + (a-c+bx)v) / (x(1-x)),   du/dx = (a-1)(v-u)/x.
inline ContiguousUV contiguous_uv(const HypParams& p, double x) {
  if (!(x > 0.0 && x < 1.0))
    throw DomainError("contiguous_uv: requires 0 < x < 1");
  ContiguousUV r{};
  r.v = f21(p, x).value;
  r.u = f21(HypParams(p.a - 1.0, p.b, p.c), x).value;
  r.dv = ((p.c - p.a) * r.u + (p.a - p.c + p.b * x) * r.v) / (x * (1.0 - x));
  r.du = (p.a - 1.0) * (r.v - r.u) / x;
  return r;
}

namespace detail {

inline bool grid_monotone(const std::vector<double>& vals, int direction,
                          double scale_tol = 1e-12) {
  double scale = 0.0;
  for (double v : vals) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
    const double diff = direction * (vals[i + 1] - vals[i]);
    if (diff < -scale_tol * scale) return false;
  }
  return true;
}

}  // namespace detail

// f(x) = F(a,b;c;1-e^-x), g = f e^{-(a+b-c)x}, h = f'(x) e^{-x(a+b-c)}
// are all increasing; endpoints per the stated limits.
inline MonotoneReport check_thm_3_4(double a, double b, double c,
                                    const std::vector<double>& grid) {
  MonotoneReport rep;
  rep.title = "thm3.4";
  if (!(0.0 < a && a < c && 0.0 < b && b < c)) {
    rep.check_true("preconditions 0<a,b<c", false);
    return rep;
  }
  const HypParams p(a, b, c);
  const HypParams ph(c - a, c - b, c + 1.0);
  auto fval = [&](double x) { return f21_complement(p, std::exp(-x)).value; };
  auto gval = [&](double x) { return fval(x) * std::exp(-(a + b - c) * x); };
  auto hval = [&](double x) {
    return (a * b / c) * f21_complement(ph, std::exp(-x)).value;
  };
  std::vector<double> fs, gs, hs;
  for (double x : grid) {
    fs.push_back(fval(x));
    gs.push_back(gval(x));
    hs.push_back(hval(x));
  }
  rep.check_true("f increasing", detail::grid_monotone(fs, +1));
  rep.check_true("g increasing", detail::grid_monotone(gs, +1));
  rep.check_true("h increasing", detail::grid_monotone(hs, +1));
  rep.check_abs("f(0) = 1", fval(0.0), 1.0, 1e-14);
  rep.check_abs("g(0) = 1", gval(0.0), 1.0, 1e-14);
  rep.check_rel("h(0) = ab/c", hval(0.0), a * b / c, 1e-13);
  if (c - a - b > 1e-9) {
    const double flim = beta(c, c - a - b) / beta(c - a, c - b);
    rep.check_rel("f(inf) = B(c,c-a-b)/B(c-a,c-b)", fval(100.0), flim, 1e-6);
  }
  if (a + b + 1.0 - c > 1e-9) {
    const double hlim = gamma(c) * gamma(a + b + 1.0 - c) * rgamma(a) * rgamma(b);
    rep.check_rel("h(inf) = G(c)G(a+b+1-c)/(G(a)G(b))", hval(100.0), hlim, 1e-6);
  }
  return rep;
}

// g(x) = (1+x)^{((c+d)-(a+b))/d} f'(x) with f(x) = F(a,b;c;1-(1+x)^{-1/d});
// increasing with g(0) = ab/(cd) and the stated gamma limit.
inline MonotoneReport check_thm_3_5(double a, double b, double c, double d,
                                    const std::vector<double>& grid) {
  MonotoneReport rep;
  rep.title = "thm3.5";
  if (!(a > 0 && b > 0 && c > 0 && d > 0 && a + b > c && c > std::max(a, b))) {
    rep.check_true("preconditions a,b,c,d>0, a+b>c>max(a,b)", false);
    return rep;
  }
  const HypParams ph(c - a, c - b, c + 1.0);
  auto gval = [&](double x) {
    const double w = std::pow(1.0 + x, -1.0 / d);
    return (a * b / (c * d)) * f21_complement(ph, w).value;
  };
  std::vector<double> gs;
  for (double x : grid) gs.push_back(gval(x));
  rep.check_true("g increasing", detail::grid_monotone(gs, +1));
  rep.check_rel("g(0) = ab/(cd)", gval(0.0), a * b / (c * d), 1e-13);
  const double glim =
      (a + b - c) * gamma(c) * gamma(a + b - c) * rgamma(a) * rgamma(b) / d;
  rep.check_rel("g(inf) via gamma", gval(1e6), glim, 1e-3);
  return rep;
}

}  // namespace gell
