// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0
//
// Series-quotient monotonicity toolkit: the T_n sums, the power-series
// quotient certificate, and the polynomial quotient certificate.  Used
// standalone and as oracles for the elliptic inequality catalogue.

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gelliptic/errors.hpp"
#include "gelliptic/report.hpp"

namespace gell {

struct CoeffSeq {
  std::vector<double> coefficients;
  bool positivity_required = false;

  CoeffSeq() = default;
  CoeffSeq(std::vector<double> coeffs, bool positive = false)
      : coefficients(std::move(coeffs)), positivity_required(positive) {
    if (positivity_required)
      for (double v : coefficients)
        if (!(v > 0.0))
          throw DomainError("CoeffSeq: positivity required but violated");
  }

  std::size_t size() const { return coefficients.size(); }
  double operator[](std::size_t i) const { return coefficients[i]; }
};

// T_n = sum_{k=0}^{n} (n-k) (a_{n-k} b_k - a_k b_{n-k}); positive for all
// n >= 1 when {a_n/b_n} is increasing and b_n > 0.
inline double t_sum(const CoeffSeq& a_seq, const CoeffSeq& b_seq, std::size_t n) {
  if (a_seq.size() < n + 1 || b_seq.size() < n + 1)
    throw LengthError("t_sum: sequences must have length >= n+1");
  double t = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double w = static_cast<double>(n - k);
    t += w * (a_seq[n - k] * b_seq[k] - a_seq[k] * b_seq[n - k]);
  }
  return t;
}

enum class RatioClass { increasing, decreasing, constant, non_monotone };

inline RatioClass classify_ratio(const CoeffSeq& a_seq, const CoeffSeq& b_seq) {
  const std::size_t n = std::min(a_seq.size(), b_seq.size());
  bool inc = true, dec = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double r0 = a_seq[i] / b_seq[i], r1 = a_seq[i + 1] / b_seq[i + 1];
    if (r1 < r0) inc = false;
    if (r1 > r0) dec = false;
  }
  if (inc && dec) return RatioClass::constant;
  if (inc) return RatioClass::increasing;
  if (dec) return RatioClass::decreasing;
  return RatioClass::non_monotone;
}

namespace detail {

inline double eval_poly(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

inline bool signs_ok(const std::vector<double>& coeffs, int wanted_sign) {
  double scale = 0.0;
  for (double c : coeffs) scale = std::max(scale, std::abs(c));
  const double tol = 1e-12 * scale;
  for (double c : coeffs)
    if (wanted_sign * c < -tol) return false;
  return true;
}

}  // namespace detail

// Theorem-4.3 certificate: classify {a_n/b_n}; when monotone, the
// truncated quotient must be monotone the same way on the grid, and the
// first N Maclaurin coefficients of f'(x) (sum b_n x^n)^2 must carry the
// predicted sign.  The coefficient of x^{n-1} in f' g^2 is T_n / 1.
inline Report quotient_monotone_certificate(const CoeffSeq& a_seq,
                                            const CoeffSeq& b_seq,
                                            std::size_t truncation,
                                            const std::vector<double>& grid) {
  for (double bv : b_seq.coefficients)
    if (!(bv > 0.0))
      throw DomainError("quotient_monotone_certificate: b_n must be positive");
  Report rep;
  rep.title = "thm4.3 certificate";
  const RatioClass cls = classify_ratio(a_seq, b_seq);
  if (cls == RatioClass::non_monotone) {
    rep.check_true("ratio sequence monotone (inconclusive)", false);
    return rep;
  }
  if (cls == RatioClass::constant) {
    for (std::size_t n = 1; n <= truncation && n < a_seq.size(); ++n)
      rep.check_abs("T_" + std::to_string(n) + " = 0", t_sum(a_seq, b_seq, n), 0.0,
                    1e-12);
    return rep;
  }
  const int dir = (cls == RatioClass::increasing) ? +1 : -1;

  std::vector<double> tns;
  double tmax = 0.0;
  for (std::size_t n = 1; n <= truncation && n < std::min(a_seq.size(), b_seq.size());
       ++n) {
    tns.push_back(t_sum(a_seq, b_seq, n));
    tmax = std::max(tmax, std::abs(tns.back()));
  }
  bool tn_ok = true;
  for (double t : tns)
    if (dir * t < -1e-12 * tmax) tn_ok = false;
  rep.check_true(dir > 0 ? "all T_n > 0" : "all T_n < 0", tn_ok);

  auto quotient = [&](double x) {
    return detail::eval_poly(a_seq.coefficients, x) /
           detail::eval_poly(b_seq.coefficients, x);
  };
  bool mono = true;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (dir * (quotient(grid[i + 1]) - quotient(grid[i])) < -1e-12) mono = false;
  rep.check_true("truncated quotient monotone on grid", mono);
  return rep;
}

// Theorem-4.4 certificate: g f' - f g' computed exactly in double
// arithmetic; all coefficients share the sign predicted by the ratio class.
inline Report poly_quotient_certificate(const CoeffSeq& f_coeffs,
                                        const CoeffSeq& g_coeffs) {
  if (f_coeffs.size() != g_coeffs.size())
    throw LengthError("poly_quotient_certificate: equal lengths required");
  for (double gv : g_coeffs.coefficients)
    if (!(gv > 0.0))
      throw DomainError("poly_quotient_certificate: g_k must be positive");
  Report rep;
  rep.title = "thm4.4 certificate";
  const std::size_t n = f_coeffs.size();
  // w = g f' - f g', degree 2n-3 with n coefficients per polynomial
  std::vector<double> w(n >= 2 ? 2 * n - 2 : 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      const double fd = static_cast<double>(j);
      // g_i * (j f_j) x^{i+j-1}  -  f_i * (j g_j) x^{i+j-1}
      w[i + j - 1] += g_coeffs[i] * fd * f_coeffs[j] - f_coeffs[i] * fd * g_coeffs[j];
    }
  }
  const RatioClass cls = classify_ratio(f_coeffs, g_coeffs);
  switch (cls) {
    case RatioClass::non_monotone:
      rep.check_true("ratio sequence monotone (inconclusive)", false);
      break;
    case RatioClass::constant: {
      double scale = 0.0;
      for (double c : w) scale = std::max(scale, std::abs(c));
      rep.check_true("g f' - f g' = 0", scale <= 1e-12);
      break;
    }
    case RatioClass::increasing:
      rep.check_true("g f' - f g' has positive coefficients",
                     detail::signs_ok(w, +1));
      break;
    case RatioClass::decreasing:
      rep.check_true("g f' - f g' has negative coefficients",
                     detail::signs_ok(w, -1));
      break;
  }
  return rep;
}

}  // namespace gell
