// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0
//
// The monotonicity property catalogue: fourteen K/E combinations from
// the main inequality lemma, the four zero-balanced log-companions, the
// three r'K / (K-E) variants, and r K / artanh r.  One table-driven
// verifier covers all 22 ids: monotone direction on a grid, plus
// endpoint limits probed at r = 1e-4 and r = 1-1e-6.
//
// Endpoint handling.  Limits reached at a power-law rate are compared
// directly at the probe (default triples are chosen so the correction
// term clears the 1e-3 relative tolerance).  Limits reached only
// logarithmically (the zero-balanced items) are compared through the
// equivalent asymptotic form, e.g. (K - R/2)/log(1/r') -> 1 instead of
// (K - B/2)/log(1/r') -> 1.  Infinite limits are verified as divergence
// beyond the grid values, zero limits as vanishing below 2% of the
// item's scale.

#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "gelliptic/elliptic.hpp"
#include "gelliptic/errors.hpp"
#include "gelliptic/report.hpp"
#include "gelliptic/specfun.hpp"

namespace gell {

enum class PropertyId {
  l416_f1, l416_f2, l416_f3, l416_f4, l416_f5, l416_f6, l416_f7,
  l416_f8, l416_f9, l416_f10, l416_f11, l416_f12, l416_f13, l416_f14,
  t418_1, t418_2, t418_3, t418_4,
  t420_1, t420_2, t420_3,
  l425,
};

inline const std::vector<PropertyId>& all_property_ids() {
  static const std::vector<PropertyId> ids = {
      PropertyId::l416_f1,  PropertyId::l416_f2,  PropertyId::l416_f3,
      PropertyId::l416_f4,  PropertyId::l416_f5,  PropertyId::l416_f6,
      PropertyId::l416_f7,  PropertyId::l416_f8,  PropertyId::l416_f9,
      PropertyId::l416_f10, PropertyId::l416_f11, PropertyId::l416_f12,
      PropertyId::l416_f13, PropertyId::l416_f14, PropertyId::t418_1,
      PropertyId::t418_2,   PropertyId::t418_3,   PropertyId::t418_4,
      PropertyId::t420_1,   PropertyId::t420_2,   PropertyId::t420_3,
      PropertyId::l425,
  };
  return ids;
}

namespace detail {

struct Endpoint {
  enum class Kind { finite, zero, infinite } kind = Kind::finite;
  double value = 0.0;  // finite: limit; zero: scale of the item
  // when set, replaces the raw item for the endpoint comparison
  std::function<double(double)> asymptotic_form;
};

struct PropertyDef {
  const char* name;
  int direction;  // +1 increasing, -1 decreasing
  bool log_convex_check = false;
  std::function<std::string(const EllipticParams&)> constraint;
  std::function<double(const EllipticParams&, double)> eval;
  std::function<Endpoint(const EllipticParams&)> at_zero;
  std::function<Endpoint(const EllipticParams&)> at_one;
};

inline std::string l416_constraint(const EllipticParams& p) {
  if (!(0.0 < p.a && p.a < std::min(p.c, 1.0) && 0.0 < p.b &&
        p.b < std::min(p.c, 1.0)))
    return "requires 0 < a,b < min{c,1}";
  if (!(p.c <= p.a + p.b + 1e-12)) return "requires c <= a+b";
  return {};
}

inline std::string zero_balanced_two_param(const EllipticParams& p) {
  if (!(0.0 < p.a && p.a < p.c && p.c <= 1.0 + 1e-12))
    return "requires 0 < a < c <= 1";
  if (std::abs(p.b - (p.c - p.a)) > 1e-12) return "requires b = c-a";
  return {};
}

inline double logc(double r) {
  // log(1/r') computed stably from r
  return -0.5 * std::log1p(-(r * r));
}

inline PropertyDef make_property(PropertyId id) {
  using K = Endpoint::Kind;
  PropertyDef d{};
  switch (id) {
    case PropertyId::l416_f1:
      d.name = "f1 = (K-E)/(r^2 K)";
      d.direction = +1;
      d.constraint = l416_constraint;
      d.eval = [](const EllipticParams& p, double r) {
        const double k = K_abc(p, r);
        return (k - E_abc(p, r)) / (r * r * k);
      };
      d.at_zero = [](const EllipticParams& p) { return Endpoint{K::finite, p.b / p.c, {}}; };
      d.at_one = [](const EllipticParams&) { return Endpoint{K::finite, 1.0, {}}; };
      return d;
    case PropertyId::l416_f2:
      d.name = "f2 = (E - r'^2 K)/r^2";
      d.direction = +1;
      d.constraint = l416_constraint;
      d.eval = [](const EllipticParams& p, double r) {
        const double rp2 = (1.0 - r) * (1.0 + r);
        return (E_abc(p, r) - rp2 * K_abc(p, r)) / (r * r);
      };
      d.at_zero = [](const EllipticParams& p) {
        return Endpoint{K::finite, p.B() * (p.c - p.b) / (2.0 * p.c), {}};
      };
      d.at_one = [](const EllipticParams& p) {
        return Endpoint{K::finite, E_abc_at_one(p), {}};
      };
      return d;
    case PropertyId::l416_f3:
      d.name = "f3 = r'^(-2(c+1-a-b)) E";
      d.direction = +1;
      d.constraint = l416_constraint;
      d.eval = [](const EllipticParams& p, double r) {
        const double rp2 = (1.0 - r) * (1.0 + r);
        return std::pow(rp2, -(p.c + 1.0 - p.a - p.b)) * E_abc(p, r);
      };
      d.at_zero = [](const EllipticParams& p) { return Endpoint{K::finite, 0.5 * p.B(), {}}; };
      d.at_one = [](const EllipticParams&) { return Endpoint{K::infinite, 0.0, {}}; };
      return d;
    case PropertyId::l416_f4:
      d.name = "f4 = r'^(2(a+b-c)) K";
      d.direction = +1;
      d.constraint = l416_constraint;
      d.eval = [](const EllipticParams& p, double r) {
        const double rp2 = (1.0 - r) * (1.0 + r);
        return std::pow(rp2, p.a + p.b - p.c) * K_abc(p, r);
      };
      d.at_zero = [](const EllipticParams& p) { return Endpoint{K::finite, 0.5 * p.B(), {}}; };
      d.at_one = [](const EllipticParams& p) {
        if (p.a + p.b - p.c <= 1e-12) return Endpoint{K::infinite, 0.0, {}};
        return Endpoint{K::finite, 0.5 * beta(p.c, p.a + p.b - p.c), {}};
      };
      return d;
    case PropertyId::l416_f5:
      d.name = "f5 = r'^(-2) E";
      d.direction = +1;
      d.constraint = l416_constraint;
      d.eval = [](const EllipticParams& p, double r) {
        return E_abc(p, r) / ((1.0 - r) * (1.0 + r));
      };
      d.at_zero = [](const EllipticParams& p) { return Endpoint{K::finite, 0.5 * p.B(), {}}; };
      d.at_one = [](const EllipticParams&) { return Endpoint{K::infinite, 0.0, {}}; };
      return d;
    case PropertyId::l416_f6:
      d.name = "f6 = r'^2 K";
      d.direction = -1;
      d.constraint = l416_constraint;
      d.eval = [](const EllipticParams& p, double r) {
        return (1.0 - r) * (1.0 + r) * K_abc(p, r);
      };
      d.at_zero = [](const EllipticParams& p) { return Endpoint{K::finite, 0.5 * p.B(), {}}; };
      d.at_one = [](const EllipticParams& p) { return Endpoint{K::zero, 0.5 * p.B(), {}}; };
      return d;
    case PropertyId::l416_f7:
      d.name = "f7 = K (log-convex)";
      d.direction = +1;
      d.log_convex_check = true;
      d.constraint = l416_constraint;
      d.eval = [](const EllipticParams& p, double r) { return K_abc(p, r); };
      d.at_zero = [](const EllipticParams& p) { return Endpoint{K::finite, 0.5 * p.B(), {}}; };
      d.at_one = [](const EllipticParams&) { return Endpoint{K::infinite, 0.0, {}}; };
      return d;
    case PropertyId::l416_f8:
      d.name = "f8 = (E - r'^2 K)/(r^2 K)";
      d.direction = -1;
      d.constraint = l416_constraint;
      d.eval = [](const EllipticParams& p, double r) {
        const double k = K_abc(p, r);
        const double rp2 = (1.0 - r) * (1.0 + r);
        return (E_abc(p, r) - rp2 * k) / (r * r * k);
      };
      d.at_zero = [](const EllipticParams& p) {
        return Endpoint{K::finite, 1.0 - p.b / p.c, {}};
      };
      d.at_one = [](const EllipticParams& p) {
        return Endpoint{K::zero, 1.0 - p.b / p.c, {}};
      };
      return d;
    case PropertyId::l416_f9:
      d.name = "f9 = (K-E)/(E - r'^2 K)";
      d.direction = +1;
      d.constraint = l416_constraint;
      d.eval = [](const EllipticParams& p, double r) {
        const double k = K_abc(p, r), e = E_abc(p, r);
        const double rp2 = (1.0 - r) * (1.0 + r);
        return (k - e) / (e - rp2 * k);
      };
      d.at_zero = [](const EllipticParams& p) {
        return Endpoint{K::finite, p.b / (p.c - p.b), {}};
      };
      d.at_one = [](const EllipticParams&) { return Endpoint{K::infinite, 0.0, {}}; };
      return d;
    case PropertyId::l416_f10:
      d.name = "f10 = (K - B/2)/log(1/r')";
      d.direction = +1;
      d.constraint = l416_constraint;
      d.eval = [](const EllipticParams& p, double r) {
        return (K_abc(p, r) - 0.5 * p.B()) / logc(r);
      };
      d.at_zero = [](const EllipticParams& p) {
        return Endpoint{K::finite, p.a * p.b * p.B() / p.c, {}};
      };
      d.at_one = [](const EllipticParams& p) {
        if (p.a + p.b - p.c > 1e-12) return Endpoint{K::infinite, 0.0, {}};
        // c = a+b: D = 1, approached like 1/log(1/r'); compare the
        // asymptotic form (K - R/2)/log(1/r') instead
        Endpoint e{K::finite, 1.0, {}};
        const double R = ramanujan_R(p.a, p.b);
        EllipticParams pc = p;
        e.asymptotic_form = [pc, R](double r) {
          return (K_abc(pc, r) - 0.5 * R) / logc(r);
        };
        return e;
      };
      return d;
    case PropertyId::l416_f11:
      d.name = "f11 = (B/2 - r'^2 K)/r^2";
      d.direction = +1;
      d.constraint = l416_constraint;
      d.eval = [](const EllipticParams& p, double r) {
        const double rp2 = (1.0 - r) * (1.0 + r);
        return (0.5 * p.B() - rp2 * K_abc(p, r)) / (r * r);
      };
      d.at_zero = [](const EllipticParams& p) {
        return Endpoint{K::finite, p.B() * (p.c - p.a * p.b) / (2.0 * p.c), {}};
      };
      d.at_one = [](const EllipticParams& p) { return Endpoint{K::finite, 0.5 * p.B(), {}}; };
      return d;
    case PropertyId::l416_f12:
      d.name = "f12 = (K - B/2)/(r'^(2(c-a-b)) - 1)";
      d.direction = +1;
      d.constraint = [](const EllipticParams& p) {
        std::string base = l416_constraint(p);
        if (!base.empty()) return base;
        if (!(p.a + p.b - p.c > 1e-12)) return std::string("requires c < a+b");
        return std::string{};
      };
      d.eval = [](const EllipticParams& p, double r) {
        const double rp2 = (1.0 - r) * (1.0 + r);
        return (K_abc(p, r) - 0.5 * p.B()) /
               (std::pow(rp2, p.c - p.a - p.b) - 1.0);
      };
      d.at_zero = [](const EllipticParams& p) {
        return Endpoint{
            K::finite,
            p.a * p.b * p.B() / (2.0 * p.c * (p.a + p.b - p.c)), {}};
      };
      d.at_one = [](const EllipticParams& p) {
        return Endpoint{K::finite, 0.5 * beta(p.c, p.a + p.b - p.c), {}};
      };
      return d;
    case PropertyId::l416_f13:
      d.name = "f13 = ((1-a-(b-c)r^2)E - (1-a)r'^2 K)/r^2";
      d.direction = -1;
      d.constraint = l416_constraint;
      d.eval = [](const EllipticParams& p, double r) {
        const double rp2 = (1.0 - r) * (1.0 + r);
        return ((1.0 - p.a - (p.b - p.c) * r * r) * E_abc(p, r) -
                (1.0 - p.a) * rp2 * K_abc(p, r)) /
               (r * r);
      };
      d.at_zero = [](const EllipticParams& p) {
        return Endpoint{
            K::finite,
            (p.c + 1.0 - p.a) * (p.c - p.b) * p.B() / (2.0 * p.c), {}};
      };
      d.at_one = [](const EllipticParams& p) {
        return Endpoint{K::finite,
                        (p.c + 1.0 - p.a - p.b) * E_abc_at_one(p), {}};
      };
      return d;
    case PropertyId::l416_f14:
      d.name = "f14 = (c-a)E - (b-a)r'^2 K";
      d.direction = -1;
      d.constraint = l416_constraint;
      d.eval = [](const EllipticParams& p, double r) {
        const double rp2 = (1.0 - r) * (1.0 + r);
        return (p.c - p.a) * E_abc(p, r) - (p.b - p.a) * rp2 * K_abc(p, r);
      };
      d.at_zero = [](const EllipticParams& p) {
        return Endpoint{K::finite, (p.c - p.b) * 0.5 * p.B(), {}};
      };
      d.at_one = [](const EllipticParams& p) {
        return Endpoint{K::finite, (p.c - p.a) * E_abc_at_one(p), {}};
      };
      return d;

    case PropertyId::t418_1:
      d.name = "4.18(1): K + log r'";
      d.direction = -1;
      d.constraint = zero_balanced_two_param;
      d.eval = [](const EllipticParams& p, double r) {
        return K_abc(p, r) - logc(r);
      };
      d.at_zero = [](const EllipticParams& p) { return Endpoint{K::finite, 0.5 * p.B(), {}}; };
      d.at_one = [](const EllipticParams& p) {
        return Endpoint{K::finite, 0.5 * ramanujan_R(p.a, p.b), {}};
      };
      return d;
    case PropertyId::t418_2:
      d.name = "4.18(2): K + (1/r^2) log r'";
      d.direction = +1;
      d.constraint = [](const EllipticParams& p) {
        std::string base = zero_balanced_two_param(p);
        if (!base.empty()) return base;
        if (!(p.a < 1.0 && p.b < 1.0)) return std::string("requires a,b in (0,1)");
        return std::string{};
      };
      d.eval = [](const EllipticParams& p, double r) {
        return K_abc(p, r) - logc(r) / (r * r);
      };
      d.at_zero = [](const EllipticParams& p) {
        return Endpoint{K::finite, 0.5 * (p.B() - 1.0), {}};
      };
      d.at_one = [](const EllipticParams& p) {
        return Endpoint{K::finite, 0.5 * ramanujan_R(p.a, p.b), {}};
      };
      return d;
    case PropertyId::t418_3:
      d.name = "4.18(3): r^2 K / log(1/r')";
      d.direction = -1;
      d.constraint = [](const EllipticParams& p) {
        std::string base = zero_balanced_two_param(p);
        if (!base.empty()) return base;
        if (!(p.a < 1.0 && p.b < 1.0)) return std::string("requires a,b in (0,1)");
        return std::string{};
      };
      d.eval = [](const EllipticParams& p, double r) {
        return r * r * K_abc(p, r) / logc(r);
      };
      d.at_zero = [](const EllipticParams& p) { return Endpoint{K::finite, p.B(), {}}; };
      d.at_one = [](const EllipticParams& p) {
        Endpoint e{K::finite, 1.0, {}};
        const double R = ramanujan_R(p.a, p.b);
        EllipticParams pc = p;
        e.asymptotic_form = [pc, R](double r) {
          return (r * r * K_abc(pc, r) - 0.5 * R) / logc(r);
        };
        return e;
      };
      return d;
    case PropertyId::t418_4:
      d.name = "4.18(4): K / log(e^{R/2}/r')";
      d.direction = -1;
      d.constraint = zero_balanced_two_param;
      d.eval = [](const EllipticParams& p, double r) {
        const double R = ramanujan_R(p.a, p.b);
        return K_abc(p, r) / (0.5 * R + logc(r));
      };
      d.at_zero = [](const EllipticParams& p) {
        return Endpoint{K::finite, p.B() / ramanujan_R(p.a, p.b), {}};
      };
      d.at_one = [](const EllipticParams&) { return Endpoint{K::finite, 1.0, {}}; };
      return d;

    case PropertyId::t420_1:
      d.name = "4.20(1): r' K";
      d.direction = -1;
      d.constraint = [](const EllipticParams& p) {
        if (!(0.0 < p.a && p.a < p.c && 0.0 < p.b && p.b < p.c))
          return std::string("requires 0 < a,b < c");
        if (!(2.0 * p.a * p.b < p.c && p.c <= p.a + p.b + 1e-12 &&
              p.a + p.b < p.c + 0.5))
          return std::string("requires 2ab < c <= a+b < c + 1/2");
        if (!p.kdef_valid) return std::string("requires the K-definition regime");
        return std::string{};
      };
      d.eval = [](const EllipticParams& p, double r) {
        return std::sqrt((1.0 - r) * (1.0 + r)) * K_abc(p, r);
      };
      d.at_zero = [](const EllipticParams& p) { return Endpoint{K::finite, 0.5 * p.B(), {}}; };
      d.at_one = [](const EllipticParams& p) { return Endpoint{K::zero, 0.5 * p.B(), {}}; };
      return d;
    case PropertyId::t420_2:
      d.name = "4.20(2): r'^(2(a+b-c))(K-E)/r^2";
      d.direction = +1;
      d.constraint = [](const EllipticParams& p) {
        if (!(0.0 < p.a && p.a < p.c && 0.0 < p.b && p.b < p.c &&
              p.c < p.a + p.b - 1e-12))
          return std::string("requires 0 < a,b < c < a+b");
        if (!p.kdef_valid) return std::string("requires the K-definition regime");
        return std::string{};
      };
      d.eval = [](const EllipticParams& p, double r) {
        const double rp2 = (1.0 - r) * (1.0 + r);
        return std::pow(rp2, p.a + p.b - p.c) *
               (K_abc(p, r) - E_abc(p, r)) / (r * r);
      };
      d.at_zero = [](const EllipticParams& p) {
        return Endpoint{K::finite, p.b * p.B() / (2.0 * p.c), {}};
      };
      d.at_one = [](const EllipticParams& p) {
        return Endpoint{K::finite, 0.5 * beta(p.c, p.a + p.b - p.c), {}};
      };
      return d;
    case PropertyId::t420_3:
      d.name = "4.20(3): (K-E)/log(1/r')";
      d.direction = -1;
      d.constraint = [](const EllipticParams& p) {
        if (!(0.0 < p.a && p.a < 1.0 && 0.0 < p.b && p.b < 1.0))
          return std::string("requires 0 < a,b < 1");
        if (std::abs(p.c - p.a - p.b) > 1e-12) return std::string("requires c = a+b");
        if (!(p.a * (2.0 * p.b + 1.0) < p.b + 1.0 && p.b + 1.0 < 1.0 / p.a))
          return std::string("requires a(2b+1) < b+1 < 1/a");
        return std::string{};
      };
      d.eval = [](const EllipticParams& p, double r) {
        return (K_abc(p, r) - E_abc(p, r)) / logc(r);
      };
      d.at_zero = [](const EllipticParams& p) {
        return Endpoint{K::finite, p.b * p.B() / p.c, {}};
      };
      d.at_one = [](const EllipticParams& p) {
        Endpoint e{K::finite, 1.0, {}};
        // E(1) = 1/(2b) in the zero-balanced regime
        const double shift = 0.5 * ramanujan_R(p.a, p.b) - 0.5 / p.b;
        EllipticParams pc = p;
        e.asymptotic_form = [pc, shift](double r) {
          return (K_abc(pc, r) - E_abc(pc, r) - shift) / logc(r);
        };
        return e;
      };
      return d;

    case PropertyId::l425:
      d.name = "4.25: r K / artanh r";
      d.direction = -1;
      d.constraint = [](const EllipticParams& p) {
        if (!(0.0 < p.a && p.a < std::min(p.c, 1.0)))
          return std::string("requires 0 < a < min{c,1}");
        if (!(p.c <= p.a + 0.5 + 1e-12)) return std::string("requires c <= a + 1/2");
        if (std::abs(p.b - (p.c - p.a)) > 1e-12) return std::string("requires b = c-a");
        return std::string{};
      };
      d.eval = [](const EllipticParams& p, double r) {
        return r * K_abc(p, r) / std::atanh(r);
      };
      d.at_zero = [](const EllipticParams& p) { return Endpoint{K::finite, 0.5 * p.B(), {}}; };
      d.at_one = [](const EllipticParams& p) {
        Endpoint e{K::finite, 1.0, {}};
        const double R = ramanujan_R(p.a, p.b);
        EllipticParams pc = p;
        e.asymptotic_form = [pc, R](double r) {
          return (r * K_abc(pc, r) - 0.5 * R) / (std::atanh(r) - M_LN2);
        };
        return e;
      };
      return d;
  }
  throw DomainError("make_property: unknown id");
}

}  // namespace detail

inline const char* property_name(PropertyId id) {
  return detail::make_property(id).name;
}

// Default admissible triple per property: chosen so the r -> 1 power-law
// corrections clear the endpoint tolerance at the probe 1-1e-6.
inline EllipticParams default_property_params(PropertyId id) {
  switch (id) {
    case PropertyId::l416_f1:
    case PropertyId::l416_f4:
    case PropertyId::l416_f8:
    case PropertyId::l416_f12:
      return EllipticParams(0.7, 0.7, 0.75);
    case PropertyId::l416_f10:
      return EllipticParams(0.4, 0.5, 0.9);  // c = a+b branch, D = 1
    case PropertyId::l416_f13:
      return EllipticParams(0.5, 0.5, 1.0);  // classical: 3pi/8 -> 1
    case PropertyId::t418_1:
    case PropertyId::t418_2:
    case PropertyId::t418_3:
    case PropertyId::t418_4:
      return EllipticParams(1.0 / 3.0, 2.0 / 3.0, 1.0);
    case PropertyId::t420_1:
      return EllipticParams(0.5, 0.5, 1.0);
    case PropertyId::t420_2:
      return EllipticParams(0.8, 0.85, 0.9);
    case PropertyId::t420_3:
      return EllipticParams(0.3, 0.6, 0.9);
    case PropertyId::l425:
      return EllipticParams(0.4, 0.4, 0.8);
    default:
      return EllipticParams(0.4, 0.5, 0.8);
  }
}

// Verify one property on the given grid.  Throws PreconditionError when
// the parameter constraints fail (the constraint check is part of the
// contract); monotonicity/endpoint violations are reported, not thrown.
inline MonotoneReport verify_inequality(PropertyId id, const EllipticParams& p,
                                        const std::vector<double>& grid) {
  const detail::PropertyDef def = detail::make_property(id);
  MonotoneReport rep;
  rep.title = def.name;
  const std::string why = def.constraint(p);
  if (!why.empty())
    throw PreconditionError(std::string(def.name) + ": " + why);

  std::vector<double> vals;
  vals.reserve(grid.size());
  for (double r : grid) vals.push_back(def.eval(p, r));
  double scale = 0.0;
  for (double v : vals) scale = std::max(scale, std::abs(v));
  bool mono = true;
  for (std::size_t i = 0; i + 1 < vals.size(); ++i)
    if (def.direction * (vals[i + 1] - vals[i]) < -1e-11 * scale) mono = false;
  rep.check_true(def.direction > 0 ? "increasing on grid" : "decreasing on grid",
                 mono);

  if (def.log_convex_check) {
    bool convex = true;
    for (std::size_t i = 0; i + 2 < vals.size(); ++i) {
      const double l0 = std::log(vals[i]), l1 = std::log(vals[i + 1]),
                   l2 = std::log(vals[i + 2]);
      if (l0 + l2 - 2.0 * l1 < -1e-11) convex = false;
    }
    rep.check_true("log-convex on grid", convex);
  }

  const double r0 = 1e-4, r1 = 1.0 - 1e-6;
  auto probe = [&](const detail::Endpoint& ep, double r, const char* tag) {
    switch (ep.kind) {
      case detail::Endpoint::Kind::finite: {
        const double got = ep.asymptotic_form ? ep.asymptotic_form(r)
                                              : def.eval(p, r);
        std::string label = std::string(tag) +
                            (ep.asymptotic_form ? " limit (asymptotic form)"
                                                : " limit");
        rep.check_rel(label, got, ep.value, 1e-3);
        break;
      }
      case detail::Endpoint::Kind::zero: {
        const double got = def.eval(p, r);
        rep.add(std::string(tag) + " vanishes", std::abs(got) <= 0.02 * ep.value,
                got, 0.0, 0.02 * ep.value);
        break;
      }
      case detail::Endpoint::Kind::infinite: {
        // divergence evidence: beyond the last grid value and well past
        // the midrange (some items grow only like a small power of r')
        const double got = def.eval(p, r);
        const double mid = vals[vals.size() / 2];
        const double edge = vals.back();
        const bool diverging = std::abs(got) > 1.05 * std::abs(edge) &&
                               std::abs(got) > 1.5 * std::abs(mid);
        rep.add(std::string(tag) + " diverges", diverging, got, 0.0, 0.0);
        break;
      }
    }
  };
  probe(def.at_zero(p), r0, "r->0");
  probe(def.at_one(p), r1, "r->1");
  return rep;
}

inline std::vector<double> default_property_grid(std::size_t n = 50) {
  std::vector<double> g;
  g.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    g.push_back(0.02 + 0.96 * static_cast<double>(i) / static_cast<double>(n - 1));
  return g;
}

// The full 22-item catalogue with per-item default triples.
inline Report run_inequality_catalogue(std::size_t grid_n = 50) {
  Report rep;
  rep.title = "inequality catalogue";
  const auto grid = default_property_grid(grid_n);
  for (PropertyId id : all_property_ids()) {
    const EllipticParams p = default_property_params(id);
    rep.merge(verify_inequality(id, p, grid));
  }
  return rep;
}

}  // namespace gell
