// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace gell {

// One verified assertion: named, with the observed and expected quantities
// kept for diagnostics. Verification suites collect these instead of
// throwing, so a single run reports every violation.
struct Check {
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool passed, double observed = 0.0,
           double expected = 0.0, double tolerance = 0.0) {
    checks.push_back(Check{std::move(name), passed, observed, expected, tolerance});
  }

  // |observed - expected| <= tol
  void check_abs(std::string name, double observed, double expected, double tol) {
    const bool ok = std::abs(observed - expected) <= tol;
    add(std::move(name), ok, observed, expected, tol);
  }

  // |observed - expected| <= tol * |expected|
  void check_rel(std::string name, double observed, double expected, double tol) {
    const bool ok = std::abs(observed - expected) <= tol * std::abs(expected);
    add(std::move(name), ok, observed, expected, tol);
  }

  void check_true(std::string name, bool ok) { add(std::move(name), ok); }

  void merge(const Report& other) {
    for (const auto& c : other.checks) {
      Check tagged = c;
      if (!other.title.empty()) tagged.name = other.title + ": " + c.name;
      checks.push_back(std::move(tagged));
    }
  }

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.passed) ++n;
    return n;
  }

  std::string to_text() const {
    std::string out;
    char line[256];
    for (const auto& c : checks) {
      std::snprintf(line, sizeof(line), "[%s] %s (got %.15g, want %.15g, tol %.3g)\n",
                    c.passed ? "pass" : "FAIL", c.name.c_str(), c.observed,
                    c.expected, c.tolerance);
      out += line;
    }
    return out;
  }
};

// Result of a monotonicity verification: the grid scan plus endpoint checks.
using MonotoneReport = Report;

}  // namespace gell
