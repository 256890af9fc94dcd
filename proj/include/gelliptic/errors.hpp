// Copyright (c) 2026 the gelliptic authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace gell {

// Base class for all numerical-contract violations thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument hit a pole of the gamma family (non-positive integer within 1e-12).
class PoleError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Result exceeds the representable double range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An iterative scheme (series, root finder, Newton) hit its cap.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

// F(a,b;c;1) requested with c <= a+b.
class DivergesAtOne : public Error {
 public:
  using Error::Error;
};

// K_{a,b,c}(1) = infinity; reported as an error value so callers must branch.
class InfinityAtOne : public Error {
 public:
  using Error::Error;
};

// Target value outside the range of an invertible monotone function.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

// Parameter constraints of a stated property are not met.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Coefficient sequences of mismatched/insufficient length.
class LengthError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature could not reach the requested tolerance.
class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

// Integration path configuration the branch rules cannot handle.
class BranchError : public Error {
 public:
  using Error::Error;
};

// Derived quadrilateral angles violate the solver's hypotheses.
class AngleConstraintError : public Error {
 public:
  using Error::Error;
};

// arg(A-1) disagrees with arg(L); the real-part reduction would be invalid.
class PhaseMismatch : public Error {
 public:
  using Error::Error;
};

// Inversion target lies outside the image quadrilateral.
class OutsideImage : public Error {
 public:
  using Error::Error;
};

}  // namespace gell
