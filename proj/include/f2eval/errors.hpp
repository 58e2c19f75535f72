#pragma once

#include <stdexcept>
#include <string>

namespace f2eval {

// Base class of every failure this library reports.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gamma or Pochhammer evaluation at a point where the value is infinite.
struct PoleError : Error {
  using Error::Error;
};

// Parameter degeneracy (gamma pole in a continuation coefficient) outside the
// generic, nonlogarithmic cases this library supports.
struct LogarithmicCaseError : Error {
  using Error::Error;
};

// Input outside the mathematical domain of the requested operation.
struct DomainError : Error {
  using Error::Error;
};

// A partial sum or term magnitude exceeded the overflow guard.
struct OverflowError : Error {
  using Error::Error;
};

// Term ratio requested at an index where the term is exactly zero.
struct ZeroTermError : Error {
  using Error::Error;
};

// Evaluation point lies on one of the singular curves x=0, y=0, x=1, y=1, x+y=1.
struct SingularCurveError : Error {
  using Error::Error;
};

// No series representation converges at the requested point.
struct NoValidSeriesError : Error {
  using Error::Error;
};

// The best available representation diverges and its error estimate exceeds
// the requested precision.
struct NonConvergenceError : Error {
  using Error::Error;
};

// A representation was forced at a point outside its region of convergence.
struct OutOfROCError : Error {
  using Error::Error;
};

// Finite-difference stencil leaves the region where one representation is valid.
struct StencilDomainError : Error {
  using Error::Error;
};

// Unrecognized series representation identifier.
struct UnknownIdError : Error {
  using Error::Error;
};

}  // namespace f2eval
