#pragma once

#include <stdexcept>
#include <string>

namespace langdual {

// Base for every error raised by the library. Callers that only need a
// message can catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied argument violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Group enumeration would exceed the configured size cap.
class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

// solve_mod_lattice was asked for a finite solution list but the solution
// set has positive-dimensional directions.
class InfiniteSolutionSet : public Error {
 public:
  using Error::Error;
};

// Internal consistency failure: an averaged invariant dimension came out
// non-integral. Always a bug.
class NonIntegralDimension : public Error {
 public:
  using Error::Error;
};

// Iterative eigensolver failed to reach its residual target.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace langdual
