#pragma once

// Domain error types shared across the library. Errors that carry structured
// payloads (non-unique tropical eigenvectors, fiber rejections) live next to
// the types they carry.

#include <stdexcept>
#include <string>

namespace pairrank {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An entry that must be strictly positive is not.
class NonPositiveEntry : public Error {
 public:
  using Error::Error;
};

// exp() of the requested argument would leave double range; the caller must
// use the log-domain code paths instead.
class OverflowRisk : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& msg, double residual_achieved, int iterations_run)
      : Error(msg), residual(residual_achieved), iterations(iterations_run) {}

  double residual;
  int iterations;
};

// kleene_star precondition violated: the matrix has a cycle of positive mean.
class PositiveCycle : public Error {
 public:
  using Error::Error;
};

// Perturbation bound requested outside its hypothesis (rho >= 1/2).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class MissingObjective : public Error {
 public:
  using Error::Error;
};

// A decomposition of a solver's own output failed its membership test; this
// signals a bug, not bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pairrank
