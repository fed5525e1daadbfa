// errors.hpp
//
// Exception hierarchy shared by the whole library. The CLI maps these to
// exit codes: domain/parse -> 2, numerical non-convergence -> 3.

#ifndef LERCH_ERRORS_HPP
#define LERCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lerch {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input: argument outside the documented domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Evaluation requested exactly at a pole (gamma at -n, zeta at s=1, ...).
struct PoleError : DomainError {
  explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

// The requested accuracy cannot be certified within the configured
// term/iteration caps.
struct PrecisionError : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

// ---- zero engine ----

struct BoundaryZeroError : Error {
  using Error::Error;
};

struct NonConvergence : Error {
  using Error::Error;
};

// Rectangle count requested with the pole s=1 inside (lambda = 1 case must
// be handled by the caller-aware path).
struct PoleInsideError : Error {
  using Error::Error;
};

struct CompletenessError : Error {
  using Error::Error;
};

struct CountNotOne : Error {
  using Error::Error;
};

struct QuadratureError : Error {
  using Error::Error;
};

// Muller iteration converged to a point outside its search box.
struct DriftError : Error {
  using Error::Error;
};

struct NoAnnulusFound : Error {
  using Error::Error;
};

}  // namespace lerch

#endif  // LERCH_ERRORS_HPP
