#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lowreg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or precondition violation detected before compute.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must share a discretization do not.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

/// The numerical solution left the admissible range (non-finite values or
/// amplitude above the blow-up threshold). Carries the failing step index
/// once known; -1 while the error is still inside a single step.
class BlowUpError : public Error {
 public:
  explicit BlowUpError(const std::string& what, long step = -1)
      : Error(what), step_(step) {}
  long step() const noexcept { return step_; }

 private:
  long step_;
};

/// The exact nonlinear subflow u / (1 + i mu tau u) hit its pole.
class SingularSubstepError : public BlowUpError {
 public:
  using BlowUpError::BlowUpError;
};

}  // namespace lowreg
