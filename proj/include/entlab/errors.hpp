#pragma once

#include <stdexcept>
#include <string>

namespace entlab {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

class NonRealExpectationError : public Error {
 public:
  using Error::Error;
};

class InvalidWeightsError : public Error {
 public:
  using Error::Error;
};

class PositivityViolationError : public Error {
 public:
  using Error::Error;
};

class TraceNotOneError : public Error {
 public:
  using Error::Error;
};

class NotPositiveError : public Error {
 public:
  using Error::Error;
};

/// A square root of a negative argument in an as-printed formula.
class FormulaDomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedPairingError : public Error {
 public:
  using Error::Error;
};

class MissingParameterError : public Error {
 public:
  explicit MissingParameterError(const std::string& parameter)
      : Error("missing Hamiltonian parameter: " + parameter), parameter_(parameter) {}
  const std::string& parameter() const { return parameter_; }

 private:
  std::string parameter_;
};

/// Reference curve inconsistent with the numeric dynamics beyond a time rescale.
class CalibrationFailureError : public Error {
 public:
  CalibrationFailureError(const std::string& what, double best_kappa, double residual)
      : Error(what), best_kappa_(best_kappa), residual_(residual) {}
  double best_kappa() const { return best_kappa_; }
  double residual() const { return residual_; }

 private:
  double best_kappa_;
  double residual_;
};

/// Invalid user-facing configuration or input file (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure (CLI exit code 3).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace entlab
