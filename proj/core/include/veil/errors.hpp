#pragma once

#include <stdexcept>
#include <string>

namespace veil {

// Base for all library errors. The CLI maps subclasses to distinct exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration, bad parameter ranges, malformed config keys.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Tensor/array shape disagreements.
class ShapeError : public Error {
public:
  using Error::Error;
};

// Missing labels, empty inputs, degenerate channels and similar data problems.
class DataError : public Error {
public:
  using Error::Error;
};

// Out-of-range timestep or class index.
class RangeError : public Error {
public:
  using Error::Error;
};

// Stage ordering violations and untrained-model dependencies.
class DependencyError : public Error {
public:
  using Error::Error;
};

// Checkpoint/config hash mismatches.
class IntegrityError : public Error {
public:
  using Error::Error;
};

// Mixed guidance configs inside one batch.
class BatchError : public Error {
public:
  using Error::Error;
};

// Mutual-information estimation failures (batch too small, ...).
class EstimationError : public Error {
public:
  using Error::Error;
};

// Empty or unusable evaluation input.
class EvalError : public Error {
public:
  using Error::Error;
};

// Non-finite values produced during sampling; records the offending step.
class DivergenceError : public Error {
public:
  DivergenceError(const std::string& msg, int step)
      : Error(msg + " (sampling step " + std::to_string(step) + ")"), step_(step) {}
  int step() const { return step_; }

private:
  int step_;
};

}  // namespace veil
