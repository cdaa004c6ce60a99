#pragma once

#include <stdexcept>
#include <string>

namespace boostlab {

/// Base class for all boostlab errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration: bad option values, malformed config files,
/// incompatible option combinations. CLI exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Problems with input data: missing files, malformed CSV rows,
/// unresolvable columns, degenerate datasets. CLI exit code 2.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Failures while fitting a model: degenerate reweighting, zero accepted
/// rounds, unusable weak learners. CLI exit code 3.
class TrainingError : public Error {
 public:
  using Error::Error;
};

}  // namespace boostlab
