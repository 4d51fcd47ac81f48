#pragma once

#include <stdexcept>
#include <string>

namespace evt {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated precondition or unusable input: bad arguments, parse failures,
/// empty tails. The CLI maps these to exit code 2.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The data admits no usable fit: degenerate moments, zero variance,
/// infeasible likelihood. The CLI maps these to exit code 3.
class EstimationError : public Error {
 public:
  using Error::Error;
};

/// Resampling produced too many unusable replicates. Exit code 3.
class BootstrapError : public Error {
 public:
  using Error::Error;
};

}  // namespace evt
