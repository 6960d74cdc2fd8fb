#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments or malformed configuration (CLI exit code 2).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed its internal tolerance (CLI exit code 3).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Two independent evaluation routes disagreed beyond tolerance.
class ConsistencyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace dunkl
