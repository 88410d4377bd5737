#pragma once

#include <stdexcept>
#include <string>

namespace mopw {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or parameters outside the admissible range.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A defining linear system has no unique solution.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// Floating-point overflow or an iteration that failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mopw
