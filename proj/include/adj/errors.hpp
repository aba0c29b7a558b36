#pragma once

#include <stdexcept>
#include <string>

namespace adj {

// Base for every error raised by the library. The CLI maps ValidationError
// (and its subclasses) to exit code 1 and NumericalError to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument, out-of-range size, malformed input text.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A final state was requested for a function that is neither constant nor
// balanced.
class PromiseViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Eigensolver failure, norm drift, missing bracket in a time search.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Even/odd (or zero/nonzero) shot counts are exactly equal. Callers decide
// whether to draw more shots.
class TieError : public Error {
 public:
  using Error::Error;
};

}  // namespace adj
