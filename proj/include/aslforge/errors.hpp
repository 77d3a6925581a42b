#pragma once

#include <stdexcept>
#include <string>

namespace aslforge {

/// Base class for every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (bad index, mismatched rings, bad input).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a Groebner basis was handed something else.
class NotGroebnerError : public Error {
 public:
  using Error::Error;
};

/// A straightening produced a non-standard monomial.
class StraighteningError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed. Never expected to fire.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace aslforge
