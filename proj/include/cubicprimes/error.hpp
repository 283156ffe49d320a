#pragma once

#include <stdexcept>
#include <string>

namespace cubic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A value does not fit the fixed-width integer types used internally.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A brute-force or table budget would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubic
