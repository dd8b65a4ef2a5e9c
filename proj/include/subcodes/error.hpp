#pragma once

#include <stdexcept>
#include <string>

namespace subcodes {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition or argument violation (bad shapes, mixed fields, bad input).
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// 64-bit integer arithmetic would wrap.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

}  // namespace subcodes
