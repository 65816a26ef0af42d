#pragma once

#include <stdexcept>
#include <string>

namespace bracoid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong dimensions, out-of-range indices, inconsistent fields.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Unreadable manifest or scalar text. The message carries the location.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation refused because a named hypothesis does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold under verified hypotheses failed. This points at
/// the library, not at the instance.
class KernelBug : public Error {
 public:
  explicit KernelBug(const std::string& what) : Error("kernel bug: " + what) {}
};

/// A configured size bound (dimension cap, enumeration order) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace bracoid
