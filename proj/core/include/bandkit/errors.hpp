#pragma once

// Exception hierarchy shared by all bandkit components.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bandkit {

/// Base class for all bandkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An edge is malformed (e.g. a self-loop).
class InvalidEdge : public Error {
 public:
  using Error::Error;
};

/// A vertex or matrix index lies outside the valid range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A layout is not a bijection on 0..n-1 or does not match the graph size.
class InvalidLayout : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a connected graph was given a disconnected one.
class Disconnected : public Error {
 public:
  using Error::Error;
};

/// A parameter violates a documented precondition.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Two objects that must share a dimension do not (e.g. pattern vs layout).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A text input could not be parsed; carries the 1-based offending line.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A file is syntactically valid but of a kind this library does not handle.
class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

/// A bounded search exhausted its budget before reaching a verdict.
class Indeterminate : public Error {
 public:
  using Error::Error;
};

}  // namespace bandkit
