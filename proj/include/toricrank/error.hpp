#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input graph violates the simple/connected contract or could not be parsed.
class GraphError : public Error {
 public:
  enum class Kind { Loop, DuplicateEdge, Disconnected, Malformed, BadVertex, NotACycle };

  GraphError(Kind kind, const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        kind_(kind),
        line_(line) {}

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// A configured size guard (subset cap, LP variable cap, face cap, ...) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The requested degree bound is too small to certify the result.
class BoundTooSmall : public Error {
 public:
  using Error::Error;
};

/// Caller-supplied argument outside the operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A cross-check between two independent computations failed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
