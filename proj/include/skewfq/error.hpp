#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewfq {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  InvalidArgument,
  NotInvertible,
  FieldMismatch,
  DivisionByZero,
  DegreeOverflow,
  RingMismatch,
  TwistMismatch,
  NonMonicDivisor,
  NonMonic,
  UnsupportedRing,
  UnsupportedTwist,
  NotDuo,
  ShapeMismatch,
  NotCoprime,
  NotInvertibleAtRoot,
  NotBracketPoly,
  NotASubfield,
  ParseError,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the expression and ring-spec parsers. `offset` is a byte offset
/// into the source string.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
      : Error(ErrorKind::ParseError, message), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

/// Runtime check of a mathematical identity the library relies on. A failure
/// is a library bug, never a user error.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorKind::InvariantViolation, what);
}

}  // namespace skewfq
