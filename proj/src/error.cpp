#include "skewfq/error.hpp"

namespace skewfq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::TwistMismatch: return "TwistMismatch";
    case ErrorKind::NonMonicDivisor: return "NonMonicDivisor";
    case ErrorKind::NonMonic: return "NonMonic";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::UnsupportedTwist: return "UnsupportedTwist";
    case ErrorKind::NotDuo: return "NotDuo";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotInvertibleAtRoot: return "NotInvertibleAtRoot";
    case ErrorKind::NotBracketPoly: return "NotBracketPoly";
    case ErrorKind::NotASubfield: return "NotASubfield";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace skewfq
