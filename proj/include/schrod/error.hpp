#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schrod {

enum class ErrorKind {
  SingularMatrix,
  FieldMismatch,
  DimensionMismatch,
  DivisionByZero,
  InvalidAlgebra,
  IntegralSpaceNotOneDimensional,
  UnsupportedSpec,
  RootOrderMismatch,
  InverseCheckFailed,
  NotIsomorphism,
  NotHopfMap,
  AlgebraMismatch,
  NotAlgebraMap,
  ParseError,
  LetterOutOfRange,
  ZeroLetter,
  BadParameter,
  ClosedFormMismatch,
  LengthMismatch,
  EnumerationTooLarge,
  SchemaError,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::IntegralSpaceNotOneDimensional: return "IntegralSpaceNotOneDimensional";
    case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorKind::RootOrderMismatch: return "RootOrderMismatch";
    case ErrorKind::InverseCheckFailed: return "InverseCheckFailed";
    case ErrorKind::NotIsomorphism: return "NotIsomorphism";
    case ErrorKind::NotHopfMap: return "NotHopfMap";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotAlgebraMap: return "NotAlgebraMap";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorKind::ZeroLetter: return "ZeroLetter";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ClosedFormMismatch: return "ClosedFormMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the kinds above, so
// callers (the CLI in particular) can map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace schrod
