#include "valueset/error.hpp"

namespace valueset {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::PrimeTooSmall: return "PrimeTooSmall";
    case ErrorKind::DeskScaleExceeded: return "DeskScaleExceeded";
    case ErrorKind::ClauseTooLong: return "ClauseTooLong";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace valueset
