#include "mckay/error.hpp"

namespace mckay {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::InvalidKind: return "InvalidKind";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace mckay
