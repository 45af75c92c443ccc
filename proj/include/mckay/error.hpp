#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mckay {

enum class ErrorKind {
  InvalidParameter,
  InvalidKind,
  ZeroConstantTerm,
  NonUnitConstantTerm,
  NonIntegralResult,
  NotDivisible,
  TooSmall,
  NotIntegral,
  NotOrthonormal,
  AsymmetricAdjacency,
  DisconnectedGraph,
  DimensionMismatch,
  UnknownNode,
  ParseError,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace mckay
