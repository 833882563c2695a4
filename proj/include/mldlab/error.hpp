#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mldlab {

enum class ErrorKind {
  SyntaxError,
  UnknownVariable,
  EmptyGeneratorList,
  AllZeroGenerators,
  IrrationalBasePoint,
  PositiveDimensionalCosupport,
  InvalidFactor,
  PointNotOverOrigin,
  TooManyDivisorsThroughPoint,
  BudgetExceeded,
  NotResolved,
  UnknownDivisor,
  NonMonomialInput,
  ChartExpressionError,
  NotInScope,
  NotPlt,
  FactorCountMismatch,
  UnsupportedClassification,
  PointNotOnExceptionalLocus,
  InvalidArgument,
  InternalInvariant,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the engine carries a kind so the CLI can map it
/// onto an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Parse failure with the offending character offset.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::SyntaxError,
              "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace mldlab
