#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logsurf {

enum class ErrorCode {
  SingularMatrix,
  NotSymmetric,
  DimensionMismatch,
  DivisionByZero,
  ParseError,
  UnknownCurve,
  ContractedSupport,
  NotContractible,
  NotMinusOneCurve,
  BoundaryOutOfRange,
  NotLogResolution,
  NotConnected,
  NotNegativeDefinite,
  InvalidCurveData,
  NotNefOver,
  EmptyUniverse,
  InconsistentUniverse,
  NotBirationalRay,
  ContractionNotNegDef,
  NotGMRLC,
  NotComplete,
  NotPrimitive,
  NotToric,
  Internal,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace logsurf
