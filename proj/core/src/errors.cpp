#include "logsurf/errors.hpp"

namespace logsurf {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownCurve: return "UnknownCurve";
    case ErrorCode::ContractedSupport: return "ContractedSupport";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::NotMinusOneCurve: return "NotMinusOneCurve";
    case ErrorCode::BoundaryOutOfRange: return "BoundaryOutOfRange";
    case ErrorCode::NotLogResolution: return "NotLogResolution";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::InvalidCurveData: return "InvalidCurveData";
    case ErrorCode::NotNefOver: return "NotNefOver";
    case ErrorCode::EmptyUniverse: return "EmptyUniverse";
    case ErrorCode::InconsistentUniverse: return "InconsistentUniverse";
    case ErrorCode::NotBirationalRay: return "NotBirationalRay";
    case ErrorCode::ContractionNotNegDef: return "ContractionNotNegDef";
    case ErrorCode::NotGMRLC: return "NotGMRLC";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NotToric: return "NotToric";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace logsurf
