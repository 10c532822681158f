#include "ewm/error.hpp"

namespace ewm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeRootCoordinate: return "NegativeRootCoordinate";
    case ErrorCode::GeneratorsOutsideAmbient: return "GeneratorsOutsideAmbient";
    case ErrorCode::MissingOmegaBar: return "MissingOmegaBar";
    case ErrorCode::SupportOutsidePiL: return "SupportOutsidePiL";
    case ErrorCode::SupportClash: return "SupportClash";
    case ErrorCode::AlphaNotInLambda: return "AlphaNotInLambda";
    case ErrorCode::NoExpression: return "NoExpression";
    case ErrorCode::NoLift: return "NoLift";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::UniquenessViolated: return "UniquenessViolated";
    case ErrorCode::NotUnique: return "NotUnique";
    case ErrorCode::NoCandidate: return "NoCandidate";
    case ErrorCode::BijectionFailure: return "BijectionFailure";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

bool is_mathematical(ErrorCode code) {
  switch (code) {
    case ErrorCode::SupportClash:
    case ErrorCode::AlphaNotInLambda:
    case ErrorCode::NoExpression:
    case ErrorCode::NoLift:
    case ErrorCode::Inconsistent:
    case ErrorCode::UniquenessViolated:
    case ErrorCode::NotUnique:
    case ErrorCode::NoCandidate:
    case ErrorCode::BijectionFailure:
      return true;
    default:
      return false;
  }
}

}  // namespace ewm
