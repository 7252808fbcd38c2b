#include "omega/error.hpp"

namespace omega {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OversizeRequest: return "OversizeRequest";
    case ErrorCode::AmbientViolation: return "AmbientViolation";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::UnsupportedPattern: return "UnsupportedPattern";
    case ErrorCode::DepthTooLarge: return "DepthTooLarge";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::WeightSum: return "WeightSum";
    case ErrorCode::UnsupportedSchedule: return "UnsupportedSchedule";
    case ErrorCode::SyndeticCenterNonEmpty: return "SyndeticCenterNonEmpty";
    case ErrorCode::Indeterminate: return "Indeterminate";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::ConfigViolatesGrowth: return "ConfigViolatesGrowth";
    case ErrorCode::AmbientTooSmall: return "AmbientTooSmall";
    case ErrorCode::NotProperSubset: return "NotProperSubset";
    case ErrorCode::SlackTooTight: return "SlackTooTight";
    case ErrorCode::DepthCap: return "DepthCap";
    case ErrorCode::GrowthViolated: return "GrowthViolated";
    case ErrorCode::BoundaryValue: return "BoundaryValue";
    case ErrorCode::DegenerateObservable: return "DegenerateObservable";
    case ErrorCode::NotAPseudoOrbit: return "NotAPseudoOrbit";
    case ErrorCode::PseudoOrbitTooLoose: return "PseudoOrbitTooLoose";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace omega
