#include "gradix/error.hpp"

namespace gradix {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::CharacteristicForbidden: return "CharacteristicForbidden";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::RadicalNotMaximal: return "RadicalNotMaximal";
    case ErrorCode::RadicalUncertified: return "RadicalUncertified";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::NotPositivelyGraded: return "NotPositivelyGraded";
    case ErrorCode::NotIrrelevantPrimary: return "NotIrrelevantPrimary";
    case ErrorCode::MissingBound: return "MissingBound";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorCode::NotStarArtinian: return "NotStarArtinian";
    case ErrorCode::NoNonzerodivisorFound: return "NoNonzerodivisorFound";
    case ErrorCode::ContainmentFailure: return "ContainmentFailure";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotMonomial: return "NotMonomial";
    case ErrorCode::TheoremContradiction: return "TheoremContradiction";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_scope_refusal(ErrorCode code) {
  switch (code) {
    case ErrorCode::CharacteristicForbidden:
    case ErrorCode::NotZeroDimensional:
    case ErrorCode::RadicalNotMaximal:
    case ErrorCode::RadicalUncertified:
    case ErrorCode::NotGraded:
    case ErrorCode::NotPositivelyGraded:
    case ErrorCode::NotIrrelevantPrimary:
    case ErrorCode::MissingBound:
    case ErrorCode::NotStarArtinian:
    case ErrorCode::NoNonzerodivisorFound:
    case ErrorCode::ContainmentFailure:
    case ErrorCode::CapExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace gradix
