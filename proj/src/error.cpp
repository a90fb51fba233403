#include "fss/error.hpp"

namespace fss {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InconsistentDims: return "InconsistentDims";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::RadicalNotNilpotent: return "RadicalNotNilpotent";
    case ErrorCode::NonSplitSimple: return "NonSplitSimple";
    case ErrorCode::ImageNotFull: return "ImageNotFull";
    case ErrorCode::NoIdealIdentity: return "NoIdealIdentity";
    case ErrorCode::NotNilpotentDefect: return "NotNilpotentDefect";
    case ErrorCode::LiftDiverged: return "LiftDiverged";
    case ErrorCode::DegenerateBasePoint: return "DegenerateBasePoint";
    case ErrorCode::SectionSingular: return "SectionSingular";
    case ErrorCode::MaxDepthExceeded: return "MaxDepthExceeded";
    case ErrorCode::TermBlowup: return "TermBlowup";
    case ErrorCode::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SyntaxError:
    case ErrorCode::InconsistentDims:
    case ErrorCode::FieldTooSmall:
    case ErrorCode::NotAHomomorphism:
      return true;
    default:
      return false;
  }
}

}  // namespace fss
