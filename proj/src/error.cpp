#include "hopflab/error.hpp"

namespace hopflab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::field_mismatch: return "FieldMismatch";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::not_invertible: return "NotInvertible";
    case ErrorCode::axiom_violation: return "AxiomViolation";
    case ErrorCode::prereq_violated: return "PrereqViolated";
    case ErrorCode::enumeration_too_large: return "EnumerationTooLarge";
    case ErrorCode::missing_matrix: return "MissingMatrix";
    case ErrorCode::unsupported_field: return "UnsupportedField";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace hopflab
