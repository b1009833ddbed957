#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopflab {

enum class ErrorCode {
  field_mismatch,
  division_by_zero,
  dimension_mismatch,
  out_of_range,
  not_invertible,
  axiom_violation,
  prereq_violated,
  enumeration_too_large,
  missing_matrix,
  unsupported_field,
  parse_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it onto a report entry.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hopflab
