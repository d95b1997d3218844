#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sccd {

enum class ErrorCode {
  invalid_design,
  not_bijective,
  not_circular,
  not_linear,
  bad_parameters,
  not_divisible,
  label_collision,
  not_expansion_set,
  missing_ub,
  no_outer_expansion_set,
  incompatible_k,
  glue_mismatch,
  glue_infeasible,
  not_disjoint_capable,
  disjoint_capable_check_failed,
  unknown_name,
  syntax_error,
  invariant_violation,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `line()` is non-zero only for
/// errors produced while parsing a design file.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace sccd
