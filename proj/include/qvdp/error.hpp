#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qvdp {

enum class ErrorCode {
  invalid_dimension,
  index_out_of_range,
  dimension_mismatch,
  invalid_params,
  truncation_failure,
  solver_failure,
  multiplicity,
  step_size,
  instability,
  ansatz_failure,
  precondition,
  config,
  io,
  sweep_failure,
};

/// Stable snake_case name, used in CSV error columns and CLI messages.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace qvdp
