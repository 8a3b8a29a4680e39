#include "qvdp/error.hpp"

namespace qvdp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_dimension: return "invalid_dimension";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::invalid_params: return "invalid_params";
    case ErrorCode::truncation_failure: return "truncation_failure";
    case ErrorCode::solver_failure: return "solver_failure";
    case ErrorCode::multiplicity: return "multiplicity";
    case ErrorCode::step_size: return "step_size";
    case ErrorCode::instability: return "instability";
    case ErrorCode::ansatz_failure: return "ansatz_failure";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::config: return "config";
    case ErrorCode::io: return "io";
    case ErrorCode::sweep_failure: return "sweep_failure";
  }
  return "unknown";
}

}  // namespace qvdp
