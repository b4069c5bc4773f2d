#include "heun/error.hpp"

namespace heun {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_tuple: return "invalid_tuple";
    case ErrorCode::mixed_parity: return "mixed_parity";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::pole_at_point: return "pole_at_point";
    case ErrorCode::degenerate_point: return "degenerate_point";
    case ErrorCode::singular_wronskian: return "singular_wronskian";
    case ErrorCode::obstructed_shift: return "obstructed_shift";
    case ErrorCode::internal_inconsistency: return "internal_inconsistency";
    case ErrorCode::work_limit: return "work_limit";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::no_quasi_solvable_space: return "no_quasi_solvable_space";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace heun
