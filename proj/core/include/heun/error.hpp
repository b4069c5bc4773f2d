#pragma once

#include <stdexcept>
#include <string>

namespace heun {

enum class ErrorCode {
  invalid_tuple,
  mixed_parity,
  precondition,
  pole_at_point,
  degenerate_point,
  singular_wronskian,
  obstructed_shift,
  internal_inconsistency,
  work_limit,
  unsupported,
  no_quasi_solvable_space,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace heun
