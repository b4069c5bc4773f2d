#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heun::cli {

enum Exit : int {
  ok = 0,
  check_failed = 1,
  usage = 2,
  library_error = 3,
};

/// Parses argv-style arguments (without the program name), runs the subcommand and
/// writes the report to out. Diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heun::cli
