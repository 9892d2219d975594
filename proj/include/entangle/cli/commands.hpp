#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entangle::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSeparableOrUndetermined = 0,
  kEntangledCertified = 1,
  kInputError = 2,
};

/// Parses `args` (without the program name) and dispatches to a subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entangle::cli
