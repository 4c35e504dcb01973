#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ulis::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (args[0] is the program name). Machine
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ulis::cli
