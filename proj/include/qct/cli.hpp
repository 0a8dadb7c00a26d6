#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qct {

/// Exit status of a command.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qct
