#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trisim {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitPass = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
};

/// Runs one CLI invocation. args excludes the program name. Structured
/// results go to out as JSON; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trisim
