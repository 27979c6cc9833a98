#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace synchro::cli {

/// Exit codes of the command-line tool. Verdicts such as "not synchronizing"
/// are reported as data with exit code 0.
enum ExitCode : int {
    kSuccess = 0,
    kUsageOrParseError = 1,
    kGuardExceeded = 2,
};

/// Runs the tool on args (without the program name). `in` backs the "-" file
/// argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace synchro::cli
