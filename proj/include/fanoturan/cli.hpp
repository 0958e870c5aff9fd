#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace fanoturan {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitCapability = 3 };

/// Runs one command line (without the program name). "-" as a file argument reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fanoturan
