#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace palsub::cli {

/// Exit status: 0 success, 1 domain error, 2 parse error.
enum ExitCode : int { kOk = 0, kDomainError = 1, kParseError = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace palsub::cli
