#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumprod::cli {

enum ExitCode : int { ok = 0, usage = 1, assertion_failed = 2, cap_exceeded = 3 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; a set path of "-" reads standard input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumprod::cli
