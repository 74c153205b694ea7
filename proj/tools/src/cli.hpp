#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fivedual::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs one command line (argv[0] included) and writes the report to `out`
/// and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fivedual::cli
