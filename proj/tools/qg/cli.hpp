#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qg::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qg::cli
