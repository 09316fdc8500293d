#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domishold {

/// Exit codes of the command line tool.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs the `domishold` command line with `args` (program name excluded).
/// Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace domishold
