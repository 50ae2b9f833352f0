#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vctk {

// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_cap_exceeded = 2;
inline constexpr int exit_usage = 64;
inline constexpr int exit_bad_input = 65;

/// Runs the tool on argv (argv[0] is the program name). Results go to `out`,
/// diagnostics to `err`.
int cli_run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace vctk
