#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace secpath::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_usage = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secpath::cli
