#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plateau {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the CLI on args (args[0] is the program name) writing to out/err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plateau
