#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supergraphs::cli {

// Process exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

/// Runs the command line `args` (args[0] is the program name) writing
/// reports to `out` and diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supergraphs::cli
