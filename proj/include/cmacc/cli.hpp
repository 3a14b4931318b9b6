#pragma once

// Command-line front end. Subcommands: construct, verify, build-pda,
// simulate, optimize, compare.
//
// Exit status: 0 success or valid, 1 verification failure, 2 usage or
// precondition error.

#include <iosfwd>
#include <string>
#include <vector>

namespace cmacc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmacc
