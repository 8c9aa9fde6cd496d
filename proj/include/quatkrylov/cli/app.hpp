#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quatkrylov::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitNotConverged = 2;
inline constexpr int kExitInputError = 3;

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Help text of the top level and of every subcommand, in a fixed order.
std::string full_help();

}  // namespace quatkrylov::cli
