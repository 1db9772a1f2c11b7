#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgas::cli {

// Exit codes beyond the verdict mapping (0, 1, 2).
inline constexpr int kExitUsage = 64;    // bad flags, unreadable input, parse errors
inline constexpr int kExitDataErr = 65;  // batch finished but some lines failed
inline constexpr int kExitInternal = 70;

/// Runs the command line `args` (program name excluded). Stdin is only read
/// when an input path of "-" is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dgas::cli
