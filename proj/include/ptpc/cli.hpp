#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptpc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFormat = 3;

/// Runs one command line (without the program name). Output is buffered and
/// written to `out` only when the command completes; errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptpc
