#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gapasym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

// Runs one command line (without the program name). The report goes to
// `out` or to the --output file; diagnostics go to `err` as one line.
// Exit 1 for usage and precondition errors, 2 for numerical failures and
// unwritable destinations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gapasym::cli
