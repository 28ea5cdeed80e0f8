#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgrack {

// Exit codes: 0 success, 2 usage/format error, 3 mathematical violation.
// The star subcommand uses 0 = property holds, 1 = property fails, 2 = error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitStarFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolation = 3;

// Runs the command line (without argv[0]); structured JSON goes to out,
// human diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgrack
