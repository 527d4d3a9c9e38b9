#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitPrecondition = 2;

/// Runs one command line (`args` excludes the program name). The report goes
/// to `out`, diagnostics to `err`. Exit codes: 0 success, 1 malformed or
/// invalid input, 2 a mathematical precondition does not hold.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfg::cli
