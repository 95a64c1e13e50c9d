#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zkring::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailed = 2;

// Runs one command. args excludes the program name. Human-readable output
// goes to `out`, diagnostics to `err`; JSON only to the --out file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zkring::cli
