#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitBudget = 2;

inline constexpr unsigned long long kDefaultSeed = 1;

// Parses and runs one command. Normal output goes to `out`, diagnostics and
// usage text to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jlab::cli
