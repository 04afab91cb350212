#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace numbrix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `numbrix` tool. `args` excludes the program name.
// Results go to `out`; diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numbrix::cli
