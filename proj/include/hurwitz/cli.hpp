#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hurwitz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMathError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` includes the program name. Results go to `out`;
/// diagnostics (error name first) go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
