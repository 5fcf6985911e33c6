#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asres::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

/// Environment variable that replaces the default prime; --prime wins over it.
inline constexpr const char* kPrimeEnv = "ASRES_PRIME";

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace asres::cli
