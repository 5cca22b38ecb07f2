#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edslrs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitExhausted = 3;
inline constexpr int kExitVerifyFailed = 4;

// Parses args (without the program name), runs one subcommand, returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edslrs::cli
