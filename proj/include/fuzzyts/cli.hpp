#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace fuzzyts::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

// Runs one command. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fuzzyts::cli
