#pragma once

#include <ostream>
#include <span>
#include <string>

namespace knapsack::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Returns 0 when every
/// verification passed, 1 when one failed (the report is still written),
/// 2 on usage or bounds errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace knapsack::cli
