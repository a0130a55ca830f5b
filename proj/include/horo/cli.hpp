#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace horo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs `horocorr` with args (without the program name). Results go to out
/// (or to --out), diagnostics to err. Returns the process exit code.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horo::cli
