#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs `umc <subcommand> ...`. `args` excludes the program name. Clique
/// streams and CSV go to files or `out`; summaries and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace umc::cli
