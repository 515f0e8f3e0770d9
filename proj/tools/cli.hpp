#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scindex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs one invocation. `args` excludes the program name. Input files named
/// "-" (the default) are read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace scindex::cli
