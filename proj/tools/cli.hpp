#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subcubic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a verification did not hold
inline constexpr int kExitUsage = 2;

/// Entry point shared by main() and the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subcubic::cli
