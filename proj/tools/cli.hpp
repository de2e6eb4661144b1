#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acewiki {

// Exit codes: 0 success, 1 content errors, 2 usage or I/O errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitContent = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acewiki
