#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permclass::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kResource = 2;
inline constexpr int kFailed = 3;

// args excludes the program name. Report output goes to `out` unless
// --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permclass::cli
