#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mnm::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitNetwork = 4;
inline constexpr int kExitMismatch = 5;

inline constexpr const char* kOeisBaseUrl = "https://oeis.org";
inline constexpr const char* kOeisUrlEnv = "MNM_OEIS_URL";

/// Runs `mnm <args...>` in-process. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mnm::cli
