#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hessenpave::cli {

/// Exit codes: 0 success, 1 invalid input, 2 internal consistency failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInconsistent = 2;

inline constexpr unsigned long long kDefaultSeed = 20240611ULL;

/// Runs one command line (args exclude the program name). Output that would
/// go to a file with --output is written there instead of `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hessenpave::cli
