#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace etnc::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitError = 3;

// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Invariant checks of every module plus the bundled datasets. Returns the number of failures.
int run_selftest(const std::string& dataset_dir, std::ostream& out);

}  // namespace etnc::cli
