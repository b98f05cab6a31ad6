#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sedf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // counterexample found or verification failed
inline constexpr int kExitUsage = 2;    // usage or parse error

/// Runs one subcommand (verify, construct, exact, bounds, scan, family).
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sedf::cli
