#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sidonplex {

/// Exit codes: 0 success or "true", 1 a computed "false" / no solution,
/// 2 input or usage error.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInput = 2;

/// Runs one command, e.g. {"sidon", "verify", "0,2,7,8,11"}. argv[0] is the
/// program name.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace sidonplex
