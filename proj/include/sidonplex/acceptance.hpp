#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sidonplex {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool ok = false;        // the checks themselves
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;

  bool passed() const { return ok && seconds <= limit_seconds; }
};

/// Runs acceptance criteria 1..14 in order; `progress` sees each result as it
/// completes. Randomized criteria draw from `seed`.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed,
                                            const std::function<void(const CriterionResult&)>& progress = {});

/// "PASS   3  name  (0.120 s / limit 10 s)  detail"; the elapsed time is
/// left out when `with_time` is false.
std::string format_result(const CriterionResult& r, bool with_time = true);

}  // namespace sidonplex
