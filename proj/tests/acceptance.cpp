#include <iostream>

#include "sidonplex/acceptance.hpp"

int main() {
  std::cout << "acceptance criteria (seed " << sidonplex::kDefaultSeed << ")\n";
  int failed = 0;
  sidonplex::run_acceptance(sidonplex::kDefaultSeed, [&](const sidonplex::CriterionResult& r) {
    std::cout << sidonplex::format_result(r) << std::endl;
    failed += !r.passed();
  });
  std::cout << (failed == 0 ? "all 14 criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
