// verify.hpp
// Randomized cross-validation suites behind the `verify` CLI command:
// closed forms against the matrix-exponential oracle, the product-state
// measurement criterion against the probe and mutual-information routes,
// metric monotonicity under local channels, and measurement monogamy.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qagent {

struct SuiteCheck {
  std::string suite;
  std::string name;
  bool passed = false;
  int cases = 0;
  double worst = 0.0;  // worst residual / tightest margin seen, check-specific
};

std::vector<SuiteCheck> verify_analytic_vs_oracle(std::uint64_t seed, int pairs = 50);
std::vector<SuiteCheck> verify_theorem1(std::uint64_t seed, int gadgets = 200);
std::vector<SuiteCheck> verify_monotonicity(std::uint64_t seed, int pairs = 100);
std::vector<SuiteCheck> verify_monogamy(std::uint64_t seed, int gadgets = 200);

// All four suites at their default sizes.
std::vector<SuiteCheck> run_all_verifications(std::uint64_t seed);

bool all_passed(const std::vector<SuiteCheck>& checks);

}  // namespace qagent
