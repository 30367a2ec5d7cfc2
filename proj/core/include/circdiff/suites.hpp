#pragma once

// Verification suites: each check evaluates one identity on seeded random inputs and
// reports the worst residual against its tolerance.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "circdiff/numerics.hpp"
#include "circdiff/random.hpp"

namespace circdiff {

struct SuiteConfig {
  std::size_t grid = kDefaultGridSize;
  ExtrapolationConfig extrapolation{};
  std::uint64_t seed = kDefaultSeed;
};

struct CheckResult {
  std::string name;
  std::string identity;  // the relation being checked, in words
  double measured = 0.0;
  double bound = 0.0;
  bool at_least = false;  // pass when measured >= bound instead of measured <= bound
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

const std::vector<std::string>& suite_names();

// Throws InvalidInput for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteConfig& config = {});

}  // namespace circdiff
