#pragma once

#include <cstdint>
#include <string>

namespace qpredict::app {

enum class Suite { Results12, Averages, Qkd };

Suite parse_suite(const std::string& name);

struct OracleSummary {
  std::string suite;
  int n = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  int failures = 0;
  bool passed = false;
};

inline constexpr int kOracleGrid = 2000;

// results12: |analytic - brute force| for both Bayes risk and inference variance, 1e-8.
// averages:  relative deviation of the closed-form averages from sphere quadrature, 2e-3;
//            Bayes states outside the closed-form regime are skipped.
// qkd:       k_bb84 - k_star_opt must not exceed 1e-9.
// State i is random_state(seed + i); its direction comes from mt19937_64(seed + i).
OracleSummary run_oracle(Suite suite, int n, std::uint64_t seed, int quad_n = 200000);

}  // namespace qpredict::app
