#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polyesf/partition.hpp"

namespace polyesf {

/// Scale knobs for the verification suite. Defaults match the full
/// acceptance scale.
struct VerifyOptions {
  long capacity = kDefaultEnumerationCapacity;
  uint64_t seed = 0x9E2026;

  int moment_instances = 50;      // random instances for the three-way check
  long mc_samples = 1'000'000;    // Monte Carlo draws for the spot values
  int orbit_total_max = 7;        // |n_vec| bound for the orbit-count oracle
  int pattern_total_max = 6;      // |n_vec| bound for the pattern inventory
  int pattern_points = 20;        // random evaluation points per n_vec
  int esf_n_max = 8;              // normalization / q=1 reduction bound
  int conditional_total_max = 7;  // |n_vec| bound for conditioning equivalence
  int consistency_n_max = 8;
  int cocycle_n_max = 6;
  long sampler_runs = 1'000'000;  // per parameter configuration
  int sampler_t_max = 5;
  double sampler_tv_bound = 0.01;
  int necklace_total_max = 6;
  int shape_sum_total_max = 7;    // shape-sum identity bound
  int row_sum_n_max = 5;
  int symmetry_total_max = 5;
  int aggregation_n_max = 6;
  int split_instances = 200;
  int split_total_max = 12;

  /// Deliberately corrupts one computed value so the suite demonstrably
  /// fails (negative control).
  bool inject_fault = false;

  /// Clamp every enumeration bound to at most n.
  void clamp_total(int n);
};

struct CheckResult {
  std::string name;
  std::string statement;
  long instances = 0;
  bool passed = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 means no runtime budget
  std::string detail;           // counterexample / failure description
};

/// Check names in criterion order.
const std::vector<std::string>& check_names();

/// Run a single named check.
CheckResult run_check(const std::string& name, const VerifyOptions& opts);

/// Run every check; `progress` (if set) is invoked after each one.
std::vector<CheckResult> run_all_checks(
    const VerifyOptions& opts,
    const std::function<void(const CheckResult&)>& progress = {});

}  // namespace polyesf
