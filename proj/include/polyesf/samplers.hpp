#pragma once

#include "polyesf/esf.hpp"
#include "polyesf/random.hpp"

namespace polyesf {

/// Sampler-side parameters; converted to floating point once on entry.
struct SamplerParams {
  double theta = 1.0;
  std::vector<double> p;

  SamplerParams(double theta, std::vector<double> p);
  static SamplerParams from_exact(const EsfParams& params);
  int q() const { return static_cast<int>(p.size()); }
};

/// Urn with a cube of mass theta and unit-mass labelled colored balls.
struct UrnState {
  SamplerParams params;
  std::vector<std::vector<int>> label_counts;  // label -> per-color ball counts
  std::vector<int> ball_labels;                // one entry per ball drawn so far

  explicit UrnState(SamplerParams params);
  int time() const { return static_cast<int>(ball_labels.size()); }
  int labels() const { return static_cast<int>(label_counts.size()); }
};

/// One drawing: the cube (probability theta/(theta+t)) opens a new label,
/// otherwise a uniformly chosen ball's label receives one more ball; the new
/// ball's color is an independent categorical draw.
void hoppe_step(UrnState& state, RandomSource& rng);

/// The colored partition "per-label color counts" after T steps.
ColoredPartition sample_hoppe_partition(int T, const SamplerParams& params,
                                        RandomSource& rng);

/// Restaurant occupancy for the Chinese-restaurant variant: customer j
/// joins each earlier customer's table with probability 1/(j-1+theta) and
/// opens a new table with probability theta/(j-1+theta); every customer
/// orders one of q menus independently. Its agreement with the urn process
/// is established empirically by the verification suite, not asserted
/// algebraically anywhere in the library.
struct CrpState {
  SamplerParams params;
  std::vector<std::vector<int>> tables;  // table -> per-menu counts
  std::vector<int> table_of;             // customer -> table

  explicit CrpState(SamplerParams params);
  int time() const { return static_cast<int>(table_of.size()); }
};

/// Seat one customer and record their menu choice.
void crp_step(CrpState& state, RandomSource& rng);

/// Per-table menu counts after T customers.
ColoredPartition sample_crp_partition(int T, const SamplerParams& params,
                                      RandomSource& rng);

/// Random permutation with probability proportional to theta^(#cycles):
/// element j starts a new cycle with probability theta/(j-1+theta), else is
/// inserted after a uniformly chosen earlier element.
Permutation sample_theta_biased_permutation(int n, double theta, RandomSource& rng);

struct EmpiricalHistogram {
  std::map<ColoredPartition, long> counts;
  long runs = 0;
};

/// Total-variation distance between the empirical law and an exact one;
/// support atoms never observed contribute their full exact mass.
double total_variation(const EmpiricalHistogram& empirical, const ExactDistribution& exact);

}  // namespace polyesf
