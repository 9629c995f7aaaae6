#include "polyesf/samplers.hpp"

#include <algorithm>
#include <cmath>

namespace polyesf {

SamplerParams::SamplerParams(double theta_in, std::vector<double> p_in)
    : theta(theta_in), p(std::move(p_in)) {
  if (theta <= 0.0) throw std::invalid_argument("SamplerParams: theta must be positive");
  if (p.empty()) throw std::invalid_argument("SamplerParams: p must be nonempty");
  double total = 0.0;
  for (double pj : p) {
    if (pj < 0.0) throw std::invalid_argument("SamplerParams: p entries must be nonnegative");
    total += pj;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("SamplerParams: p must sum to 1");
}

SamplerParams SamplerParams::from_exact(const EsfParams& params) {
  std::vector<double> p(params.p.size());
  for (size_t j = 0; j < p.size(); ++j) p[j] = to_double(params.p[j]);
  return SamplerParams(to_double(params.theta), std::move(p));
}

UrnState::UrnState(SamplerParams params_in) : params(std::move(params_in)) {}

namespace {

int draw_color(const SamplerParams& params, RandomSource& rng) {
  double u = rng.uniform01();
  for (int j = 0; j + 1 < params.q(); ++j) {
    if (u < params.p[j]) return j;
    u -= params.p[j];
  }
  return params.q() - 1;
}

ColoredPartition partition_from_groups(int q, const std::vector<std::vector<int>>& groups) {
  std::map<ColorVector, int> atoms;
  for (const auto& counts : groups) atoms[ColorVector(counts)] += 1;
  return ColoredPartition::from_map(q, atoms);
}

}  // namespace

void hoppe_step(UrnState& state, RandomSource& rng) {
  const int t = state.time();
  const double pick = rng.uniform01() * (state.params.theta + t);

  int label;
  if (pick < state.params.theta) {
    label = state.labels();
    state.label_counts.emplace_back(state.params.q(), 0);
  } else {
    const int ball = std::min(static_cast<int>(pick - state.params.theta), t - 1);
    label = state.ball_labels[ball];
  }

  const int color = draw_color(state.params, rng);
  state.label_counts[label][color] += 1;
  state.ball_labels.push_back(label);
}

ColoredPartition sample_hoppe_partition(int T, const SamplerParams& params,
                                        RandomSource& rng) {
  if (T < 0) throw std::invalid_argument("sample_hoppe_partition: T must be >= 0");
  UrnState state(params);
  for (int t = 0; t < T; ++t) hoppe_step(state, rng);
  return partition_from_groups(params.q(), state.label_counts);
}

CrpState::CrpState(SamplerParams params_in) : params(std::move(params_in)) {}

void crp_step(CrpState& state, RandomSource& rng) {
  const int j = state.time();
  const double pick = rng.uniform01() * (state.params.theta + j);
  int table;
  if (pick < state.params.theta) {
    table = static_cast<int>(state.tables.size());
    state.tables.emplace_back(state.params.q(), 0);
  } else {
    const int earlier = std::min(static_cast<int>(pick - state.params.theta), j - 1);
    table = state.table_of[earlier];
  }
  state.table_of.push_back(table);
  state.tables[table][draw_color(state.params, rng)] += 1;
}

ColoredPartition sample_crp_partition(int T, const SamplerParams& params,
                                      RandomSource& rng) {
  if (T < 0) throw std::invalid_argument("sample_crp_partition: T must be >= 0");
  CrpState state(params);
  for (int j = 0; j < T; ++j) crp_step(state, rng);
  return partition_from_groups(params.q(), state.tables);
}

Permutation sample_theta_biased_permutation(int n, double theta, RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("sample_theta_biased_permutation: n must be >= 1");
  if (theta <= 0.0)
    throw std::invalid_argument("sample_theta_biased_permutation: theta must be positive");

  std::vector<int> images(n);
  for (int j = 0; j < n; ++j) {
    const double pick = rng.uniform01() * (theta + j);
    if (pick < theta) {
      images[j] = j;  // new cycle
    } else {
      const int i = std::min(static_cast<int>(pick - theta), j - 1);
      images[j] = images[i];
      images[i] = j;
    }
  }
  return Permutation(std::move(images));
}

double total_variation(const EmpiricalHistogram& empirical, const ExactDistribution& exact) {
  if (empirical.runs < 1) throw std::invalid_argument("total_variation: no runs");
  const double runs = static_cast<double>(empirical.runs);

  double distance = 0.0;
  for (size_t i = 0; i < exact.size(); ++i) {
    auto it = empirical.counts.find(exact.support()[i]);
    const double freq = it == empirical.counts.end()
                            ? 0.0
                            : static_cast<double>(it->second) / runs;
    distance += std::abs(freq - to_double(exact.mass()[i]));
  }
  // Observed atoms outside the exact support count in full.
  for (const auto& [A, count] : empirical.counts)
    if (exact.mass_of(A) == 0) distance += static_cast<double>(count) / runs;
  return distance / 2.0;
}

}  // namespace polyesf
