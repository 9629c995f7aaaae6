#include "polyesf/esf.hpp"

#include <algorithm>
#include <numeric>

namespace polyesf {

EsfParams::EsfParams(BigRational theta_in, std::vector<BigRational> p_in)
    : theta(std::move(theta_in)), p(std::move(p_in)) {
  if (theta <= 0) throw std::invalid_argument("EsfParams: theta must be positive");
  if (p.empty()) throw std::invalid_argument("EsfParams: p must be nonempty");
  BigRational total = 0;
  for (const auto& pj : p) {
    if (pj < 0) throw std::invalid_argument("EsfParams: p entries must be nonnegative");
    total += pj;
  }
  if (total != 1) throw std::invalid_argument("EsfParams: p must sum to 1 exactly");
}

ExactDistribution ExactDistribution::from_map(
    const std::map<ColoredPartition, BigRational>& mass) {
  ExactDistribution d;
  BigRational total = 0;
  for (const auto& [A, m] : mass) {
    if (m < 0) throw std::invalid_argument("ExactDistribution: negative mass");
    if (m == 0) continue;
    d.support_.push_back(A);
    d.mass_.push_back(m);
    total += m;
  }
  if (total != 1)
    throw std::logic_error("ExactDistribution: masses must sum to 1 exactly");
  return d;
}

ExactDistribution ExactDistribution::point_mass(const ColoredPartition& A) {
  ExactDistribution d;
  d.support_.push_back(A);
  d.mass_.emplace_back(1);
  return d;
}

BigRational ExactDistribution::mass_of(const ColoredPartition& A) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), A);
  if (it != support_.end() && *it == A)
    return mass_[static_cast<size_t>(it - support_.begin())];
  return 0;
}

BigRational esf_mass(const ColoredPartition& A, const EsfParams& params) {
  if (A.q() != params.q()) throw std::invalid_argument("esf_mass: q mismatch");
  const std::vector<int> col = A.col();
  const int n = A.total();

  BigRational p_power = 1;
  for (int j = 0; j < A.q(); ++j)
    if (col[j] > 0) p_power *= rat_pow(params.p[j], static_cast<unsigned long>(col[j]));

  BigRational mass = BigRational(factorial(static_cast<unsigned long>(n))) /
                     pochhammer(params.theta, static_cast<unsigned long>(n));
  mass *= rat_pow(params.theta, static_cast<unsigned long>(A.size()));
  mass *= p_power / BigRational(vector_factorial(col));
  mass *= multinomial_coefficient(A);
  return mass;
}

ExactDistribution esf_distribution(int n, const EsfParams& params, long capacity) {
  std::map<ColoredPartition, BigRational> mass;
  for (const auto& A : enumerate_all_colored_partitions(n, params.q(), capacity))
    mass.emplace(A, esf_mass(A, params));
  return ExactDistribution::from_map(mass);
}

ExactDistribution esf_conditional(const std::vector<int>& n_vec, const BigRational& theta,
                                  long capacity) {
  if (theta <= 0) throw std::invalid_argument("esf_conditional: theta must be positive");
  const int n = std::accumulate(n_vec.begin(), n_vec.end(), 0);
  const BigRational normalizer = pochhammer(theta, static_cast<unsigned long>(n));

  std::map<ColoredPartition, BigRational> mass;
  for (const auto& A : enumerate_colored_partitions(n_vec, capacity))
    mass.emplace(A, rat_pow(theta, static_cast<unsigned long>(A.size())) *
                        multinomial_coefficient(A) / normalizer);
  return ExactDistribution::from_map(mass);
}

ExactDistribution theta_biased_pushforward(const std::vector<int>& n_vec,
                                           const BigRational& theta, const Coloring& c,
                                           int degree_bound) {
  if (theta <= 0)
    throw std::invalid_argument("theta_biased_pushforward: theta must be positive");
  const int n = std::accumulate(n_vec.begin(), n_vec.end(), 0);
  if (n > degree_bound)
    throw CapacityError("theta_biased_pushforward: degree bound exceeded");
  if (c.color_counts() != n_vec)
    throw std::invalid_argument("theta_biased_pushforward: coloring mismatch");

  std::map<ColoredPartition, BigRational> weight;
  BigRational total = 0;
  for_each_permutation(n, [&](const Permutation& pi) {
    const BigRational w =
        rat_pow(theta, static_cast<unsigned long>(pi.cycle_count()));
    weight[project_pi(pi, c)] += w;
    total += w;
  });

  const BigRational expected = pochhammer(theta, static_cast<unsigned long>(n));
  if (total != expected)
    throw std::logic_error(
        "theta_biased_pushforward: enumerated weight differs from (theta)_n");

  for (auto& [A, w] : weight) w /= total;
  return ExactDistribution::from_map(weight);
}

std::map<IntegerPartition, BigRational> shape_pushforward(const ExactDistribution& d) {
  std::map<IntegerPartition, BigRational> out;
  for (size_t i = 0; i < d.size(); ++i) out[shape(d.support()[i])] += d.mass()[i];
  return out;
}

ExactDistribution aggregation_pushforward(int n, const EsfParams& params,
                                          const DegeneracyMap& d, long capacity) {
  if (d.q != params.q())
    throw std::invalid_argument("aggregation_pushforward: q mismatch");

  const ExactDistribution source = esf_distribution(n, params, capacity);
  std::map<ColoredPartition, BigRational> pushed;
  for (size_t i = 0; i < source.size(); ++i)
    pushed[aggregate(source.support()[i], d)] += source.mass()[i];
  ExactDistribution result = ExactDistribution::from_map(pushed);

  const EsfParams merged(params.theta, d.apply(params.p));
  if (result != esf_distribution(n, merged, capacity))
    throw std::logic_error(
        "aggregation_pushforward: pushforward differs from the merged-parameter law");
  return result;
}

ExactDistribution deletion_kernel(const ColoredPartition& A) {
  const int n = A.total();
  if (n == 0) throw std::invalid_argument("deletion_kernel: empty partition");

  std::map<ColoredPartition, BigRational> mass;
  for (const auto& [a, mult] : A.parts()) {
    for (int j = 0; j < A.q(); ++j) {
      if (a.counts[j] == 0) continue;

      std::map<ColorVector, int> target;
      for (const auto& [b, bm] : A.parts()) target[b] = bm;
      target[a] -= 1;
      if (target[a] == 0) target.erase(a);
      if (a.length() > 1) {
        std::vector<int> reduced = a.counts;
        reduced[j] -= 1;
        target[ColorVector(std::move(reduced))] += 1;
      }
      mass[ColoredPartition::from_map(A.q(), target)] +=
          BigRational(a.counts[j] * mult) / n;
    }
  }
  return ExactDistribution::from_map(mass);
}

ExactDistribution kernel_pushforward(const ExactDistribution& d) {
  std::map<ColoredPartition, BigRational> mass;
  for (size_t i = 0; i < d.size(); ++i) {
    const ExactDistribution row = deletion_kernel(d.support()[i]);
    for (size_t r = 0; r < row.size(); ++r)
      mass[row.support()[r]] += d.mass()[i] * row.mass()[r];
  }
  return ExactDistribution::from_map(mass);
}

ExactDistribution kernel_power(const ColoredPartition& A, int m) {
  const int n = A.total();
  if (m < 0 || m > n) throw std::invalid_argument("kernel_power: m out of range");

  ExactDistribution d = ExactDistribution::point_mass(A);
  for (int level = n; level > m; --level) d = kernel_pushforward(d);
  return d;
}

bool verify_consistency(int n, const EsfParams& params, long capacity) {
  if (n < 1) throw std::invalid_argument("verify_consistency: n must be >= 1");
  const ExactDistribution level_n = esf_distribution(n, params, capacity);
  const ExactDistribution pushed = kernel_pushforward(level_n);
  return pushed == esf_distribution(n - 1, params, capacity);
}

BigRational classical_esf_mass(const IntegerPartition& lambda, const BigRational& theta) {
  if (theta <= 0) throw std::invalid_argument("classical_esf_mass: theta must be positive");
  const int n = lambda.n();
  return m2(lambda) * rat_pow(theta, static_cast<unsigned long>(lambda.parts())) /
         pochhammer(theta, static_cast<unsigned long>(n));
}

}  // namespace polyesf
