#include "polyesf/moments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace polyesf {

MomentProblem::MomentProblem(RationalMatrix S_in, std::vector<BigRational> alpha_in,
                             std::vector<int> n_in)
    : S(std::move(S_in)), alpha(std::move(alpha_in)), n_vec(std::move(n_in)) {
  if (static_cast<int>(alpha.size()) != S.rows)
    throw std::invalid_argument("MomentProblem: alpha length must match rows of S");
  if (static_cast<int>(n_vec.size()) != S.cols)
    throw std::invalid_argument("MomentProblem: n_vec length must match columns of S");
  for (const auto& a : alpha)
    if (a <= 0) throw std::invalid_argument("MomentProblem: alpha entries must be positive");
  for (int n : n_vec)
    if (n < 0) throw std::invalid_argument("MomentProblem: exponents must be nonnegative");
}

int MomentProblem::total_degree() const {
  return std::accumulate(n_vec.begin(), n_vec.end(), 0);
}

namespace {

BigRational alpha_total(const std::vector<BigRational>& alpha) {
  BigRational s = 0;
  for (const auto& a : alpha) s += a;
  return s;
}

// n_vec! / (|alpha|)_{|n|}
BigRational dirichlet_normalizer(const MomentProblem& p) {
  return BigRational(vector_factorial(p.n_vec)) /
         pochhammer(alpha_total(p.alpha), static_cast<unsigned long>(p.total_degree()));
}

}  // namespace

BigRational moment_via_theorem(const MomentProblem& p, long capacity) {
  return dirichlet_normalizer(p) * refined_cycle_index(p.n_vec, p.S, p.alpha, capacity);
}

BigRational gamma_moment(const MomentProblem& p, long capacity) {
  return BigRational(vector_factorial(p.n_vec)) *
         refined_cycle_index(p.n_vec, p.S, p.alpha, capacity);
}

BigRational moment_via_matrix_sum(const MomentProblem& p, long capacity) {
  const int k = p.k();
  const int q = p.q();

  // Columns of M are independent compositions of n_j into k parts; guard the
  // product of their counts before enumerating.
  BigInt combinations = 1;
  for (int j = 0; j < q; ++j)
    combinations *= binomial(static_cast<unsigned long>(p.n_vec[j] + k - 1),
                             static_cast<unsigned long>(k - 1));
  if (combinations > capacity)
    throw CapacityError("moment_via_matrix_sum: matrix enumeration too large");

  // Precompute S(i,j)^e / e! for all needed exponents.
  std::vector<std::vector<std::vector<BigRational>>> pow_over_fact(k);
  for (int i = 0; i < k; ++i) {
    pow_over_fact[i].resize(q);
    for (int j = 0; j < q; ++j) {
      pow_over_fact[i][j].resize(p.n_vec[j] + 1);
      for (int e = 0; e <= p.n_vec[j]; ++e)
        pow_over_fact[i][j][e] = rat_pow(p.S.at(i, j), static_cast<unsigned long>(e)) /
                                 BigRational(factorial(static_cast<unsigned long>(e)));
    }
  }

  std::vector<int> row_sums(k, 0);
  BigRational total = 0;

  // Depth-first over columns; `weight` carries prod S^M / M! so far.
  std::function<void(int, const BigRational&)> over_columns =
      [&](int j, const BigRational& weight) {
        if (j == q) {
          BigRational term = weight;
          for (int i = 0; i < k; ++i)
            term *= pochhammer(p.alpha[i], static_cast<unsigned long>(row_sums[i]));
          total += term;
          return;
        }
        // All splittings of n_vec[j] into k nonnegative entries.
        std::function<void(int, int, const BigRational&)> over_entries =
            [&](int i, int remaining, const BigRational& w) {
              if (i == k - 1) {
                row_sums[i] += remaining;
                over_columns(j + 1, w * pow_over_fact[i][j][remaining]);
                row_sums[i] -= remaining;
                return;
              }
              for (int e = 0; e <= remaining; ++e) {
                row_sums[i] += e;
                over_entries(i + 1, remaining - e, w * pow_over_fact[i][j][e]);
                row_sums[i] -= e;
              }
            };
        over_entries(0, p.n_vec[j], weight);
      };
  over_columns(0, BigRational(1));

  return dirichlet_normalizer(p) * total;
}

namespace {

struct RecursionKey {
  std::vector<int> n;       // remaining exponents
  std::vector<int> offset;  // integer vector added to alpha
  auto operator<=>(const RecursionKey&) const = default;
};

class MomentRecursion {
 public:
  explicit MomentRecursion(const MomentProblem& p) : p_(p) {}

  BigRational run() {
    std::vector<int> offset(p_.k(), 0);
    return dirichlet_normalizer(p_) * nu_tilde(p_.n_vec, offset);
  }

 private:
  // |n| nu~_n[S; alpha+d] = sum_{i,j} S(i,j) (alpha_i + d_i) nu~_{n-e_j}[S; alpha+d+e_i]
  BigRational nu_tilde(std::vector<int> n, std::vector<int> offset) {
    const int total = std::accumulate(n.begin(), n.end(), 0);
    if (total == 0) return 1;

    RecursionKey key{n, offset};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BigRational sum = 0;
    for (int j = 0; j < p_.q(); ++j) {
      if (n[j] == 0) continue;
      n[j] -= 1;
      for (int i = 0; i < p_.k(); ++i) {
        if (p_.S.at(i, j) == 0) continue;
        offset[i] += 1;
        BigRational sub = nu_tilde(n, offset);
        offset[i] -= 1;
        if (sub != 0)
          sum += p_.S.at(i, j) * (p_.alpha[i] + offset[i]) * sub;
      }
      n[j] += 1;
    }
    sum /= total;
    memo_.emplace(std::move(key), sum);
    return sum;
  }

  const MomentProblem& p_;
  std::map<RecursionKey, BigRational> memo_;
};

}  // namespace

BigRational moment_via_recursion(const MomentProblem& p) {
  return MomentRecursion(p).run();
}

bool multinomial_split_check(const std::vector<int>& v, int m) {
  const int total = std::accumulate(v.begin(), v.end(), 0);
  if (m < 0 || m > total)
    throw std::invalid_argument("multinomial_split_check: m out of range");

  const BigInt lhs = multinomial(v);
  BigInt rhs = 0;
  std::vector<int> w(v.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t j, int remaining) {
    if (j == v.size()) {
      if (remaining != 0) return;
      std::vector<int> rest(v.size());
      for (size_t i = 0; i < v.size(); ++i) rest[i] = v[i] - w[i];
      rhs += multinomial(w) * multinomial(rest);
      return;
    }
    for (int e = 0; e <= std::min(v[j], remaining); ++e) {
      w[j] = e;
      rec(j + 1, remaining - e);
    }
    w[j] = 0;
  };
  rec(0, m);
  return lhs == rhs;
}

std::vector<double> sample_dirichlet(const std::vector<double>& alpha, RandomSource& rng) {
  std::vector<double> x(alpha.size());
  double total = 0.0;
  for (size_t i = 0; i < alpha.size(); ++i) {
    x[i] = rng.gamma(alpha[i]);
    total += x[i];
  }
  for (double& xi : x) xi /= total;
  return x;
}

namespace {

MonteCarloEstimate running_moments_estimate(
    const MomentProblem& p, long samples, RandomSource& rng,
    const std::function<std::vector<double>(RandomSource&)>& draw) {
  if (samples < 1) throw std::invalid_argument("monte carlo: samples must be >= 1");

  const int k = p.k();
  const int q = p.q();
  std::vector<std::vector<double>> s(k, std::vector<double>(q));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < q; ++j) s[i][j] = to_double(p.S.at(i, j));

  double sum = 0.0, sum_sq = 0.0;
  for (long it = 0; it < samples; ++it) {
    const std::vector<double> x = draw(rng);
    double value = 1.0;
    for (int j = 0; j < q; ++j) {
      double dot = 0.0;
      for (int i = 0; i < k; ++i) dot += s[i][j] * x[i];
      for (int e = 0; e < p.n_vec[j]; ++e) value *= dot;
    }
    sum += value;
    sum_sq += value * value;
  }

  MonteCarloEstimate est;
  est.samples = samples;
  est.estimate = sum / static_cast<double>(samples);
  if (samples > 1) {
    const double var =
        std::max(0.0, (sum_sq - sum * sum / static_cast<double>(samples)) /
                          static_cast<double>(samples - 1));
    est.std_error = std::sqrt(var / static_cast<double>(samples));
  }
  return est;
}

}  // namespace

MonteCarloEstimate monte_carlo_moment(const MomentProblem& p, long samples,
                                      RandomSource& rng) {
  std::vector<double> alpha(p.alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i) alpha[i] = to_double(p.alpha[i]);
  return running_moments_estimate(
      p, samples, rng, [&](RandomSource& r) { return sample_dirichlet(alpha, r); });
}

MonteCarloEstimate monte_carlo_gamma_moment(const MomentProblem& p, long samples,
                                            RandomSource& rng) {
  std::vector<double> alpha(p.alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i) alpha[i] = to_double(p.alpha[i]);
  return running_moments_estimate(p, samples, rng, [&](RandomSource& r) {
    std::vector<double> eta(alpha.size());
    for (size_t i = 0; i < eta.size(); ++i) eta[i] = r.gamma(alpha[i]);
    return eta;
  });
}

}  // namespace polyesf
