#include "polyesf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "polyesf/esf.hpp"
#include "polyesf/moments.hpp"
#include "polyesf/necklace.hpp"
#include "polyesf/samplers.hpp"

namespace polyesf {

void VerifyOptions::clamp_total(int n) {
  for (int* bound : {&orbit_total_max, &pattern_total_max, &esf_n_max,
                     &conditional_total_max, &consistency_n_max, &cocycle_n_max,
                     &sampler_t_max, &necklace_total_max, &shape_sum_total_max,
                     &row_sum_n_max, &symmetry_total_max,
                     &aggregation_n_max, &split_total_max})
    *bound = std::min(*bound, n);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

BigRational make_rat(long num, long den) {
  BigRational r(num);
  return r / BigRational(den);
}

BigRational random_rational(RandomSource& rng, long num_lo, long num_hi, long den_max) {
  const long num = num_lo + static_cast<long>(rng.uniform_below(
                                static_cast<uint64_t>(num_hi - num_lo + 1)));
  const long den = 1 + static_cast<long>(rng.uniform_below(static_cast<uint64_t>(den_max)));
  return make_rat(num, den);
}

RationalMatrix random_matrix(RandomSource& rng, int k, int q, long num_bound,
                             long den_max) {
  RationalMatrix S(k, q);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < q; ++j)
      S.at(i, j) = random_rational(rng, -num_bound, num_bound, den_max);
  return S;
}

std::vector<BigRational> random_alpha(RandomSource& rng, int k, long bound) {
  std::vector<BigRational> alpha(k);
  for (auto& a : alpha) a = random_rational(rng, 1, bound, bound);
  return alpha;
}

std::vector<int> random_composition(RandomSource& rng, int total, int q) {
  std::vector<int> n_vec(q, 0);
  int remaining = total;
  for (int j = 0; j + 1 < q; ++j) {
    n_vec[j] = static_cast<int>(rng.uniform_below(static_cast<uint64_t>(remaining + 1)));
    remaining -= n_vec[j];
  }
  n_vec[q - 1] = remaining;
  return n_vec;
}

std::vector<std::vector<int>> compositions(int total, int q) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(q, 0);
  std::function<void(int, int)> rec = [&](int j, int remaining) {
    if (j == q - 1) {
      cur[j] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[j] = v;
      rec(j + 1, remaining - v);
    }
  };
  rec(0, total);
  return out;
}

std::vector<BigRational> theta_grid() {
  return {make_rat(1, 2), BigRational(1), BigRational(2)};
}

// Two exact categorical parameters per color count.
std::vector<std::vector<BigRational>> p_grid(int q) {
  switch (q) {
    case 1:
      return {{BigRational(1)}};
    case 2:
      return {{make_rat(1, 2), make_rat(1, 2)}, {make_rat(1, 3), make_rat(2, 3)}};
    default:
      return {{make_rat(1, 2), make_rat(1, 3), make_rat(1, 6)},
              {make_rat(2, 5), make_rat(2, 5), make_rat(1, 5)}};
  }
}

// ---------------------------------------------------------------- checks

CheckResult check_moments(const VerifyOptions& opts) {
  CheckResult res{"moments",
                  "three-way exact agreement of the Dirichlet moment routes",
                  0, true, 0, 60, ""};
  RandomSource rng(opts.seed ^ 0x01);
  for (int i = 0; i < opts.moment_instances; ++i) {
    const int q = 1 + static_cast<int>(rng.uniform_below(3));
    const int k = 1 + static_cast<int>(rng.uniform_below(3));
    const int total = static_cast<int>(rng.uniform_below(6));
    const std::vector<int> n_vec = random_composition(rng, total, q);
    MomentProblem p(random_matrix(rng, k, q, 20, 20), random_alpha(rng, k, 20), n_vec);

    const BigRational zeta = moment_via_theorem(p, opts.capacity);
    const BigRational nu = moment_via_matrix_sum(p, opts.capacity);
    const BigRational rec = moment_via_recursion(p);
    ++res.instances;
    if (zeta != nu || zeta != rec) {
      res.passed = false;
      std::ostringstream os;
      os << "instance " << i << " n=" << vec_str(n_vec) << " k=" << k
         << ": theorem=" << to_string(zeta) << " matrix=" << to_string(nu)
         << " recursion=" << to_string(rec);
      res.detail = os.str();
      return res;
    }
  }
  return res;
}

CheckResult check_spot_values(const VerifyOptions& opts) {
  CheckResult res{"spot-values",
                  "E[x1^2] = 1/3 and E[x1 x2] = 1/6 under Dir(1,1), exact and Monte Carlo",
                  0, true, 0, 60, ""};

  // E[x1^2]: k=2, q=1, column (1,0); E[x1 x2]: k=2, q=2, identity columns.
  RationalMatrix S_sq(2, 1);
  S_sq.at(0, 0) = 1;
  MomentProblem square(S_sq, {BigRational(1), BigRational(1)}, {2});

  RationalMatrix S_cr(2, 2);
  S_cr.at(0, 0) = 1;
  S_cr.at(1, 1) = 1;
  MomentProblem cross(S_cr, {BigRational(1), BigRational(1)}, {1, 1});

  const std::vector<std::pair<const MomentProblem*, BigRational>> cases = {
      {&square, make_rat(1, 3)}, {&cross, make_rat(1, 6)}};

  for (const auto& [problem, expected] : cases) {
    ++res.instances;
    if (moment_via_theorem(*problem) != expected ||
        moment_via_matrix_sum(*problem) != expected ||
        moment_via_recursion(*problem) != expected) {
      res.passed = false;
      res.detail = "exact value mismatch for expected " + to_string(expected);
      return res;
    }
    // One retry absorbs the inherent Monte Carlo flake budget.
    bool mc_ok = false;
    for (uint64_t attempt = 0; attempt < 2 && !mc_ok; ++attempt) {
      RandomSource rng(opts.seed ^ (0x02 + attempt));
      const MonteCarloEstimate est = monte_carlo_moment(*problem, opts.mc_samples, rng);
      mc_ok = std::abs(est.estimate - to_double(expected)) <= 3.0 * est.std_error;
      if (!mc_ok && attempt == 1) {
        std::ostringstream os;
        os << "Monte Carlo " << est.estimate << " +- " << est.std_error
           << " vs exact " << to_string(expected);
        res.detail = os.str();
      }
    }
    if (!mc_ok) {
      res.passed = false;
      return res;
    }
  }
  return res;
}

CheckResult check_orbit_counts(const VerifyOptions& opts) {
  CheckResult res{"orbit-counts",
                  "exhaustive fiber sizes over the symmetric group equal Multi(A)",
                  0, true, 0, 120, ""};
  RandomSource rng(opts.seed ^ 0x03);

  for (int q = 1; q <= 3; ++q) {
    for (int total = 0; total <= opts.orbit_total_max; ++total) {
      for (const auto& n_vec : compositions(total, q)) {
        const Coloring canonical = Coloring::canonical_blocks(n_vec);
        std::vector<int> shuffled = canonical.color_of;
        for (size_t i = shuffled.size(); i > 1; --i)
          std::swap(shuffled[i - 1], shuffled[rng.uniform_below(i)]);
        const Coloring random_coloring(q, shuffled);

        const auto fibers = orbit_counts_bruteforce(n_vec, canonical, total);
        const auto fibers_random = orbit_counts_bruteforce(n_vec, random_coloring, total);
        const auto partitions = enumerate_colored_partitions(n_vec, opts.capacity);

        ++res.instances;
        if (fibers != fibers_random) {
          res.passed = false;
          res.detail = "fiber map depends on the coloring at n=" + vec_str(n_vec);
          return res;
        }
        if (fibers.size() != partitions.size()) {
          res.passed = false;
          res.detail = "fiber support differs from the partition family at n=" +
                       vec_str(n_vec);
          return res;
        }
        long covered = 0;
        for (const auto& [A, size] : fibers) {
          covered += size;
          if (multinomial_coefficient(A) != BigRational(size)) {
            res.passed = false;
            res.detail = "fiber size " + std::to_string(size) + " != Multi(" +
                         to_string(A) + ") at n=" + vec_str(n_vec);
            return res;
          }
        }
        if (BigRational(covered) != BigRational(factorial(total))) {
          res.passed = false;
          res.detail = "fibers do not partition the group at n=" + vec_str(n_vec);
          return res;
        }
      }
    }
  }
  return res;
}

CheckResult check_pattern_inventory(const VerifyOptions& opts) {
  CheckResult res{"pattern-inventory",
                  "permutation-sum inventory equals the refined cycle index",
                  0, true, 0, 0, ""};
  RandomSource rng(opts.seed ^ 0x04);

  for (int q = 1; q <= 3; ++q) {
    for (int total = 0; total <= opts.pattern_total_max; ++total) {
      for (const auto& n_vec : compositions(total, q)) {
        const Coloring coloring = Coloring::canonical_blocks(n_vec);
        for (int point = 0; point < opts.pattern_points; ++point) {
          const int k = 1 + static_cast<int>(rng.uniform_below(3));
          const RationalMatrix S = random_matrix(rng, k, q, 9, 9);
          const std::vector<BigRational> alpha = random_alpha(rng, k, 9);

          ++res.instances;
          const BigRational direct =
              pattern_inventory_bruteforce(n_vec, coloring, S, alpha, total);
          const BigRational indexed = refined_cycle_index(n_vec, S, alpha, opts.capacity);
          if (direct != indexed) {
            res.passed = false;
            res.detail = "mismatch at n=" + vec_str(n_vec) + " point " +
                         std::to_string(point) + ": " + to_string(direct) +
                         " != " + to_string(indexed);
            return res;
          }
        }
      }
    }
  }
  return res;
}

CheckResult check_normalization(const VerifyOptions& opts) {
  CheckResult res{"normalization", "polychromatic ESF masses sum to 1 exactly",
                  0, true, 0, 0, ""};
  bool fault_pending = opts.inject_fault;

  for (int q = 1; q <= 3; ++q) {
    std::vector<std::vector<ColoredPartition>> family(opts.esf_n_max + 1);
    for (int n = 0; n <= opts.esf_n_max; ++n)
      family[n] = enumerate_all_colored_partitions(n, q, opts.capacity);

    for (const auto& theta : theta_grid()) {
      for (const auto& p : p_grid(q)) {
        const EsfParams params(theta, p);
        for (int n = 0; n <= opts.esf_n_max; ++n) {
          BigRational total = 0;
          for (const auto& A : family[n]) total += esf_mass(A, params);
          if (fault_pending) {
            total += make_rat(1, 1000003);
            fault_pending = false;
          }
          ++res.instances;
          if (total != 1) {
            res.passed = false;
            res.detail = "sum over A of Esf mass = " + to_string(total) + " at n=" +
                         std::to_string(n) + " q=" + std::to_string(q) +
                         " theta=" + to_string(theta);
            return res;
          }
        }
      }
    }
  }
  return res;
}

CheckResult check_conditioning(const VerifyOptions& opts) {
  CheckResult res{"conditioning",
                  "theta-biased pushforward = conditional law = restricted law",
                  0, true, 0, 0, ""};
  RandomSource rng(opts.seed ^ 0x06);
  const std::vector<BigRational> thetas = {random_rational(rng, 1, 8, 8),
                                           random_rational(rng, 1, 8, 8)};

  for (int q = 1; q <= 3; ++q) {
    const std::vector<BigRational> p = p_grid(q).front();
    for (const auto& theta : thetas) {
      const EsfParams params(theta, p);
      for (int total = 0; total <= opts.conditional_total_max; ++total) {
        const ExactDistribution full = esf_distribution(total, params, opts.capacity);
        for (const auto& n_vec : compositions(total, q)) {
          const ExactDistribution cond = esf_conditional(n_vec, theta, opts.capacity);
          const ExactDistribution push = theta_biased_pushforward(
              n_vec, theta, Coloring::canonical_blocks(n_vec), total);

          ++res.instances;
          if (cond != push) {
            res.passed = false;
            res.detail = "pushforward differs from conditional at n=" + vec_str(n_vec) +
                         " theta=" + to_string(theta);
            return res;
          }

          // Restriction of the unconditional law to {col = n_vec}.
          BigRational event = 0;
          std::map<ColoredPartition, BigRational> restricted;
          for (size_t i = 0; i < full.size(); ++i) {
            if (full.support()[i].col() != n_vec) continue;
            restricted.emplace(full.support()[i], full.mass()[i]);
            event += full.mass()[i];
          }
          BigRational expected_event(multinomial(n_vec));
          for (int j = 0; j < q; ++j)
            if (n_vec[j] > 0)
              expected_event *= rat_pow(p[j], static_cast<unsigned long>(n_vec[j]));
          if (event != expected_event) {
            res.passed = false;
            res.detail = "event mass " + to_string(event) + " != " +
                         to_string(expected_event) + " at n=" + vec_str(n_vec);
            return res;
          }
          for (auto& [A, m] : restricted) m /= event;
          if (ExactDistribution::from_map(restricted) != cond) {
            res.passed = false;
            res.detail = "renormalized restriction differs at n=" + vec_str(n_vec);
            return res;
          }
        }
      }
    }
  }
  return res;
}

CheckResult check_consistency(const VerifyOptions& opts) {
  CheckResult res{"consistency",
                  "deletion kernel maps level n to level n-1; cocycle routes agree",
                  0, true, 0, 0, ""};

  for (int q = 1; q <= 3; ++q) {
    for (const auto& theta : theta_grid()) {
      for (const auto& p : p_grid(q)) {
        const EsfParams params(theta, p);
        for (int n = 1; n <= opts.consistency_n_max; ++n) {
          ++res.instances;
          if (!verify_consistency(n, params, opts.capacity)) {
            res.passed = false;
            res.detail = "level " + std::to_string(n) + " -> " + std::to_string(n - 1) +
                         " mismatch at q=" + std::to_string(q) +
                         " theta=" + to_string(theta);
            return res;
          }
        }
      }
    }
  }

  // Route independence of repeated deletion.
  RandomSource rng(opts.seed ^ 0x07);
  for (int q = 1; q <= 3; ++q) {
    for (int n = 2; n <= opts.cocycle_n_max; ++n) {
      const auto family = enumerate_all_colored_partitions(n, q, opts.capacity);
      for (int draw = 0; draw < 3; ++draw) {
        const ColoredPartition& A = family[rng.uniform_below(family.size())];
        for (int mid = 1; mid < n; ++mid) {
          for (int low = 0; low < mid; ++low) {
            const ExactDistribution direct = kernel_power(A, low);
            const ExactDistribution via_mid = kernel_power(A, mid);
            std::map<ColoredPartition, BigRational> mixed;
            for (size_t b = 0; b < via_mid.size(); ++b) {
              const ExactDistribution tail = kernel_power(via_mid.support()[b], low);
              for (size_t c = 0; c < tail.size(); ++c)
                mixed[tail.support()[c]] += via_mid.mass()[b] * tail.mass()[c];
            }
            ++res.instances;
            if (ExactDistribution::from_map(mixed) != direct) {
              res.passed = false;
              res.detail = "cocycle route through m=" + std::to_string(mid) +
                           " differs for A=" + to_string(A);
              return res;
            }
          }
        }
      }
    }
  }
  return res;
}

// Compact multiset encoding for the sampler histograms: one byte per group,
// high nibble color-0 count, low nibble color-1 count, bytes sorted
// descending. Valid for q = 2 and totals up to 8.
uint64_t encode_groups_q2(const std::vector<std::vector<int>>& groups) {
  uint64_t bytes[8];
  size_t used = 0;
  for (const auto& g : groups) {
    if (g[0] == 0 && g[1] == 0) continue;
    bytes[used++] = static_cast<uint64_t>(g[0] * 16 + g[1]);
  }
  std::sort(bytes, bytes + used, std::greater<>());
  uint64_t key = 0;
  for (size_t i = 0; i < used; ++i) key = (key << 8) | bytes[i];
  return key;
}

uint64_t encode_partition_q2(const ColoredPartition& A) {
  std::vector<std::vector<int>> groups;
  for (const auto& [a, mult] : A.parts())
    for (int r = 0; r < mult; ++r) groups.push_back(a.counts);
  return encode_groups_q2(groups);
}

CheckResult check_hoppe_marginal(const VerifyOptions& opts) {
  CheckResult res{"hoppe-marginal",
                  "urn and restaurant samplers match the exact law in total variation",
                  0, true, 0, 180, ""};
  if (opts.sampler_t_max > 8) {
    res.passed = false;
    res.detail = "sampler_t_max above the compact-encoding limit (8)";
    return res;
  }

  RandomSource master(opts.seed ^ 0x08);
  const int t_max = opts.sampler_t_max;

  for (const auto& theta : theta_grid()) {
    for (const auto& p : p_grid(2)) {
      const EsfParams exact_params(theta, p);
      const SamplerParams params = SamplerParams::from_exact(exact_params);

      // Exact marginals, encoded on the same key space.
      std::vector<std::map<uint64_t, double>> exact(t_max + 1);
      for (int t = 1; t <= t_max; ++t) {
        const ExactDistribution d = esf_distribution(t, exact_params, opts.capacity);
        for (size_t i = 0; i < d.size(); ++i)
          exact[t][encode_partition_q2(d.support()[i])] = to_double(d.mass()[i]);
      }

      for (int sampler = 0; sampler < 2; ++sampler) {
        RandomSource rng = master.split();
        std::vector<std::unordered_map<uint64_t, long>> hist(t_max + 1);
        for (long run = 0; run < opts.sampler_runs; ++run) {
          if (sampler == 0) {
            UrnState state(params);
            for (int t = 1; t <= t_max; ++t) {
              hoppe_step(state, rng);
              hist[t][encode_groups_q2(state.label_counts)] += 1;
            }
          } else {
            CrpState state(params);
            for (int t = 1; t <= t_max; ++t) {
              crp_step(state, rng);
              hist[t][encode_groups_q2(state.tables)] += 1;
            }
          }
        }

        const double runs = static_cast<double>(opts.sampler_runs);
        for (int t = 1; t <= t_max; ++t) {
          double tv = 0.0;
          for (const auto& [key, mass] : exact[t]) {
            auto it = hist[t].find(key);
            const double freq = it == hist[t].end() ? 0.0 : it->second / runs;
            tv += std::abs(freq - mass);
          }
          for (const auto& [key, count] : hist[t])
            if (!exact[t].count(key)) tv += count / runs;
          tv /= 2.0;

          ++res.instances;
          if (tv >= opts.sampler_tv_bound) {
            res.passed = false;
            std::ostringstream os;
            os << (sampler == 0 ? "hoppe" : "crp") << " TV " << tv << " at T=" << t
               << " theta=" << to_string(theta) << " p=(" << to_string(p[0]) << ","
               << to_string(p[1]) << ")";
            res.detail = os.str();
            return res;
          }
        }
      }
    }
  }
  return res;
}

CheckResult check_necklaces(const VerifyOptions& opts) {
  CheckResult res{"necklaces",
                  "necklace fiber sizes are integers, sum to |n|!, and rebuild Multi",
                  0, true, 0, 0, ""};

  for (int q = 1; q <= 3; ++q) {
    for (int total = 0; total <= opts.necklace_total_max; ++total) {
      for (const auto& n_vec : compositions(total, q)) {
        BigRational fiber_total = 0;
        for (const auto& A : enumerate_colored_partitions(n_vec, opts.capacity)) {
          ++res.instances;
          if (multinomial_via_necklaces(A, opts.capacity) != multinomial_coefficient(A)) {
            res.passed = false;
            res.detail = "necklace sum differs from Multi at A=" + to_string(A);
            return res;
          }
          // fiber sizes are asserted integral inside; accumulate the total
          for (const auto& N : necklace_multisets_for(A, opts.capacity))
            fiber_total += necklace_multiset_fiber_size(N, n_vec);
        }
        if (fiber_total != BigRational(factorial(total))) {
          res.passed = false;
          res.detail = "fiber sizes sum to " + to_string(fiber_total) + " != " +
                       std::to_string(total) + "! at n=" + vec_str(n_vec);
          return res;
        }
      }
    }
  }
  return res;
}

CheckResult check_identities(const VerifyOptions& opts) {
  CheckResult res{"identities",
                  "shape sums, row sums, color symmetry, aggregation, q=1 reduction",
                  0, true, 0, 0, ""};
  RandomSource rng(opts.seed ^ 0x0A);

  // Shape sums: grouping Multi(A) by shape gives M_2.
  for (int q = 1; q <= 3; ++q) {
    for (int total = 0; total <= opts.shape_sum_total_max; ++total) {
      for (const auto& n_vec : compositions(total, q)) {
        std::map<IntegerPartition, BigRational> by_shape;
        for (const auto& A : enumerate_colored_partitions(n_vec, opts.capacity))
          by_shape[shape(A)] += multinomial_coefficient(A);
        ++res.instances;
        for (const auto& lambda : enumerate_integer_partitions(total)) {
          auto it = by_shape.find(lambda);
          const BigRational got = it == by_shape.end() ? BigRational(0) : it->second;
          if (got != m2(lambda)) {
            res.passed = false;
            res.detail = "shape sum at n=" + vec_str(n_vec) + " differs from M_2";
            return res;
          }
        }
      }
    }
  }

  // Row sums: summing the refined index over all budgets of a given total
  // matches the classical index at the row-sum dummies.
  for (int q = 1; q <= 3; ++q) {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= opts.row_sum_n_max; ++n) {
        for (int instance = 0; instance < 2; ++instance) {
          const RationalMatrix S = random_matrix(rng, k, q, 9, 9);
          const std::vector<BigRational> alpha = random_alpha(rng, k, 9);

          BigRational lhs = 0;
          for (const auto& n_vec : compositions(n, q))
            lhs += refined_cycle_index(n_vec, S, alpha, opts.capacity);

          std::vector<BigRational> row_sums(k, BigRational(0));
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < q; ++j) row_sums[i] += S.at(i, j);
          std::vector<BigRational> t(n);
          for (int i = 1; i <= n; ++i) {
            BigRational ti = 0;
            for (int row = 0; row < k; ++row)
              ti += rat_pow(row_sums[row], static_cast<unsigned long>(i)) * alpha[row];
            t[i - 1] = ti;
          }

          ++res.instances;
          if (lhs != classical_cycle_index(n, t)) {
            res.passed = false;
            res.detail = "row-sum identity fails at n=" + std::to_string(n) +
                         " q=" + std::to_string(q) + " k=" + std::to_string(k);
            return res;
          }
        }
      }
    }
  }

  // Color symmetry: relabeling colors simultaneously in n_vec and the
  // columns of S leaves the refined index unchanged.
  for (int q = 2; q <= 3; ++q) {
    for (int total = 0; total <= opts.symmetry_total_max; ++total) {
      for (const auto& n_vec : compositions(total, q)) {
        const int k = 1 + static_cast<int>(rng.uniform_below(3));
        const RationalMatrix S = random_matrix(rng, k, q, 9, 9);
        const std::vector<BigRational> alpha = random_alpha(rng, k, 9);
        const BigRational base = refined_cycle_index(n_vec, S, alpha, opts.capacity);

        std::vector<int> perm(q);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<int> permuted_n(q);
          RationalMatrix permuted_S(k, q);
          for (int j = 0; j < q; ++j) {
            permuted_n[perm[j]] = n_vec[j];
            for (int i = 0; i < k; ++i) permuted_S.at(i, perm[j]) = S.at(i, j);
          }
          ++res.instances;
          if (refined_cycle_index(permuted_n, permuted_S, alpha, opts.capacity) != base) {
            res.passed = false;
            res.detail = "color permutation changes the index at n=" + vec_str(n_vec);
            return res;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }

  // Aggregation: merging colors commutes with the law (asserted inside
  // aggregation_pushforward).
  const std::vector<std::vector<std::vector<int>>> merges_q3 = {
      {{0, 1}, {2}}, {{0, 2}, {1}}, {{0}, {1, 2}}, {{0, 1, 2}}};
  for (int n = 0; n <= opts.aggregation_n_max; ++n) {
    for (int instance = 0; instance < 2; ++instance) {
      const BigRational theta = random_rational(rng, 1, 6, 6);
      std::vector<BigRational> p = random_alpha(rng, 3, 6);
      BigRational p_total = 0;
      for (const auto& pj : p) p_total += pj;
      for (auto& pj : p) pj /= p_total;
      const EsfParams params(theta, p);

      for (const auto& blocks : merges_q3) {
        ++res.instances;
        try {
          aggregation_pushforward(n, params,
                                  DegeneracyMap::from_blocks(3, blocks), opts.capacity);
        } catch (const std::logic_error& e) {
          res.passed = false;
          res.detail = std::string("aggregation fails at n=") + std::to_string(n) +
                       ": " + e.what();
          return res;
        }
      }
      // Identity merge leaves the law untouched.
      ++res.instances;
      const ExactDistribution original = esf_distribution(n, params, opts.capacity);
      if (aggregation_pushforward(n, params, DegeneracyMap::identity(3),
                                  opts.capacity) != original) {
        res.passed = false;
        res.detail = "identity merge changed the law at n=" + std::to_string(n);
        return res;
      }
    }
  }

  // q = 1 reduction: the one-color law is the classical Ewens law on shapes.
  for (const auto& theta : theta_grid()) {
    const EsfParams params(theta, {BigRational(1)});
    for (int n = 0; n <= opts.esf_n_max; ++n) {
      const ExactDistribution d = esf_distribution(n, params, opts.capacity);
      BigRational classical_total = 0;
      ++res.instances;
      for (size_t i = 0; i < d.size(); ++i) {
        const BigRational expected = classical_esf_mass(shape(d.support()[i]), theta);
        classical_total += expected;
        if (d.mass()[i] != expected) {
          res.passed = false;
          res.detail = "q=1 mass differs from classical Ewens at n=" + std::to_string(n);
          return res;
        }
      }
      if (n > 0 && classical_total != 1) {
        res.passed = false;
        res.detail = "classical Ewens masses do not sum to 1 at n=" + std::to_string(n);
        return res;
      }
    }
  }
  return res;
}

CheckResult check_splitting(const VerifyOptions& opts) {
  CheckResult res{"splitting", "multinomial splitting identity on random instances",
                  0, true, 0, 0, ""};
  RandomSource rng(opts.seed ^ 0x0B);
  for (int i = 0; i < opts.split_instances; ++i) {
    const int k = 1 + static_cast<int>(rng.uniform_below(4));
    const int total = static_cast<int>(
        rng.uniform_below(static_cast<uint64_t>(opts.split_total_max + 1)));
    const std::vector<int> v = random_composition(rng, total, k);
    const int m = static_cast<int>(rng.uniform_below(static_cast<uint64_t>(total + 1)));
    ++res.instances;
    if (!multinomial_split_check(v, m)) {
      res.passed = false;
      res.detail = "splitting fails at v=" + vec_str(v) + " m=" + std::to_string(m);
      return res;
    }
  }
  return res;
}

using CheckFn = CheckResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, CheckFn>>& check_table() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"moments", check_moments},
      {"spot-values", check_spot_values},
      {"orbit-counts", check_orbit_counts},
      {"pattern-inventory", check_pattern_inventory},
      {"normalization", check_normalization},
      {"conditioning", check_conditioning},
      {"consistency", check_consistency},
      {"hoppe-marginal", check_hoppe_marginal},
      {"necklaces", check_necklaces},
      {"identities", check_identities},
      {"splitting", check_splitting},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : check_table()) out.push_back(name);
    return out;
  }();
  return names;
}

CheckResult run_check(const std::string& name, const VerifyOptions& opts) {
  for (const auto& [check_name, fn] : check_table()) {
    if (check_name != name) continue;
    const auto start = Clock::now();
    CheckResult result = fn(opts);
    result.seconds = seconds_since(start);
    if (result.passed && result.budget_seconds > 0 &&
        result.seconds > result.budget_seconds) {
      result.passed = false;
      result.detail = "runtime budget exceeded";
    }
    return result;
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

std::vector<CheckResult> run_all_checks(
    const VerifyOptions& opts, const std::function<void(const CheckResult&)>& progress) {
  std::vector<CheckResult> results;
  for (const auto& name : check_names()) {
    results.push_back(run_check(name, opts));
    if (progress) progress(results.back());
  }
  return results;
}

}  // namespace polyesf
