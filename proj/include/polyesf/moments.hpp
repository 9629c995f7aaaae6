#pragma once

#include "polyesf/cycle_index.hpp"
#include "polyesf/random.hpp"

namespace polyesf {

/// A multivariate moment of the Dirichlet distribution with parameter alpha:
/// the expectation of prod_j (s_j . x)^n_j, where s_j is the j-th column
/// of S. Everything exact-rational.
struct MomentProblem {
  RationalMatrix S;                // k x q
  std::vector<BigRational> alpha;  // length k, strictly positive
  std::vector<int> n_vec;          // length q, nonnegative exponents

  MomentProblem(RationalMatrix S, std::vector<BigRational> alpha, std::vector<int> n_vec);

  int k() const { return S.rows; }
  int q() const { return S.cols; }
  int total_degree() const;
};

/// n_vec! / (|alpha|)_{|n|} times the refined cycle index at the omega
/// monomials.
BigRational moment_via_theorem(const MomentProblem& p,
                               long capacity = kDefaultEnumerationCapacity);

/// Direct sum over nonnegative integer k x q matrices M with column sums
/// n_vec of prod_i (alpha_i)_{row_i(M)} * S^M / M!, normalized the same way.
BigRational moment_via_matrix_sum(const MomentProblem& p,
                                  long capacity = kDefaultEnumerationCapacity);

/// Third route: the normalized sum nu~ satisfies
///   |n| nu~_n[S; alpha] = sum_{i,j} S(i,j) alpha_i nu~_{n-e_j}[S; alpha+e_i],
/// with nu~_0 = 1. Evaluated with memoization on (n, alpha-offset) and
/// rescaled by n_vec! / (|alpha|)_{|n|} at the end.
BigRational moment_via_recursion(const MomentProblem& p);

/// Moment of the Gamma point process with the same finitely supported
/// intensity: n_vec! times the refined cycle index, no Pochhammer factor.
BigRational gamma_moment(const MomentProblem& p,
                         long capacity = kDefaultEnumerationCapacity);

/// Checks binom(|v|, v) = sum over w <= v with |w| = m of
/// binom(|w|, w) binom(|v|-|w|, v-w), exactly.
bool multinomial_split_check(const std::vector<int>& v, int m);

/// Point on the standard simplex: normalized independent Gamma draws.
std::vector<double> sample_dirichlet(const std::vector<double>& alpha, RandomSource& rng);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  long samples = 0;
};

/// Sample mean and standard error of prod_j (s_j . x)^n_j over Dirichlet
/// draws.
MonteCarloEstimate monte_carlo_moment(const MomentProblem& p, long samples,
                                      RandomSource& rng);

/// Same functional over independent Gamma(alpha_i) coordinates; validates
/// gamma_moment.
MonteCarloEstimate monte_carlo_gamma_moment(const MomentProblem& p, long samples,
                                            RandomSource& rng);

}  // namespace polyesf
