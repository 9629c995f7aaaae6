#pragma once

#include "polyesf/cycle_index.hpp"

namespace polyesf {

/// Rate parameter theta > 0 and an exact categorical parameter p on the
/// colors (nonnegative rationals summing to 1).
struct EsfParams {
  BigRational theta;
  std::vector<BigRational> p;

  EsfParams(BigRational theta, std::vector<BigRational> p);
  int q() const { return static_cast<int>(p.size()); }
};

/// Finitely supported exact probability distribution over colored
/// partitions: canonical support order, positive masses, total mass 1.
class ExactDistribution {
 public:
  static ExactDistribution from_map(const std::map<ColoredPartition, BigRational>& mass);
  static ExactDistribution point_mass(const ColoredPartition& A);

  const std::vector<ColoredPartition>& support() const { return support_; }
  const std::vector<BigRational>& mass() const { return mass_; }
  size_t size() const { return support_.size(); }

  /// Exact mass of A; zero when A is outside the support.
  BigRational mass_of(const ColoredPartition& A) const;

  bool operator==(const ExactDistribution&) const = default;

 private:
  ExactDistribution() = default;
  std::vector<ColoredPartition> support_;
  std::vector<BigRational> mass_;
};

/// Mass of a single colored partition of total size n = |col(A)|:
/// n!/(theta)_n * theta^|A| * p^col(A)/col(A)! * Multi(A).
BigRational esf_mass(const ColoredPartition& A, const EsfParams& params);

/// The full distribution over all colored partitions of total size n.
ExactDistribution esf_distribution(int n, const EsfParams& params,
                                   long capacity = kDefaultEnumerationCapacity);

/// Conditional law given the color budget n_vec; independent of p:
/// theta^|A| Multi(A) / (theta)_{|n_vec|}.
ExactDistribution esf_conditional(const std::vector<int>& n_vec, const BigRational& theta,
                                  long capacity = kDefaultEnumerationCapacity);

/// Law of the cycle-coloring projection of a theta-biased permutation,
/// computed by exhaustive enumeration: weight theta^(#cycles), normalized
/// by (theta)_n (the enumerated total is asserted to equal it).
ExactDistribution theta_biased_pushforward(const std::vector<int>& n_vec,
                                           const BigRational& theta, const Coloring& c,
                                           int degree_bound = kDefaultBruteForceDegreeBound);

/// Forget colors: sum masses over equal shapes.
std::map<IntegerPartition, BigRational> shape_pushforward(const ExactDistribution& d);

/// Push the level-n law through a color merge; exactly the law with
/// parameter (theta, merged p), which is asserted.
ExactDistribution aggregation_pushforward(int n, const EsfParams& params,
                                          const DegeneracyMap& d,
                                          long capacity = kDefaultEnumerationCapacity);

/// One-step deletion kernel row: remove a uniformly random element.
/// Mass a_j A(a) / n moves to A with one atom a replaced by a - e_j
/// (dropped entirely when a = e_j); colliding targets add.
ExactDistribution deletion_kernel(const ColoredPartition& A);

/// (n-m)-fold composition of the deletion kernel, S_{n,m}(A, .).
ExactDistribution kernel_power(const ColoredPartition& A, int m);

/// Mix kernel rows by a source law: (sigma P)(B) = sum_A P(A) S(A,B).
ExactDistribution kernel_pushforward(const ExactDistribution& d);

/// Checks that deleting one element from the level-n law gives exactly the
/// level-(n-1) law.
bool verify_consistency(int n, const EsfParams& params,
                        long capacity = kDefaultEnumerationCapacity);

/// Classical Ewens mass of an integer partition:
/// n!/(theta)_n prod_i theta^l_i/(i^l_i l_i!).
BigRational classical_esf_mass(const IntegerPartition& lambda, const BigRational& theta);

}  // namespace polyesf
