#pragma once

#include <map>

#include "polyesf/partition.hpp"

namespace polyesf {

/// Exhaustive permutation enumeration is refused past this degree by default
/// (9! = 362,880 permutations).
inline constexpr int kDefaultBruteForceDegreeBound = 9;

struct Permutation {
  std::vector<int> images;  // one-line notation, 0-based

  explicit Permutation(std::vector<int> im);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images.size()); }
  /// Cycles in order of their smallest element, each starting there;
  /// fixed points included.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;

  auto operator<=>(const Permutation&) const = default;
};

/// Assignment of a color in [0,q) to each element of [0,n).
struct Coloring {
  int q = 0;
  std::vector<int> color_of;

  Coloring(int q, std::vector<int> colors);
  /// First n_vec[0] elements get color 0, the next n_vec[1] color 1, ...
  static Coloring canonical_blocks(const std::vector<int>& n_vec);

  int n() const { return static_cast<int>(color_of.size()); }
  std::vector<int> color_counts() const;
};

/// Rational evaluation point for the dummy variables: k rows (atoms) by
/// q columns (colors).
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigRational> data;

  RationalMatrix() = default;
  RationalMatrix(int k, int q)
      : rows(k), cols(q), data(static_cast<size_t>(k) * q, BigRational(0)) {
    if (k < 1 || q < 1) throw std::invalid_argument("RationalMatrix: bad dimensions");
  }

  BigRational& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const BigRational& at(int i, int j) const {
    return data[static_cast<size_t>(i) * cols + j];
  }
};

/// Visit all permutations of degree n in lexicographic one-line order.
template <typename F>
void for_each_permutation(int n, F&& visit) {
  Permutation pi = Permutation::identity(n);
  do {
    visit(const_cast<const Permutation&>(pi));
  } while (std::next_permutation(pi.images.begin(), pi.images.end()));
}

/// lambda_i = number of i-cycles of pi, fixed points included.
IntegerPartition cycle_structure(const Permutation& pi);

/// The colored partition read off the cycles of pi: one atom per cycle,
/// counting how many of its elements carry each color.
ColoredPartition project_pi(const Permutation& pi, const Coloring& c);

/// Exact fiber sizes of the cycle-coloring projection over all |n|!
/// permutations.
std::map<ColoredPartition, long> orbit_counts_bruteforce(
    const std::vector<int>& n_vec, const Coloring& c,
    int degree_bound = kDefaultBruteForceDegreeBound);

/// omega_a[S; alpha] = sum_i alpha_i prod_j S(i,j)^a_j. Zero entries of a
/// are allowed (exponent 0 contributes a factor 1).
BigRational omega(const std::vector<int>& a, const RationalMatrix& S,
                  const std::vector<BigRational>& alpha);

/// Z_n(Omega) = (1/n_vec!) sum over colored partitions A of n_vec of
/// Multi(A) prod_a omega_a^A(a).
BigRational refined_cycle_index(const std::vector<int>& n_vec, const RationalMatrix& S,
                                const std::vector<BigRational>& alpha,
                                long capacity = kDefaultEnumerationCapacity);

/// The same quantity computed directly as (1/n_vec!) sum over all
/// permutations of the per-permutation pattern prod_cycles omega_{eps(cycle)}.
BigRational pattern_inventory_bruteforce(const std::vector<int>& n_vec, const Coloring& c,
                                         const RationalMatrix& S,
                                         const std::vector<BigRational>& alpha,
                                         int degree_bound = kDefaultBruteForceDegreeBound);

/// Z_n(t) = (1/n!) sum over integer partitions of n of M_2(lambda) t^lambda.
BigRational classical_cycle_index(int n, const std::vector<BigRational>& t);

}  // namespace polyesf
