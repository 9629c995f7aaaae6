#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "polyesf/rational.hpp"

namespace polyesf {

inline constexpr long kDefaultEnumerationCapacity = 10'000'000;

/// A nonzero vector of per-color counts, the atom colored partitions are
/// built from. Ordered lexicographically on the count vector.
struct ColorVector {
  std::vector<int> counts;

  ColorVector() = default;
  explicit ColorVector(std::vector<int> c);

  int q() const { return static_cast<int>(counts.size()); }
  /// Sum of entries (the number of elements the atom accounts for).
  int length() const;

  auto operator<=>(const ColorVector&) const = default;
};

/// Integer partition in multiplicity form: multiplicities[i] is the number
/// of parts equal to i+1. Trailing zeros are trimmed so equality is
/// structural.
struct IntegerPartition {
  std::vector<int> multiplicities;

  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> mult);

  /// The partitioned integer, sum_i (i+1) * multiplicities[i].
  int n() const;
  /// Number of parts, sum_i multiplicities[i].
  int parts() const;

  auto operator<=>(const IntegerPartition&) const = default;
};

/// Finite multiset of ColorVector atoms over a fixed color count q.
/// Parts are kept sorted ascending by atom, with multiplicities >= 1,
/// so comparison and hashing are structural.
class ColoredPartition {
 public:
  ColoredPartition(int q, std::vector<std::pair<ColorVector, int>> parts);

  static ColoredPartition empty(int q);
  static ColoredPartition from_map(int q, const std::map<ColorVector, int>& m);

  int q() const { return q_; }
  const std::vector<std::pair<ColorVector, int>>& parts() const { return parts_; }

  /// Multiplicity-weighted sum of atoms (the color budget this partition spends).
  std::vector<int> col() const;
  /// Number of atoms counted with multiplicity.
  int size() const;
  /// Total number of underlying elements, |col()|.
  int total() const;
  int multiplicity(const ColorVector& a) const;

  auto operator<=>(const ColoredPartition&) const = default;

 private:
  int q_ = 0;
  std::vector<std::pair<ColorVector, int>> parts_;
};

/// Color-merging map induced by a set partition of [q] into r blocks.
struct DegeneracyMap {
  int q = 0;
  int r = 0;
  std::vector<int> block;  // block[j] in [0,r) for each source color j

  DegeneracyMap(int q, std::vector<int> block);
  static DegeneracyMap identity(int q);
  static DegeneracyMap from_blocks(int q, const std::vector<std::vector<int>>& blocks);

  std::vector<int> apply(const std::vector<int>& a) const;
  std::vector<BigRational> apply(const std::vector<BigRational>& p) const;
};

/// Compact display form, e.g. "{(1,1):1,(0,1):2}"; "{}" for the empty
/// partition.
std::string to_string(const ColoredPartition& A);

IntegerPartition shape(const ColoredPartition& A);

/// Number of permutations whose cycle structure and per-cycle color counts
/// realize A: col(A)! * prod_a binom(|a|, a)^A(a) / (|a|^A(a) A(a)!).
/// Always a positive integer; asserted.
BigRational multinomial_coefficient(const ColoredPartition& A);

/// Number of permutations of n with cycle structure lambda:
/// n! / prod_i (i^lambda_i lambda_i!).
BigRational m2(const IntegerPartition& lambda);

/// Push A forward through the color merge; multiplicities of colliding
/// images add.
ColoredPartition aggregate(const ColoredPartition& A, const DegeneracyMap& d);

/// All colored partitions spending exactly the budget n_vec, in canonical
/// (ascending) order. Throws CapacityError past `capacity` results.
std::vector<ColoredPartition> enumerate_colored_partitions(
    const std::vector<int>& n_vec, long capacity = kDefaultEnumerationCapacity);

/// All colored partitions with total size n over q colors (union over all
/// budgets with |n_vec| = n), canonical order.
std::vector<ColoredPartition> enumerate_all_colored_partitions(
    int n, int q, long capacity = kDefaultEnumerationCapacity);

std::vector<IntegerPartition> enumerate_integer_partitions(int n);

}  // namespace polyesf
