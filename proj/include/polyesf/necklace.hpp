#pragma once

#include <map>

#include "polyesf/partition.hpp"

namespace polyesf {

/// Equivalence class of words under cyclic rotation, stored as the
/// lexicographically minimal rotation. The period is the smallest rotation
/// fixing the word; it divides the length.
struct Necklace {
  std::vector<int> word;  // canonical representative, characters in [0,q)
  int period = 0;

  /// Canonicalizes any representative.
  explicit Necklace(const std::vector<int>& representative);

  int length() const { return static_cast<int>(word.size()); }

  friend bool operator==(const Necklace& a, const Necklace& b) { return a.word == b.word; }
  friend auto operator<=>(const Necklace& a, const Necklace& b) { return a.word <=> b.word; }
};

using NecklaceMultiset = std::map<Necklace, int>;

/// All necklaces of length ell over q characters, in canonical order.
std::vector<Necklace> enumerate_necklaces(int q, int ell,
                                          long capacity = kDefaultEnumerationCapacity);

/// Occurrence counts of each character; rotation-invariant.
std::vector<int> epsilon(const Necklace& nu, int q);

/// All necklaces whose occurrence vector is exactly a.
std::vector<Necklace> necklaces_with_occurrences(const std::vector<int>& a);

/// Number of permutations whose colored cycle words realize N:
/// n_vec! prod_nu (period/length) / N(nu)!. Positive integer, asserted.
BigRational necklace_multiset_fiber_size(const NecklaceMultiset& N,
                                         const std::vector<int>& n_vec);

/// All necklace multisets whose occurrence pushforward is exactly A: for
/// each atom a, a size-A(a) multiset over the necklaces with occurrences a.
std::vector<NecklaceMultiset> necklace_multisets_for(
    const ColoredPartition& A, long capacity = kDefaultEnumerationCapacity);

/// Recomputes the colored-partition multinomial coefficient by summing
/// fiber sizes over all necklace multisets that collapse to A.
BigRational multinomial_via_necklaces(const ColoredPartition& A,
                                      long capacity = kDefaultEnumerationCapacity);

}  // namespace polyesf
