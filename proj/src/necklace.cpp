#include "polyesf/necklace.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace polyesf {

namespace {

std::vector<int> rotate_left(const std::vector<int>& w, int shift) {
  const int ell = static_cast<int>(w.size());
  std::vector<int> out(w.size());
  for (int i = 0; i < ell; ++i) out[i] = w[(i + shift) % ell];
  return out;
}

}  // namespace

Necklace::Necklace(const std::vector<int>& representative) {
  if (representative.empty()) throw std::invalid_argument("Necklace: empty word");
  for (int c : representative)
    if (c < 0) throw std::invalid_argument("Necklace: negative character");

  const int ell = static_cast<int>(representative.size());
  word = representative;
  period = ell;
  for (int shift = 1; shift < ell; ++shift) {
    std::vector<int> rotated = rotate_left(representative, shift);
    if (rotated == representative) period = std::min(period, shift);
    if (rotated < word) word = std::move(rotated);
  }
}

std::vector<Necklace> enumerate_necklaces(int q, int ell, long capacity) {
  if (q < 1 || ell < 1) throw std::invalid_argument("enumerate_necklaces: bad arguments");
  double words = std::pow(static_cast<double>(q), ell);
  if (words > static_cast<double>(capacity))
    throw CapacityError("enumerate_necklaces: q^ell exceeds capacity");

  std::set<Necklace> out;
  std::vector<int> w(ell, 0);
  // Odometer over all q^ell words; the canonical form dedupes rotations.
  for (;;) {
    out.emplace(w);
    int pos = ell - 1;
    while (pos >= 0 && w[pos] == q - 1) w[pos--] = 0;
    if (pos < 0) break;
    ++w[pos];
  }
  return {out.begin(), out.end()};
}

std::vector<int> epsilon(const Necklace& nu, int q) {
  std::vector<int> counts(q, 0);
  for (int c : nu.word) {
    if (c >= q) throw std::invalid_argument("epsilon: character out of range");
    ++counts[c];
  }
  return counts;
}

std::vector<Necklace> necklaces_with_occurrences(const std::vector<int>& a) {
  const int q = static_cast<int>(a.size());
  const int ell = std::accumulate(a.begin(), a.end(), 0);
  if (ell < 1) throw std::invalid_argument("necklaces_with_occurrences: zero vector");

  // Walk the multiset permutations of the character pool and keep canonical
  // representatives only.
  std::vector<int> pool;
  for (int c = 0; c < q; ++c) pool.insert(pool.end(), static_cast<size_t>(a[c]), c);

  std::set<Necklace> out;
  do {
    Necklace nu(pool);
    if (nu.word == pool) out.insert(std::move(nu));
  } while (std::next_permutation(pool.begin(), pool.end()));
  return {out.begin(), out.end()};
}

BigRational necklace_multiset_fiber_size(const NecklaceMultiset& N,
                                         const std::vector<int>& n_vec) {
  const int q = static_cast<int>(n_vec.size());
  std::vector<int> pushed(q, 0);
  for (const auto& [nu, mult] : N) {
    if (mult < 1)
      throw std::invalid_argument("necklace_multiset_fiber_size: multiplicity must be >= 1");
    const std::vector<int> occ = epsilon(nu, q);
    for (int j = 0; j < q; ++j) pushed[j] += mult * occ[j];
  }
  if (pushed != n_vec)
    throw std::invalid_argument(
        "necklace_multiset_fiber_size: occurrence pushforward does not match n_vec");

  BigRational size(vector_factorial(n_vec));
  for (const auto& [nu, mult] : N) {
    size *= rat_pow(BigRational(nu.period) / nu.length(),
                    static_cast<unsigned long>(mult));
    size /= BigRational(factorial(static_cast<unsigned long>(mult)));
  }
  if (!is_integer(size) || size <= 0)
    throw std::logic_error("necklace_multiset_fiber_size: expected a positive integer");
  return size;
}

std::vector<NecklaceMultiset> necklace_multisets_for(const ColoredPartition& A,
                                                     long capacity) {
  // Per atom: the necklaces it can stand for, and the size of the multiset
  // to pick from them.
  struct AtomChoices {
    std::vector<Necklace> necklaces;
    int multiplicity;
  };
  std::vector<AtomChoices> choices;
  double candidate_terms = 0;
  for (const auto& [a, mult] : A.parts()) {
    AtomChoices ac{necklaces_with_occurrences(a.counts), mult};
    candidate_terms += std::pow(static_cast<double>(ac.necklaces.size()), mult);
    choices.push_back(std::move(ac));
  }
  if (candidate_terms > static_cast<double>(capacity))
    throw CapacityError("necklace_multisets_for: candidate multisets exceed capacity");

  std::vector<NecklaceMultiset> out;
  NecklaceMultiset current;
  // Per-atom combinations with repetition, combined across atoms.
  std::function<void(size_t)> over_atoms = [&](size_t atom_idx) {
    if (atom_idx == choices.size()) {
      out.push_back(current);
      return;
    }
    const auto& [necklaces, multiplicity] = choices[atom_idx];
    std::function<void(size_t, int)> pick = [&](size_t min_idx, int remaining) {
      if (remaining == 0) {
        over_atoms(atom_idx + 1);
        return;
      }
      for (size_t i = min_idx; i < necklaces.size(); ++i) {
        for (int r = 1; r <= remaining; ++r) {
          current[necklaces[i]] = r;
          pick(i + 1, remaining - r);
        }
        current.erase(necklaces[i]);
      }
    };
    pick(0, multiplicity);
  };
  over_atoms(0);
  return out;
}

BigRational multinomial_via_necklaces(const ColoredPartition& A, long capacity) {
  const std::vector<int> n_vec = A.col();
  BigRational total = 0;
  for (const auto& N : necklace_multisets_for(A, capacity))
    total += necklace_multiset_fiber_size(N, n_vec);
  if (!is_integer(total))
    throw std::logic_error("multinomial_via_necklaces: expected an integer");
  return total;
}

}  // namespace polyesf
