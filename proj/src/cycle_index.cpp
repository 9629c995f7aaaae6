#include "polyesf/cycle_index.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace polyesf {

Permutation::Permutation(std::vector<int> im) : images(std::move(im)) {
  std::vector<bool> seen(images.size(), false);
  for (int y : images) {
    if (y < 0 || y >= degree() || seen[y])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> visited(images.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    int x = start;
    do {
      visited[x] = true;
      cycle.push_back(x);
      x = images[x];
    } while (x != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> visited(images.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (visited[start]) continue;
    ++count;
    for (int x = start; !visited[x]; x = images[x]) visited[x] = true;
  }
  return count;
}

Coloring::Coloring(int q_colors, std::vector<int> colors)
    : q(q_colors), color_of(std::move(colors)) {
  if (q < 1) throw std::invalid_argument("Coloring: q must be >= 1");
  for (int c : color_of)
    if (c < 0 || c >= q) throw std::invalid_argument("Coloring: color out of range");
}

Coloring Coloring::canonical_blocks(const std::vector<int>& n_vec) {
  std::vector<int> colors;
  for (size_t j = 0; j < n_vec.size(); ++j) {
    if (n_vec[j] < 0) throw std::invalid_argument("Coloring: negative count");
    colors.insert(colors.end(), static_cast<size_t>(n_vec[j]), static_cast<int>(j));
  }
  return Coloring(static_cast<int>(n_vec.size()), std::move(colors));
}

std::vector<int> Coloring::color_counts() const {
  std::vector<int> counts(q, 0);
  for (int c : color_of) ++counts[c];
  return counts;
}

IntegerPartition cycle_structure(const Permutation& pi) {
  std::vector<int> mult(pi.degree(), 0);
  for (const auto& cycle : pi.cycles()) ++mult[cycle.size() - 1];
  return IntegerPartition(std::move(mult));
}

ColoredPartition project_pi(const Permutation& pi, const Coloring& c) {
  if (c.n() != pi.degree()) throw std::invalid_argument("project_pi: degree mismatch");
  std::map<ColorVector, int> atoms;
  for (const auto& cycle : pi.cycles()) {
    std::vector<int> eps(c.q, 0);
    for (int y : cycle) ++eps[c.color_of[y]];
    atoms[ColorVector(std::move(eps))] += 1;
  }
  return ColoredPartition::from_map(c.q, atoms);
}

std::map<ColoredPartition, long> orbit_counts_bruteforce(const std::vector<int>& n_vec,
                                                         const Coloring& c,
                                                         int degree_bound) {
  const int n = std::accumulate(n_vec.begin(), n_vec.end(), 0);
  if (n > degree_bound)
    throw CapacityError("orbit_counts_bruteforce: degree bound exceeded");
  if (c.color_counts() != n_vec)
    throw std::invalid_argument("orbit_counts_bruteforce: coloring does not match n_vec");

  std::map<ColoredPartition, long> fibers;
  for_each_permutation(n, [&](const Permutation& pi) {
    fibers[project_pi(pi, c)] += 1;
  });
  return fibers;
}

BigRational omega(const std::vector<int>& a, const RationalMatrix& S,
                  const std::vector<BigRational>& alpha) {
  if (static_cast<int>(a.size()) != S.cols ||
      static_cast<int>(alpha.size()) != S.rows)
    throw std::invalid_argument("omega: dimension mismatch");
  BigRational total = 0;
  for (int i = 0; i < S.rows; ++i) {
    BigRational prod = alpha[i];
    for (int j = 0; j < S.cols; ++j)
      if (a[j] > 0) prod *= rat_pow(S.at(i, j), static_cast<unsigned long>(a[j]));
    total += prod;
  }
  return total;
}

namespace {

// Table of omega_a over all 0 <= a <= n_vec entrywise, keyed by the raw
// count vector. Shared by the two inventory routes.
std::map<std::vector<int>, BigRational> omega_table(const std::vector<int>& n_vec,
                                                    const RationalMatrix& S,
                                                    const std::vector<BigRational>& alpha) {
  std::map<std::vector<int>, BigRational> table;
  std::vector<int> a(n_vec.size(), 0);
  std::function<void(size_t)> rec = [&](size_t j) {
    if (j == n_vec.size()) {
      table.emplace(a, omega(a, S, alpha));
      return;
    }
    for (int v = 0; v <= n_vec[j]; ++v) {
      a[j] = v;
      rec(j + 1);
    }
    a[j] = 0;
  };
  rec(0);
  return table;
}

}  // namespace

BigRational refined_cycle_index(const std::vector<int>& n_vec, const RationalMatrix& S,
                                const std::vector<BigRational>& alpha, long capacity) {
  if (static_cast<int>(n_vec.size()) != S.cols ||
      static_cast<int>(alpha.size()) != S.rows)
    throw std::invalid_argument("refined_cycle_index: dimension mismatch");

  const auto omegas = omega_table(n_vec, S, alpha);
  BigRational total = 0;
  for (const auto& A : enumerate_colored_partitions(n_vec, capacity)) {
    BigRational term = multinomial_coefficient(A);
    for (const auto& [a, mult] : A.parts())
      term *= rat_pow(omegas.at(a.counts), static_cast<unsigned long>(mult));
    total += term;
  }
  return total / BigRational(vector_factorial(n_vec));
}

BigRational pattern_inventory_bruteforce(const std::vector<int>& n_vec, const Coloring& c,
                                         const RationalMatrix& S,
                                         const std::vector<BigRational>& alpha,
                                         int degree_bound) {
  const int n = std::accumulate(n_vec.begin(), n_vec.end(), 0);
  if (n > degree_bound)
    throw CapacityError("pattern_inventory_bruteforce: degree bound exceeded");
  if (c.color_counts() != n_vec)
    throw std::invalid_argument("pattern_inventory_bruteforce: coloring mismatch");
  if (static_cast<int>(n_vec.size()) != S.cols ||
      static_cast<int>(alpha.size()) != S.rows)
    throw std::invalid_argument("pattern_inventory_bruteforce: dimension mismatch");

  const auto omegas = omega_table(n_vec, S, alpha);
  BigRational total = 0;
  std::vector<int> eps(c.q);
  for_each_permutation(n, [&](const Permutation& pi) {
    BigRational pattern = 1;
    for (const auto& cycle : pi.cycles()) {
      std::fill(eps.begin(), eps.end(), 0);
      for (int y : cycle) ++eps[c.color_of[y]];
      pattern *= omegas.at(eps);
    }
    total += pattern;
  });
  return total / BigRational(vector_factorial(n_vec));
}

BigRational classical_cycle_index(int n, const std::vector<BigRational>& t) {
  if (n < 0) throw std::invalid_argument("classical_cycle_index: n must be >= 0");
  if (static_cast<int>(t.size()) < n)
    throw std::invalid_argument("classical_cycle_index: need at least n dummy values");

  BigRational total = 0;
  for (const auto& lambda : enumerate_integer_partitions(n)) {
    BigRational term = m2(lambda);
    for (size_t i = 0; i < lambda.multiplicities.size(); ++i)
      if (lambda.multiplicities[i] > 0)
        term *= rat_pow(t[i], static_cast<unsigned long>(lambda.multiplicities[i]));
    total += term;
  }
  return total / BigRational(factorial(static_cast<unsigned long>(n)));
}

}  // namespace polyesf
