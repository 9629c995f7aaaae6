#include "polyesf/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace polyesf {

ColorVector::ColorVector(std::vector<int> c) : counts(std::move(c)) {
  if (counts.empty()) throw std::invalid_argument("ColorVector: q must be >= 1");
  bool nonzero = false;
  for (int x : counts) {
    if (x < 0) throw std::invalid_argument("ColorVector: negative count");
    nonzero |= x > 0;
  }
  if (!nonzero) throw std::invalid_argument("ColorVector: zero vector not allowed");
}

int ColorVector::length() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

IntegerPartition::IntegerPartition(std::vector<int> mult)
    : multiplicities(std::move(mult)) {
  for (int x : multiplicities)
    if (x < 0) throw std::invalid_argument("IntegerPartition: negative multiplicity");
  while (!multiplicities.empty() && multiplicities.back() == 0)
    multiplicities.pop_back();
}

int IntegerPartition::n() const {
  int total = 0;
  for (size_t i = 0; i < multiplicities.size(); ++i)
    total += static_cast<int>(i + 1) * multiplicities[i];
  return total;
}

int IntegerPartition::parts() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

ColoredPartition::ColoredPartition(int q, std::vector<std::pair<ColorVector, int>> parts)
    : q_(q), parts_(std::move(parts)) {
  if (q_ < 1) throw std::invalid_argument("ColoredPartition: q must be >= 1");
  std::sort(parts_.begin(), parts_.end());
  for (size_t i = 0; i < parts_.size(); ++i) {
    const auto& [a, mult] = parts_[i];
    if (a.q() != q_) throw std::invalid_argument("ColoredPartition: atom has wrong q");
    if (mult < 1) throw std::invalid_argument("ColoredPartition: multiplicity must be >= 1");
    if (i > 0 && parts_[i - 1].first == a)
      throw std::invalid_argument("ColoredPartition: duplicate atom");
  }
}

ColoredPartition ColoredPartition::empty(int q) { return ColoredPartition(q, {}); }

ColoredPartition ColoredPartition::from_map(int q, const std::map<ColorVector, int>& m) {
  std::vector<std::pair<ColorVector, int>> parts;
  parts.reserve(m.size());
  for (const auto& [a, mult] : m)
    if (mult != 0) parts.emplace_back(a, mult);
  return ColoredPartition(q, std::move(parts));
}

std::vector<int> ColoredPartition::col() const {
  std::vector<int> total(q_, 0);
  for (const auto& [a, mult] : parts_)
    for (int j = 0; j < q_; ++j) total[j] += mult * a.counts[j];
  return total;
}

int ColoredPartition::size() const {
  int s = 0;
  for (const auto& [a, mult] : parts_) s += mult;
  return s;
}

int ColoredPartition::total() const {
  int t = 0;
  for (const auto& [a, mult] : parts_) t += mult * a.length();
  return t;
}

int ColoredPartition::multiplicity(const ColorVector& a) const {
  auto it = std::lower_bound(parts_.begin(), parts_.end(), a,
                             [](const auto& part, const ColorVector& key) {
                               return part.first < key;
                             });
  if (it != parts_.end() && it->first == a) return it->second;
  return 0;
}

DegeneracyMap::DegeneracyMap(int q_colors, std::vector<int> blk)
    : q(q_colors), block(std::move(blk)) {
  if (q < 1 || static_cast<int>(block.size()) != q)
    throw std::invalid_argument("DegeneracyMap: block assignment has wrong length");
  int max_block = -1;
  for (int b : block) {
    if (b < 0) throw std::invalid_argument("DegeneracyMap: negative block index");
    max_block = std::max(max_block, b);
  }
  r = max_block + 1;
  std::vector<bool> seen(r, false);
  for (int b : block) seen[b] = true;
  for (bool s : seen)
    if (!s) throw std::invalid_argument("DegeneracyMap: block assignment not surjective");
}

DegeneracyMap DegeneracyMap::identity(int q) {
  std::vector<int> blk(q);
  std::iota(blk.begin(), blk.end(), 0);
  return DegeneracyMap(q, std::move(blk));
}

DegeneracyMap DegeneracyMap::from_blocks(int q, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> blk(q, -1);
  for (size_t i = 0; i < blocks.size(); ++i)
    for (int j : blocks[i]) {
      if (j < 0 || j >= q) throw std::invalid_argument("DegeneracyMap: color out of range");
      if (blk[j] != -1) throw std::invalid_argument("DegeneracyMap: color in two blocks");
      blk[j] = static_cast<int>(i);
    }
  for (int b : blk)
    if (b == -1) throw std::invalid_argument("DegeneracyMap: color not covered");
  return DegeneracyMap(q, std::move(blk));
}

std::vector<int> DegeneracyMap::apply(const std::vector<int>& a) const {
  std::vector<int> out(r, 0);
  for (int j = 0; j < q; ++j) out[block[j]] += a[j];
  return out;
}

std::vector<BigRational> DegeneracyMap::apply(const std::vector<BigRational>& p) const {
  std::vector<BigRational> out(r, BigRational(0));
  for (int j = 0; j < q; ++j) out[block[j]] += p[j];
  return out;
}

std::string to_string(const ColoredPartition& A) {
  std::string out = "{";
  bool first_part = true;
  for (const auto& [a, mult] : A.parts()) {
    if (!first_part) out += ",";
    first_part = false;
    out += "(";
    for (int j = 0; j < A.q(); ++j) {
      if (j) out += ",";
      out += std::to_string(a.counts[j]);
    }
    out += "):" + std::to_string(mult);
  }
  return out + "}";
}

IntegerPartition shape(const ColoredPartition& A) {
  std::vector<int> mult(A.total(), 0);
  for (const auto& [a, m] : A.parts()) mult[a.length() - 1] += m;
  return IntegerPartition(std::move(mult));
}

BigRational multinomial_coefficient(const ColoredPartition& A) {
  BigRational result(vector_factorial(A.col()));
  for (const auto& [a, m] : A.parts()) {
    unsigned long mult = static_cast<unsigned long>(m);
    BigRational binom(multinomial(a.counts));
    result *= rat_pow(binom, mult);
    BigInt len_pow;
    mpz_ui_pow_ui(len_pow.get_mpz_t(), static_cast<unsigned long>(a.length()), mult);
    result /= BigRational(len_pow * factorial(mult));
  }
  if (!is_integer(result) || result <= 0)
    throw std::logic_error("multinomial_coefficient: expected a positive integer");
  return result;
}

BigRational m2(const IntegerPartition& lambda) {
  BigRational result(factorial(static_cast<unsigned long>(lambda.n())));
  for (size_t i = 0; i < lambda.multiplicities.size(); ++i) {
    unsigned long mult = static_cast<unsigned long>(lambda.multiplicities[i]);
    BigInt size_pow;
    mpz_ui_pow_ui(size_pow.get_mpz_t(), i + 1, mult);
    result /= BigRational(size_pow * factorial(mult));
  }
  if (!is_integer(result)) throw std::logic_error("m2: expected an integer");
  return result;
}

ColoredPartition aggregate(const ColoredPartition& A, const DegeneracyMap& d) {
  if (d.q != A.q()) throw std::invalid_argument("aggregate: q mismatch");
  std::map<ColorVector, int> merged;
  for (const auto& [a, mult] : A.parts())
    merged[ColorVector(d.apply(a.counts))] += mult;
  return ColoredPartition::from_map(d.r, merged);
}

namespace {

// Atoms a with 0 < a <= budget entrywise, in decreasing lexicographic order.
std::vector<std::vector<int>> atoms_below(const std::vector<int>& budget) {
  std::vector<std::vector<int>> atoms;
  std::vector<int> cur(budget.size(), 0);
  std::function<void(size_t)> rec = [&](size_t j) {
    if (j == budget.size()) {
      if (std::any_of(cur.begin(), cur.end(), [](int x) { return x > 0; }))
        atoms.push_back(cur);
      return;
    }
    for (int v = 0; v <= budget[j]; ++v) {
      cur[j] = v;
      rec(j + 1);
    }
    cur[j] = 0;
  };
  rec(0);
  std::sort(atoms.begin(), atoms.end(), std::greater<>());
  return atoms;
}

}  // namespace

std::vector<ColoredPartition> enumerate_colored_partitions(const std::vector<int>& n_vec,
                                                           long capacity) {
  const int q = static_cast<int>(n_vec.size());
  if (q < 1) throw std::invalid_argument("enumerate_colored_partitions: q must be >= 1");
  for (int x : n_vec)
    if (x < 0) throw std::invalid_argument("enumerate_colored_partitions: negative budget");

  const auto atoms = atoms_below(n_vec);
  std::vector<ColoredPartition> out;
  std::vector<std::pair<ColorVector, int>> chosen;
  std::vector<int> budget = n_vec;

  // Descend over atoms in decreasing order, spending each atom with some
  // multiplicity; every multiset is reached exactly once.
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (std::all_of(budget.begin(), budget.end(), [](int x) { return x == 0; })) {
      if (static_cast<long>(out.size()) >= capacity)
        throw CapacityError("enumerate_colored_partitions: capacity exceeded");
      out.emplace_back(q, chosen);
      return;
    }
    if (idx == atoms.size()) return;
    const auto& a = atoms[idx];
    int max_mult = std::numeric_limits<int>::max();
    for (int j = 0; j < q; ++j)
      if (a[j] > 0) max_mult = std::min(max_mult, budget[j] / a[j]);
    for (int m = max_mult; m >= 0; --m) {
      if (m > 0) {
        for (int j = 0; j < q; ++j) budget[j] -= m * a[j];
        chosen.emplace_back(ColorVector(a), m);
        rec(idx + 1);
        chosen.pop_back();
        for (int j = 0; j < q; ++j) budget[j] += m * a[j];
      } else {
        rec(idx + 1);
      }
    }
  };
  rec(0);

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColoredPartition> enumerate_all_colored_partitions(int n, int q, long capacity) {
  if (n < 0 || q < 1)
    throw std::invalid_argument("enumerate_all_colored_partitions: bad arguments");

  std::vector<ColoredPartition> out;
  std::vector<int> n_vec(q, 0);
  std::function<void(int, int)> compositions = [&](int j, int remaining) {
    if (j == q - 1) {
      n_vec[j] = remaining;
      auto batch = enumerate_colored_partitions(
          n_vec, capacity - static_cast<long>(out.size()));
      out.insert(out.end(), batch.begin(), batch.end());
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      n_vec[j] = v;
      compositions(j + 1, remaining - v);
    }
  };
  compositions(0, n);

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntegerPartition> enumerate_integer_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_integer_partitions: n must be >= 0");
  std::vector<IntegerPartition> out;
  std::vector<int> mult(n, 0);
  // Largest part first; parts chosen in decreasing size.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(mult);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      mult[part - 1] += 1;
      rec(remaining - part, part);
      mult[part - 1] -= 1;
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polyesf
