#include <doctest.h>

#include <map>
#include <set>

#include "polyesf/cycle_index.hpp"
#include "polyesf/json_io.hpp"
#include "polyesf/partition.hpp"
#include "polyesf/random.hpp"

using namespace polyesf;

namespace {

// Independent enumeration oracle: odometer over multiplicity assignments to
// every atom below the budget, keeping those whose weighted sum matches.
std::set<std::map<std::vector<int>, int>> multiset_oracle(const std::vector<int>& n_vec) {
  const int q = static_cast<int>(n_vec.size());
  std::vector<std::vector<int>> atoms;
  std::vector<int> a(q, 0);
  for (;;) {
    int pos = q - 1;
    while (pos >= 0 && a[pos] == n_vec[pos]) a[pos--] = 0;
    if (pos < 0) break;
    ++a[pos];
    atoms.push_back(a);
  }

  std::vector<int> max_mult(atoms.size());
  for (size_t i = 0; i < atoms.size(); ++i) {
    int m = 1 << 20;
    for (int j = 0; j < q; ++j)
      if (atoms[i][j] > 0) m = std::min(m, n_vec[j] / atoms[i][j]);
    max_mult[i] = m;
  }

  std::set<std::map<std::vector<int>, int>> out;
  std::vector<int> mult(atoms.size(), 0);
  for (;;) {
    std::vector<int> total(q, 0);
    for (size_t i = 0; i < atoms.size(); ++i)
      for (int j = 0; j < q; ++j) total[j] += mult[i] * atoms[i][j];
    if (total == n_vec) {
      std::map<std::vector<int>, int> ms;
      for (size_t i = 0; i < atoms.size(); ++i)
        if (mult[i] > 0) ms[atoms[i]] = mult[i];
      out.insert(std::move(ms));
    }
    size_t pos = atoms.size();
    while (pos > 0 && mult[pos - 1] == max_mult[pos - 1]) mult[--pos] = 0;
    if (pos == 0) break;
    ++mult[pos - 1];
  }
  return out;
}

std::map<std::vector<int>, int> as_multiset(const ColoredPartition& A) {
  std::map<std::vector<int>, int> ms;
  for (const auto& [a, mult] : A.parts()) ms[a.counts] = mult;
  return ms;
}

// Classical partition-count recursion (parts bounded by k).
long partition_count(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partition_count(n, k - 1) + partition_count(n - k, k);
}

ColoredPartition random_partition(RandomSource& rng, int q, int max_total) {
  const int total = static_cast<int>(rng.uniform_below(max_total + 1));
  std::vector<int> n_vec(q, 0);
  int remaining = total;
  for (int j = 0; j + 1 < q; ++j) {
    n_vec[j] = static_cast<int>(rng.uniform_below(remaining + 1));
    remaining -= n_vec[j];
  }
  n_vec[q - 1] = remaining;
  const auto family = enumerate_colored_partitions(n_vec);
  return family[rng.uniform_below(family.size())];
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("color vector invariants") {
  CHECK_THROWS_AS(ColorVector(std::vector<int>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ColorVector(std::vector<int>{1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(ColorVector(std::vector<int>{}), std::invalid_argument);
  CHECK(ColorVector({2, 1}).length() == 3);
}

TEST_CASE("enumeration of a fixed budget") {
  SUBCASE("zero budget gives the empty partition") {
    const auto out = enumerate_colored_partitions({0, 0, 0});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == ColoredPartition::empty(3));
  }

  SUBCASE("matches the multiset oracle") {
    for (const std::vector<int>& n_vec :
         {std::vector<int>{1, 1}, {2, 1}, {2, 2}, {3, 0}, {0, 3}}) {
      const auto expected = multiset_oracle(n_vec);
      const auto got = enumerate_colored_partitions(n_vec);
      REQUIRE(got.size() == expected.size());
      for (const auto& A : got) {
        CHECK(expected.count(as_multiset(A)) == 1);
        CHECK(A.col() == n_vec);
      }
    }
  }

  SUBCASE("one color is in bijection with integer partitions") {
    for (int n = 0; n <= 8; ++n) {
      const auto out = enumerate_colored_partitions({n});
      CHECK(static_cast<long>(out.size()) == partition_count(n, n));
      std::set<IntegerPartition> shapes;
      for (const auto& A : out) shapes.insert(shape(A));
      CHECK(shapes.size() == out.size());
    }
    CHECK(enumerate_colored_partitions({5}).size() == 7);
  }

  SUBCASE("canonical order, no duplicates") {
    const auto out = enumerate_colored_partitions({3, 2});
    for (size_t i = 1; i < out.size(); ++i) CHECK(out[i - 1] < out[i]);
  }

  SUBCASE("capacity limit is an error") {
    CHECK_THROWS_AS(enumerate_colored_partitions({4, 4}, 3), CapacityError);
  }
}

TEST_CASE("enumeration of a total size") {
  CHECK(enumerate_all_colored_partitions(0, 2).size() == 1);

  const auto n1 = enumerate_all_colored_partitions(1, 2);
  REQUIRE(n1.size() == 2);
  CHECK(n1[0].col() == std::vector<int>{0, 1});
  CHECK(n1[1].col() == std::vector<int>{1, 0});

  // Confirmed against the multiset oracle over all budgets of total 2.
  size_t expected = 0;
  for (const std::vector<int>& n_vec : {std::vector<int>{2, 0}, {1, 1}, {0, 2}})
    expected += multiset_oracle(n_vec).size();
  CHECK(expected == 6);
  CHECK(enumerate_all_colored_partitions(2, 2).size() == expected);
}

TEST_CASE("multinomial coefficient against the permutation oracle") {
  SUBCASE("two elements, two colors") {
    const auto fibers =
        orbit_counts_bruteforce({1, 1}, Coloring::canonical_blocks({1, 1}));
    const ColoredPartition cycle2(2, {{ColorVector({1, 1}), 1}});
    const ColoredPartition fixed(2, {{ColorVector({1, 0}), 1}, {ColorVector({0, 1}), 1}});
    REQUIRE(fibers.at(cycle2) == 1);
    REQUIRE(fibers.at(fixed) == 1);
    CHECK(multinomial_coefficient(cycle2) == 1);
    CHECK(multinomial_coefficient(fixed) == 1);
  }

  SUBCASE("three-cycles in the degree-3 group") {
    long three_cycles = 0;
    for_each_permutation(3, [&](const Permutation& pi) {
      if (pi.cycle_count() == 1) ++three_cycles;
    });
    REQUIRE(three_cycles == 2);
    CHECK(multinomial_coefficient(ColoredPartition(1, {{ColorVector({3}), 1}})) ==
          three_cycles);
  }

  SUBCASE("always a positive integer") {
    RandomSource rng(11);
    for (int i = 0; i < 40; ++i) {
      const auto A = random_partition(rng, 1 + rng.uniform_below(3) % 3, 6);
      const BigRational multi = multinomial_coefficient(A);
      CHECK(is_integer(multi));
      CHECK(multi > 0);
    }
  }
}

TEST_CASE("one-color coefficients coincide with the second-kind coefficient") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& A : enumerate_colored_partitions({n}))
      CHECK(multinomial_coefficient(A) == m2(shape(A)));
}

TEST_CASE("multinomial of the second kind") {
  CHECK(m2(IntegerPartition({4})) == 1);  // all fixed points

  long transpositions = 0;
  for_each_permutation(3, [&](const Permutation& pi) {
    if (cycle_structure(pi) == IntegerPartition({1, 1})) ++transpositions;
  });
  REQUIRE(transpositions == 3);
  CHECK(m2(IntegerPartition({1, 1})) == transpositions);

  for (int n = 0; n <= 8; ++n) {
    BigRational total = 0;
    for (const auto& lambda : enumerate_integer_partitions(n)) total += m2(lambda);
    CHECK(total == BigRational(factorial(n)));
  }
}

TEST_CASE("shape") {
  CHECK(shape(ColoredPartition::empty(2)) == IntegerPartition());
  CHECK(shape(ColoredPartition(2, {{ColorVector({1, 1}), 1}})) == IntegerPartition({0, 1}));
  const ColoredPartition A(2, {{ColorVector({2, 1}), 1}, {ColorVector({1, 0}), 2}});
  CHECK(shape(A) == IntegerPartition({2, 0, 1}));
  CHECK(shape(A).n() == 5);
}

TEST_CASE("aggregation") {
  const ColoredPartition mixed(2, {{ColorVector({1, 1}), 1}});
  const ColoredPartition split(2, {{ColorVector({1, 0}), 1}, {ColorVector({0, 1}), 1}});

  SUBCASE("identity map changes nothing") {
    CHECK(aggregate(mixed, DegeneracyMap::identity(2)) == mixed);
  }

  SUBCASE("full merge") {
    const DegeneracyMap merge = DegeneracyMap::from_blocks(2, {{0, 1}});
    CHECK(aggregate(mixed, merge) == ColoredPartition(1, {{ColorVector({2}), 1}}));
    // Colliding images add multiplicities.
    CHECK(aggregate(split, merge) == ColoredPartition(1, {{ColorVector({1}), 2}}));
  }

  SUBCASE("preserves size and pushes the budget") {
    RandomSource rng(7);
    const DegeneracyMap merge = DegeneracyMap::from_blocks(3, {{0, 2}, {1}});
    for (int i = 0; i < 25; ++i) {
      const auto A = random_partition(rng, 3, 6);
      const auto B = aggregate(A, merge);
      CHECK(B.size() == A.size());
      CHECK(B.col() == merge.apply(A.col()));
    }
  }
}

TEST_CASE("shape sums reproduce the one-color count") {
  for (const std::vector<int>& n_vec :
       {std::vector<int>{3, 2}, {2, 2, 1}, {4, 0}, {1, 1, 1}}) {
    std::map<IntegerPartition, BigRational> by_shape;
    for (const auto& A : enumerate_colored_partitions(n_vec))
      by_shape[shape(A)] += multinomial_coefficient(A);
    int total = 0;
    for (int x : n_vec) total += x;
    for (const auto& lambda : enumerate_integer_partitions(total))
      CHECK(by_shape[lambda] == m2(lambda));
  }
}

TEST_CASE("theta-weighted counts sum to the rising factorial") {
  RandomSource rng(23);
  for (const std::vector<int>& n_vec :
       {std::vector<int>{2, 2}, {3, 1}, {1, 2, 2}, {6}, {0, 0}}) {
    const BigRational theta =
        BigRational(1 + static_cast<long>(rng.uniform_below(9))) /
        static_cast<long>(1 + rng.uniform_below(9));
    BigRational total = 0;
    int n = 0;
    for (int x : n_vec) n += x;
    for (const auto& A : enumerate_colored_partitions(n_vec))
      total += multinomial_coefficient(A) * rat_pow(theta, A.size());
    CHECK(total == pochhammer(theta, n));
  }
}

TEST_CASE("json round trip") {
  RandomSource rng(5);
  for (int i = 0; i < 30; ++i) {
    const auto A = random_partition(rng, 1 + static_cast<int>(rng.uniform_below(3)), 6);
    CHECK(partition_from_json(partition_to_json(A)) == A);
  }
  const Json j = partition_to_json(ColoredPartition(2, {{ColorVector({1, 1}), 2}}));
  CHECK(j["q"] == 2);
  CHECK(j["parts"][0]["a"] == Json::array({1, 1}));
  CHECK(j["parts"][0]["mult"] == 2);
}

}  // TEST_SUITE
