#include <doctest.h>

#include <set>

#include "polyesf/cycle_index.hpp"
#include "polyesf/necklace.hpp"

using namespace polyesf;

namespace {

// Rotation-class oracle: quotient all q^ell words by cyclic shifts directly.
std::set<std::set<std::vector<int>>> rotation_classes(int q, int ell) {
  std::set<std::vector<int>> words;
  std::vector<int> w(ell, 0);
  for (;;) {
    words.insert(w);
    int pos = ell - 1;
    while (pos >= 0 && w[pos] == q - 1) w[pos--] = 0;
    if (pos < 0) break;
    ++w[pos];
  }

  std::set<std::set<std::vector<int>>> classes;
  while (!words.empty()) {
    std::vector<int> seed = *words.begin();
    std::set<std::vector<int>> cls;
    for (int s = 0; s < ell; ++s) {
      std::vector<int> rot(ell);
      for (int i = 0; i < ell; ++i) rot[i] = seed[(i + s) % ell];
      cls.insert(rot);
    }
    for (const auto& member : cls) words.erase(member);
    classes.insert(std::move(cls));
  }
  return classes;
}

}  // namespace

TEST_SUITE("necklace") {

TEST_CASE("canonical form and period") {
  const Necklace nu({1, 0});
  CHECK(nu.word == std::vector<int>{0, 1});
  CHECK(nu.period == 2);

  CHECK(Necklace({0, 0}).period == 1);
  CHECK(Necklace({0, 1, 0, 1}).period == 2);
  CHECK(Necklace({1, 1, 1}).period == 1);
  CHECK(Necklace({0, 1, 1}).word == std::vector<int>{0, 1, 1});
  CHECK_THROWS_AS(Necklace({}), std::invalid_argument);
}

TEST_CASE("enumeration matches the rotation-class oracle") {
  for (int q = 1; q <= 3; ++q) {
    for (int ell = 1; ell <= 5; ++ell) {
      const auto found = enumerate_necklaces(q, ell);
      CHECK(found.size() == rotation_classes(q, ell).size());
      // Canonical representatives, strictly increasing.
      for (size_t i = 1; i < found.size(); ++i) CHECK(found[i - 1] < found[i]);
    }
  }
  // Frozen small counts, confirmed by the oracle above.
  CHECK(enumerate_necklaces(2, 1).size() == 2);
  CHECK(enumerate_necklaces(2, 2).size() == 3);
  CHECK(enumerate_necklaces(2, 3).size() == 4);

  const auto two_two = enumerate_necklaces(2, 2);
  CHECK(two_two[0].period == 1);  // 00
  CHECK(two_two[1].period == 2);  // 01
  CHECK(two_two[2].period == 1);  // 11
}

TEST_CASE("occurrence vectors") {
  CHECK(epsilon(Necklace({0, 1}), 2) == std::vector<int>{1, 1});
  CHECK(epsilon(Necklace({0, 0, 0}), 2) == std::vector<int>{3, 0});
  CHECK(epsilon(Necklace({0, 0, 1, 1}), 2) == std::vector<int>{2, 2});
  CHECK(necklaces_with_occurrences({1, 1}).size() == 1);
  CHECK(necklaces_with_occurrences({1, 1, 1}).size() == 2);  // [012] and [021]
}

TEST_CASE("fiber sizes") {
  SUBCASE("one two-colored necklace") {
    NecklaceMultiset N{{Necklace({0, 1}), 1}};
    CHECK(necklace_multiset_fiber_size(N, {1, 1}) == 1);
  }

  SUBCASE("three-cycles, one color") {
    // Oracle: permutations of degree 3 whose single cycle is colored 000.
    long three_cycles = 0;
    for_each_permutation(3, [&](const Permutation& pi) {
      if (pi.cycle_count() == 1) ++three_cycles;
    });
    NecklaceMultiset N{{Necklace({0, 0, 0}), 1}};
    CHECK(necklace_multiset_fiber_size(N, {3}) == three_cycles);
  }

  SUBCASE("repeated singleton necklace") {
    NecklaceMultiset N{{Necklace({0}), 2}};
    CHECK(necklace_multiset_fiber_size(N, {2, 0}) == 1);
  }

  SUBCASE("mismatched occurrences are rejected") {
    NecklaceMultiset N{{Necklace({0, 1}), 1}};
    CHECK_THROWS_AS(necklace_multiset_fiber_size(N, {2, 0}), std::invalid_argument);
  }
}

TEST_CASE("multinomial coefficient via necklaces") {
  SUBCASE("single mixed pair") {
    const ColoredPartition A(2, {{ColorVector({1, 1}), 1}});
    CHECK(multinomial_via_necklaces(A) == 1);
    CHECK(necklace_multisets_for(A).size() == 1);
  }

  SUBCASE("one color matches the second-kind coefficient") {
    for (int n = 0; n <= 6; ++n)
      for (const auto& A : enumerate_colored_partitions({n}))
        CHECK(multinomial_via_necklaces(A) == m2(shape(A)));
  }

  SUBCASE("agrees with the partition-core coefficient") {
    for (const std::vector<int>& n_vec :
         {std::vector<int>{2, 2}, {3, 1}, {2, 1, 1}, {1, 2}}) {
      for (const auto& A : enumerate_colored_partitions(n_vec))
        CHECK(multinomial_via_necklaces(A) == multinomial_coefficient(A));
    }
  }

  SUBCASE("fiber sizes tile the whole group") {
    for (const std::vector<int>& n_vec : {std::vector<int>{2, 1}, {2, 2}, {1, 1, 1}}) {
      int total = 0;
      for (int x : n_vec) total += x;
      BigRational covered = 0;
      for (const auto& A : enumerate_colored_partitions(n_vec))
        for (const auto& N : necklace_multisets_for(A))
          covered += necklace_multiset_fiber_size(N, n_vec);
      CHECK(covered == BigRational(factorial(total)));
    }
  }
}

TEST_CASE("capacity guards") {
  CHECK_THROWS_AS(enumerate_necklaces(3, 20), CapacityError);
  const ColoredPartition big(2, {{ColorVector({3, 3}), 2}});
  CHECK_THROWS_AS(necklace_multisets_for(big, 10), CapacityError);
}

}  // TEST_SUITE
