#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "polyesf/moments.hpp"

using namespace polyesf;

namespace {

// Quadrature oracle on the 1-simplex: with x ~ Dir(1,1) the first
// coordinate is uniform, so E[x1^a (1-x1)^b] = int_0^1 x^a (1-x)^b dx,
// the Beta integral a! b! / (a+b+1)!.
BigRational beta_integral(int a, int b) {
  return BigRational(factorial(a) * factorial(b)) / BigRational(factorial(a + b + 1));
}

RationalMatrix random_matrix(RandomSource& rng, int k, int q) {
  RationalMatrix S(k, q);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < q; ++j)
      S.at(i, j) = BigRational(static_cast<long>(rng.uniform_below(41)) - 20) /
                   static_cast<long>(1 + rng.uniform_below(20));
  return S;
}

std::vector<BigRational> random_alpha(RandomSource& rng, int k) {
  std::vector<BigRational> alpha(k);
  for (auto& a : alpha)
    a = BigRational(static_cast<long>(1 + rng.uniform_below(20))) /
        static_cast<long>(1 + rng.uniform_below(20));
  return alpha;
}

MomentProblem random_problem(RandomSource& rng, int max_total) {
  const int q = 1 + static_cast<int>(rng.uniform_below(3));
  const int k = 1 + static_cast<int>(rng.uniform_below(3));
  std::vector<int> n_vec(q, 0);
  int remaining = static_cast<int>(rng.uniform_below(max_total + 1));
  for (int j = 0; j + 1 < q; ++j) {
    n_vec[j] = static_cast<int>(rng.uniform_below(remaining + 1));
    remaining -= n_vec[j];
  }
  n_vec[q - 1] = remaining;
  return MomentProblem(random_matrix(rng, k, q), random_alpha(rng, k), n_vec);
}

}  // namespace

TEST_SUITE("moments") {

TEST_CASE("uniform-simplex spot values from the quadrature oracle") {
  // E[x1^2] under Dir(1,1)
  RationalMatrix S1(2, 1);
  S1.at(0, 0) = 1;
  const MomentProblem square(S1, {BigRational(1), BigRational(1)}, {2});
  const BigRational expected_sq = beta_integral(2, 0);
  REQUIRE(expected_sq == BigRational(1) / 3);
  CHECK(moment_via_theorem(square) == expected_sq);
  CHECK(moment_via_matrix_sum(square) == expected_sq);
  CHECK(moment_via_recursion(square) == expected_sq);

  // E[x1 x2] under Dir(1,1)
  RationalMatrix S2(2, 2);
  S2.at(0, 0) = 1;
  S2.at(1, 1) = 1;
  const MomentProblem cross(S2, {BigRational(1), BigRational(1)}, {1, 1});
  const BigRational expected_cr = beta_integral(1, 1);
  REQUIRE(expected_cr == BigRational(1) / 6);
  CHECK(moment_via_theorem(cross) == expected_cr);
  CHECK(moment_via_matrix_sum(cross) == expected_cr);
  CHECK(moment_via_recursion(cross) == expected_cr);
}

TEST_CASE("single-atom measure is a point mass") {
  RandomSource rng(41);
  for (int i = 0; i < 10; ++i) {
    const int q = 1 + static_cast<int>(rng.uniform_below(3));
    RationalMatrix S = random_matrix(rng, 1, q);
    std::vector<int> n_vec(q);
    for (auto& n : n_vec) n = static_cast<int>(rng.uniform_below(4));
    const MomentProblem p(S, {random_alpha(rng, 1)[0]}, n_vec);

    BigRational expected = 1;
    for (int j = 0; j < q; ++j) expected *= rat_pow(S.at(0, j), n_vec[j]);
    CHECK(moment_via_theorem(p) == expected);
    CHECK(moment_via_recursion(p) == expected);
  }
}

TEST_CASE("first moment is the weighted mean") {
  RandomSource rng(43);
  const RationalMatrix S = random_matrix(rng, 2, 1);
  const std::vector<BigRational> alpha = random_alpha(rng, 2);
  const MomentProblem p(S, alpha, {1});
  const BigRational expected =
      (alpha[0] * S.at(0, 0) + alpha[1] * S.at(1, 0)) / (alpha[0] + alpha[1]);
  CHECK(moment_via_matrix_sum(p) == expected);
  CHECK(moment_via_theorem(p) == expected);
}

TEST_CASE("three routes agree on random instances") {
  RandomSource rng(47);
  for (int i = 0; i < 20; ++i) {
    const MomentProblem p = random_problem(rng, 4);
    const BigRational zeta = moment_via_theorem(p);
    CHECK(zeta == moment_via_matrix_sum(p));
    CHECK(zeta == moment_via_recursion(p));
  }
}

TEST_CASE("zero exponents give the trivial moment") {
  RandomSource rng(53);
  const MomentProblem p(random_matrix(rng, 2, 2), random_alpha(rng, 2), {0, 0});
  CHECK(moment_via_theorem(p) == 1);
  CHECK(moment_via_matrix_sum(p) == 1);
  CHECK(moment_via_recursion(p) == 1);
}

TEST_CASE("total mass over all budgets of a fixed degree") {
  // With every column j equal to p_j * ones, the multinomially weighted
  // moments over all budgets of total n add up to 1.
  const std::vector<BigRational> p = {BigRational(1) / 3, BigRational(2) / 3};
  const std::vector<BigRational> alpha = {BigRational(1) / 2, BigRational(3) / 2,
                                          BigRational(1)};
  const int n = 4;
  BigRational total = 0;
  for (int n1 = 0; n1 <= n; ++n1) {
    RationalMatrix S(3, 2);
    for (int i = 0; i < 3; ++i) {
      S.at(i, 0) = p[0];
      S.at(i, 1) = p[1];
    }
    const MomentProblem problem(S, alpha, {n1, n - n1});
    total += BigRational(binomial(n, n1)) * moment_via_theorem(problem);
  }
  CHECK(total == 1);
}

TEST_CASE("column scaling is homogeneous") {
  RandomSource rng(59);
  const MomentProblem p = random_problem(rng, 4);
  const BigRational c = BigRational(7) / 3;

  RationalMatrix scaled = p.S;
  for (int i = 0; i < p.k(); ++i) scaled.at(i, 0) = scaled.at(i, 0) * c;
  const MomentProblem p_scaled(scaled, p.alpha, p.n_vec);
  CHECK(moment_via_theorem(p_scaled) ==
        rat_pow(c, p.n_vec[0]) * moment_via_theorem(p));
}

TEST_CASE("gamma moments") {
  SUBCASE("mean and second moment of a one-dimensional gamma") {
    const BigRational a = BigRational(5) / 2;
    RationalMatrix S(1, 1);
    S.at(0, 0) = 1;
    CHECK(gamma_moment(MomentProblem(S, {a}, {1})) == a);
    CHECK(gamma_moment(MomentProblem(S, {a}, {2})) == a * (a + 1));
  }

  SUBCASE("definitional ratio to the simplex moment") {
    RandomSource rng(61);
    for (int i = 0; i < 10; ++i) {
      const MomentProblem p = random_problem(rng, 4);
      BigRational alpha_total = 0;
      for (const auto& a : p.alpha) alpha_total += a;
      CHECK(gamma_moment(p) ==
            moment_via_theorem(p) * pochhammer(alpha_total, p.total_degree()));
    }
  }
}

TEST_CASE("multinomial splitting identity") {
  CHECK(multinomial_split_check({3, 1, 2}, 0));
  CHECK(multinomial_split_check({2, 1}, 1));  // 3 = 2 + 1
  RandomSource rng(67);
  for (int i = 0; i < 60; ++i) {
    const int k = 1 + static_cast<int>(rng.uniform_below(4));
    std::vector<int> v(k);
    int total = 0;
    for (auto& x : v) {
      x = static_cast<int>(rng.uniform_below(4));
      total += x;
    }
    const int m = static_cast<int>(rng.uniform_below(total + 1));
    CHECK(multinomial_split_check(v, m));
  }
  CHECK_THROWS_AS(multinomial_split_check({1, 1}, 5), std::invalid_argument);
}

TEST_CASE("dirichlet sampler") {
  RandomSource rng(71);

  SUBCASE("single atom is deterministic") {
    const auto x = sample_dirichlet({2.5}, rng);
    REQUIRE(x.size() == 1);
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("coordinates sum to one") {
    for (int i = 0; i < 100; ++i) {
      const auto x = sample_dirichlet({0.5, 1.5, 2.0}, rng);
      double total = 0;
      for (double xi : x) {
        CHECK(xi >= 0.0);
        total += xi;
      }
      CHECK(std::abs(total - 1.0) < 1e-12);
    }
  }

  SUBCASE("empirical mean matches alpha_i/|alpha| within 4 sigma") {
    const std::vector<double> alpha = {0.5, 1.0, 2.5};
    const double total_alpha = 4.0;
    const long n = 100000;
    std::vector<double> sum(3, 0.0);
    for (long i = 0; i < n; ++i) {
      const auto x = sample_dirichlet(alpha, rng);
      for (int j = 0; j < 3; ++j) sum[j] += x[j];
    }
    for (int j = 0; j < 3; ++j) {
      const double mean = alpha[j] / total_alpha;
      const double var = mean * (1.0 - mean) / (total_alpha + 1.0);
      const double se = std::sqrt(var / static_cast<double>(n));
      CHECK(std::abs(sum[j] / n - mean) < 4.0 * se);
    }
  }

  SUBCASE("Dir(1,1) first coordinate passes a Kolmogorov-Smirnov test") {
    const long n = 100000;
    std::vector<double> xs(n);
    for (long i = 0; i < n; ++i) xs[i] = sample_dirichlet({1.0, 1.0}, rng)[0];
    std::sort(xs.begin(), xs.end());
    double d = 0.0;
    for (long i = 0; i < n; ++i) {
      const double hi = static_cast<double>(i + 1) / n;
      const double lo = static_cast<double>(i) / n;
      d = std::max({d, std::abs(hi - xs[i]), std::abs(xs[i] - lo)});
    }
    // 1% critical value of the one-sample KS statistic.
    CHECK(d < 1.63 / std::sqrt(static_cast<double>(n)));
  }
}

TEST_CASE("monte carlo moment estimates") {
  SUBCASE("deterministic single-atom case has zero error") {
    RandomSource rng(73);
    RationalMatrix S(1, 2);
    S.at(0, 0) = BigRational(2) / 3;
    S.at(0, 1) = BigRational(1) / 2;
    const MomentProblem p(S, {BigRational(1)}, {1, 2});
    const auto est = monte_carlo_moment(p, 1000, rng);
    CHECK(est.estimate == doctest::Approx(to_double(moment_via_theorem(p))));
    // identical samples; only cancellation noise remains in the variance
    CHECK(est.std_error < 1e-8);
  }

  SUBCASE("uniform-simplex spot values within 4 sigma") {
    RandomSource rng(79);
    RationalMatrix S(2, 2);
    S.at(0, 0) = 1;
    S.at(1, 1) = 1;
    const MomentProblem p(S, {BigRational(1), BigRational(1)}, {1, 1});
    const auto est = monte_carlo_moment(p, 200000, rng);
    CHECK(std::abs(est.estimate - 1.0 / 6.0) < 4.0 * est.std_error);
  }

  SUBCASE("gamma analogue validates the gamma moment") {
    RandomSource rng(83);
    RationalMatrix S(2, 1);
    S.at(0, 0) = 1;
    S.at(1, 0) = BigRational(1) / 2;
    const MomentProblem p(S, {BigRational(3) / 2, BigRational(1)}, {2});
    const auto est = monte_carlo_gamma_moment(p, 200000, rng);
    CHECK(std::abs(est.estimate - to_double(gamma_moment(p))) < 4.0 * est.std_error);
  }
}

}  // TEST_SUITE
