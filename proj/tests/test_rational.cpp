#include <doctest.h>

#include "polyesf/rational.hpp"

using namespace polyesf;

TEST_SUITE("rational") {

TEST_CASE("factorials and binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(vector_factorial({3, 2, 0}) == 12);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 7) == 0);
  CHECK(multinomial({1, 1}) == 2);
  CHECK(multinomial({2, 1}) == 3);
  CHECK(multinomial({}) == 1);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(BigRational(3), 0) == 1);
  CHECK(pochhammer(BigRational(1), 4) == 24);  // (1)_n = n!
  // (1/2)_3 = 1/2 * 3/2 * 5/2
  CHECK(pochhammer(BigRational(1) / 2, 3) == BigRational(15) / 8);
}

TEST_CASE("rat_pow") {
  const BigRational x = BigRational(-2) / 3;
  CHECK(rat_pow(x, 0) == 1);
  CHECK(rat_pow(x, 3) == BigRational(-8) / 27);
}

TEST_CASE("parsing") {
  CHECK(parse_rational("3/6") == BigRational(1) / 2);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("0.5") == BigRational(1) / 2);
  CHECK(parse_rational("-0.25") == BigRational(-1) / 4);
  CHECK(parse_rational("2.") == 2);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
}

TEST_CASE("rendering is lowest-terms") {
  CHECK(to_string(BigRational(2) / 4) == "1/2");
  CHECK(to_string(BigRational(6) / 3) == "2");
  CHECK(to_string(BigRational(-10) / 4) == "-5/2");
  CHECK(is_integer(BigRational(4) / 2));
  CHECK(!is_integer(BigRational(1) / 3));
}

}  // TEST_SUITE
