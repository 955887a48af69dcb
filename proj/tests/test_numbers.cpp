#include "permfix/numbers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace permfix;

TEST_CASE("factorial and binomial basics", "[numbers]") {
  REQUIRE(factorial(0) == 1);
  REQUIRE(factorial(5) == 120);
  REQUIRE(factorial(20) == Int("2432902008176640000"));

  // Pascal recurrence over a small triangle.
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned k = 1; k <= n; ++k)
      REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));

  REQUIRE(binomial(10u, 3u) == 120);
  REQUIRE(binomial(0u, 0u) == 1);
  REQUIRE(binomial(3u, 7u) == 0);
  REQUIRE(binomial(Int(-2), 3) == -4);
}

TEST_CASE("odd double factorial", "[numbers]") {
  REQUIRE(odd_double_factorial(0) == 1);
  REQUIRE(odd_double_factorial(1) == 1);
  REQUIRE(odd_double_factorial(2) == 3);
  REQUIRE(odd_double_factorial(3) == 15);
  REQUIRE(odd_double_factorial(4) == 105);
  // (2k-1)!! = (2k)! / (2^k k!)
  for (unsigned k = 0; k <= 10; ++k)
    REQUIRE(odd_double_factorial(k) ==
            factorial(2 * k) / (int_pow(2, k) * factorial(k)));
}

TEST_CASE("integer and rational powers", "[numbers]") {
  REQUIRE(int_pow(3, 0) == 1);
  REQUIRE(int_pow(3, 5) == 243);
  REQUIRE(int_pow(-2, 3) == -8);
  REQUIRE(rat_pow(Rat(2, 3), 4) == Rat(16, 81));
  REQUIRE(rat_pow(Rat(5), 0) == 1);
}

TEST_CASE("rational string round trip", "[numbers]") {
  REQUIRE(rat_to_string(Rat(3, 4)) == "3/4");
  REQUIRE(rat_to_string(Rat(-3, 4)) == "-3/4");
  REQUIRE(rat_to_string(Rat(7)) == "7");
  REQUIRE(rat_to_string(Rat(0)) == "0");
  REQUIRE(rat_to_string(Rat(6, 4)) == "3/2");

  REQUIRE(rat_from_string("3/4") == Rat(3, 4));
  REQUIRE(rat_from_string("-12") == Rat(-12));
  REQUIRE(rat_from_string("22/7") == Rat(22, 7));
  REQUIRE_THROWS_AS(rat_from_string("x/y"), domain_error);
  REQUIRE_THROWS_AS(rat_from_string(""), domain_error);

  const Rat samples[] = {Rat(0), Rat(1, 3), Rat(-355, 113), Rat(12345, 67)};
  for (const Rat& r : samples) REQUIRE(rat_from_string(rat_to_string(r)) == r);
}

TEST_CASE("bigfloat conversion is faithful for small rationals", "[numbers]") {
  BigFloat x = to_bigfloat(Rat(1, 3));
  REQUIRE(boost::multiprecision::abs(x * 3 - 1) < BigFloat("1e-60"));
  REQUIRE(to_double(Rat(1, 2)) == 0.5);
}
