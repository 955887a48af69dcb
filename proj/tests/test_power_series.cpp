#include <catch2/catch_amalgamated.hpp>

#include "permfix/numbers.hpp"
#include "permfix/power_series.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

using namespace permfix;

namespace {

PowerSeries<Rat> geometric_ones(unsigned order) {
  PowerSeries<Rat> g(order);
  for (unsigned n = 0; n <= order; ++n) g[n] = 1;
  return g;
}

}  // namespace

TEST_CASE("construction and ring operations", "[power_series]") {
  PowerSeries<Rat> zero(4);
  for (unsigned n = 0; n <= 4; ++n) REQUIRE(zero[n] == 0);
  REQUIRE(zero.order() == 4);

  PowerSeries<Rat> one = PowerSeries<Rat>::one(4);
  REQUIRE(one[0] == 1);
  REQUIRE(one[3] == 0);

  PowerSeries<Rat> a(5), b(5);
  a[0] = 1;
  a[1] = 1;  // 1 + u
  b[0] = 1;
  b[1] = -1;  // 1 - u
  PowerSeries<Rat> prod = a * b;
  REQUIRE(prod[0] == 1);
  REQUIRE(prod[1] == 0);
  REQUIRE(prod[2] == -1);
  REQUIRE(prod[3] == 0);

  PowerSeries<Rat> sum = a + b;
  REQUIRE(sum[0] == 2);
  REQUIRE(sum[1] == 0);
  PowerSeries<Rat> diff = a - b;
  REQUIRE(diff[0] == 0);
  REQUIRE(diff[1] == 2);
  REQUIRE(diff + b == a);

  PowerSeries<Rat> cube(5);
  cube[3] = 1;
  PowerSeries<Rat> truncated = cube * cube;  // u^6 falls off the end
  for (unsigned n = 0; n <= 5; ++n) REQUIRE(truncated[n] == 0);

  PowerSeries<Rat> short_series(3);
  REQUIRE_THROWS_AS(a * short_series, domain_error);
  REQUIRE_THROWS_AS(a + short_series, domain_error);
}

TEST_CASE("exponential of u has factorial coefficients", "[power_series]") {
  PowerSeries<Rat> u(10);
  u[1] = 1;
  PowerSeries<Rat> e = PowerSeries<Rat>::exponential(u);
  for (unsigned n = 0; n <= 10; ++n) REQUIRE(e[n] == Rat(1) / factorial(n));

  PowerSeries<Rat> zero(6);
  REQUIRE(PowerSeries<Rat>::exponential(zero) == PowerSeries<Rat>::one(6));

  PowerSeries<Rat> bad(4);
  bad[0] = 1;
  REQUIRE_THROWS_AS(PowerSeries<Rat>::exponential(bad), domain_error);
}

TEST_CASE("logarithm inverts exponential", "[power_series]") {
  PowerSeries<Rat> g = geometric_ones(12);
  PowerSeries<Rat> lg = PowerSeries<Rat>::logarithm(g);
  REQUIRE(lg[0] == 0);
  for (unsigned n = 1; n <= 12; ++n) REQUIRE(lg[n] == Rat(1, n));

  PowerSeries<Rat> a(12);
  a[1] = 1;
  a[2] = Rat(1, 3);
  a[5] = Rat(-1, 7);
  a[11] = Rat(22, 9);
  REQUIRE(PowerSeries<Rat>::logarithm(PowerSeries<Rat>::exponential(a)) == a);

  PowerSeries<Rat> b(9);
  b[0] = 1;
  b[1] = Rat(-2, 5);
  b[4] = Rat(3, 2);
  b[9] = Rat(1, 13);
  REQUIRE(PowerSeries<Rat>::exponential(PowerSeries<Rat>::logarithm(b)) == b);

  PowerSeries<Rat> bad(4);
  bad[0] = 2;
  REQUIRE_THROWS_AS(PowerSeries<Rat>::logarithm(bad), domain_error);
}

TEST_CASE("exponential turns sums into products", "[power_series]") {
  PowerSeries<Rat> a(10), b(10);
  a[1] = Rat(1, 2);
  a[3] = Rat(-2, 3);
  a[7] = Rat(5, 4);
  b[2] = Rat(1, 5);
  b[3] = Rat(1, 6);
  b[10] = -3;
  REQUIRE(PowerSeries<Rat>::exponential(a + b) ==
          PowerSeries<Rat>::exponential(a) * PowerSeries<Rat>::exponential(b));
}

TEST_CASE("inverse square root of 1-u", "[power_series]") {
  PowerSeries<Rat> s = inverse_sqrt_one_minus<Rat>(30);
  REQUIRE(s[0] == 1);
  REQUIRE(s[1] == Rat(1, 2));
  REQUIRE(s[2] == Rat(3, 8));
  REQUIRE(s[3] == Rat(5, 16));
  for (unsigned m = 0; m <= 30; ++m)
    REQUIRE(s[m] == Rat(binomial(2 * m, m)) / rat_pow(Rat(4), m));
  REQUIRE(s * s == geometric_ones(30));
}

TEST_CASE("geometric inverse of 1 + c u^s", "[power_series]") {
  for (auto [s, c] : {std::pair<unsigned, Rat>{2, Rat(1, 4)},
                      {3, Rat(-2, 3)},
                      {1, Rat(7, 5)}}) {
    PowerSeries<Rat> denom(20);
    denom[0] = 1;
    denom[s] = c;
    REQUIRE(denom * geometric_inverse<Rat>(20, s, c) ==
            PowerSeries<Rat>::one(20));
  }
}

TEST_CASE("evaluation by Horner", "[power_series]") {
  PowerSeries<Rat> p(2);
  p[0] = 1;
  p[1] = 2;
  p[2] = 3;
  REQUIRE(p.evaluate(Rat(1, 2)) == Rat(11, 4));
  REQUIRE(p.evaluate(Rat(0)) == 1);
  REQUIRE(p.evaluate(Rat(-1)) == 2);
}

TEST_CASE("big-float instantiation tracks the rational one", "[power_series]") {
  PowerSeries<Rat> logs_rat(25);
  PowerSeries<BigFloat> logs_big(25);
  for (unsigned k = 1; k <= 25; ++k) {
    Rat c = Rat(1, k) - Rat(1, (k + 2) * (k + 2));
    logs_rat[k] = c;
    logs_big[k] = to_bigfloat(c);
  }
  PowerSeries<Rat> er = PowerSeries<Rat>::exponential(logs_rat);
  PowerSeries<BigFloat> eb = PowerSeries<BigFloat>::exponential(logs_big);
  for (unsigned n = 0; n <= 25; ++n) {
    BigFloat diff = eb[n] - to_bigfloat(er[n]);
    REQUIRE(boost::multiprecision::abs(diff) < BigFloat("1e-60"));
  }

  PowerSeries<BigFloat> u(20);
  u[1] = 1;
  BigFloat at_one = PowerSeries<BigFloat>::exponential(u).evaluate(BigFloat(1));
  BigFloat e = boost::multiprecision::exp(BigFloat(1));
  REQUIRE(boost::multiprecision::abs(at_one - e) < BigFloat("1e-17"));
}
