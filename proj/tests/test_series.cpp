#include <catch2/catch_amalgamated.hpp>

#include "permfix/distributions.hpp"
#include "permfix/numbers.hpp"
#include "permfix/oracle.hpp"
#include "permfix/power_series.hpp"
#include "permfix/series.hpp"
#include "permfix/special_functions.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <vector>

using namespace permfix;
using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

namespace {

Rat matchings_prob_at(unsigned two_n, const Int& value) {
  ExactDistribution d = distribution_matchings(two_n);
  auto it = d.support.find(value);
  return it == d.support.end() ? Rat(0) : it->second;
}

}  // namespace

TEST_CASE("matching non-derangement series: frozen coefficients", "[series]") {
  PowerSeries<Rat> g = matchings_nonderangement_series<Rat>(8);
  const Rat expected[] = {Rat(1),
                          Rat(1),
                          Rat(2, 3),
                          Rat(26, 45),
                          Rat(158, 315),
                          Rat(6427, 14175),
                          Rat(27398, 66825),
                          Rat(16249664, 42567525),
                          Rat(226664393, 638512875)};
  for (unsigned n = 0; n <= 8; ++n) REQUIRE(g[n] == expected[n]);
}

TEST_CASE("matching non-derangement series matches the distributions",
          "[series]") {
  PowerSeries<Rat> g = matchings_nonderangement_series<Rat>(8);
  for (unsigned n = 1; n <= 8; ++n) {
    Rat lhs = g[n];
    Rat rhs = 1 - derangement_proportion(distribution_matchings(2 * n));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("fixed-count series: frozen tails and cross-module equality",
          "[series]") {
  struct Row {
    unsigned j;
    Rat tail[4];  // coefficients of u^5..u^8
  };
  const Row rows[] = {
      {1, {Rat(37, 120), Rat(23, 80), Rat(449, 1680), Rat(661, 2688)}},
      {3, {Rat(11, 144), Rat(25, 432), Rat(29, 540), Rat(83, 1728)}},
      {5, {Rat(41, 800), Rat(89, 3200), Rat(73, 4800), Rat(67, 3840)}},
      {7, {Rat(1, 192), Rat(23, 1152), Rat(535, 18816), Rat(4027, 188160)}}};
  for (const Row& row : rows) {
    PowerSeries<Rat> g = matchings_j_series<Rat>(row.j, 8);
    for (unsigned n = 5; n <= 8; ++n) REQUIRE(g[n] == row.tail[n - 5]);
    // The empty permutation fixes exactly the empty matching.
    REQUIRE(g[0] == (row.j == 1 ? 1 : 0));
    for (unsigned n = 1; n <= 8; ++n)
      REQUIRE(g[n] == matchings_prob_at(2 * n, Int(row.j)));
  }
  REQUIRE(matchings_j_series<Rat>(1, 1)[1] == 1);  // both of S_2 fix M_2
  REQUIRE_THROWS_AS(matchings_j_series<Rat>(2, 5), domain_error);
  REQUIRE_THROWS_AS(matchings_j_series<Rat>(9, 5), domain_error);
  REQUIRE_THROWS_AS(matchings_j_series<Rat>(0, 5), domain_error);
}

TEST_CASE("fixed-count series at one: closed product form", "[series]") {
  // For j = 1 the exponential damping collapses against 1/sqrt(1-u), so the
  // whole series is (1 + u/2) prod_i (1 + u^i/(2i)), a bare polynomial
  // product with no exp/log machinery involved.
  constexpr unsigned order = 30;
  PowerSeries<Rat> closed(order);
  closed[0] = 1;
  closed[1] = Rat(1, 2);
  for (unsigned i = 1; i <= order; ++i) {
    PowerSeries<Rat> factor(order);
    factor[0] = 1;
    factor[i] = Rat(1, 2 * i);
    closed *= factor;
  }
  REQUIRE(matchings_j_series<Rat>(1, order) == closed);
}

TEST_CASE("prefactor values at one", "[series]") {
  REQUIRE(pj_at_one(1) == Rat(3, 2));
  REQUIRE(pj_at_one(3) == Rat(1, 4));
  REQUIRE(pj_at_one(5) == Rat(27, 400));
  REQUIRE(pj_at_one(7) == Rat(127, 2352));
  REQUIRE_THROWS_AS(pj_at_one(4), domain_error);

  // The truncated prefactor series, summed at u = 1, converges to the same
  // constants (alternating geometric pieces with ratio 1/4 resp. 1/6).
  for (unsigned j : {1u, 3u, 5u, 7u}) {
    PowerSeries<BigFloat> pre = matchings_count_prefactor<BigFloat>(j, 80);
    BigFloat at_one = pre.evaluate(BigFloat(1));
    REQUIRE(abs(at_one - to_bigfloat(pj_at_one(j))) < BigFloat("1e-20"));
  }
}

TEST_CASE("product constant for non-derangements", "[series]") {
  AsymptoticConstant a = A1();
  REQUIRE(a.tail_bound > 0.0);
  REQUIRE(a.tail_bound < 1e-10);
  REQUIRE(std::abs(a.value - 1.7322810786952479404) < 1e-12);

  // Direct partial products with the quadratic tail estimate attached are
  // stable between cutoffs 10^5 and 10^6 and agree with the reported value.
  auto corrected = [](unsigned cutoff) {
    long double sum = 0.0L;
    for (unsigned i = cutoff; i >= 1; --i) {
      double y = 1.0 / (2.0 * i - 1.0);
      sum += std::log1p(0.5 * (std::expm1(y) + std::expm1(-y)));
    }
    long double odd_squares = 0.0L;
    for (unsigned i = cutoff; i >= 1; --i)
      odd_squares += 1.0L / ((2.0L * i - 1.0L) * (2.0L * i - 1.0L));
    long double pi = 3.14159265358979323846L;
    sum += (pi * pi / 8.0L - odd_squares) / 2.0L;
    return static_cast<double>(std::exp(sum));
  };
  double small_cutoff = corrected(100000);
  double large_cutoff = corrected(1000000);
  REQUIRE(std::abs(small_cutoff - large_cutoff) < 1e-10);
  REQUIRE(std::abs(large_cutoff - a.value) < 1e-10);
}

TEST_CASE("product constant for fixed counts", "[series]") {
  AsymptoticConstant b = B1();
  REQUIRE(b.tail_bound > 0.0);
  REQUIRE(b.tail_bound < 1e-10);
  REQUIRE(std::abs(b.value - 0.84550128163352918080) < 1e-12);

  // Weierstrass route: prod (1+1/(2i)) e^{-1/(2i)} = 2 e^{-gamma/2}/sqrt(pi).
  BigFloat reference = 2 * boost::multiprecision::exp(-euler_gamma_constant() / 2) /
                       sqrt(pi_constant());
  REQUIRE(std::abs(b.value - reference.convert_to<double>()) < 1e-13);
}

TEST_CASE("square-root singularity governs the coefficient decay", "[series]") {
  // Coefficient asymptotics C/sqrt(pi n) from the 1/sqrt(1-u) factor,
  // checked at permutation degree 2n = 400.
  constexpr unsigned order = 200;
  BigFloat scale = sqrt(pi_constant() * order);

  PowerSeries<BigFloat> g0 = matchings_nonderangement_series<BigFloat>(order);
  BigFloat ratio0 = g0[order] * scale / BigFloat(A1().value);
  double r0 = ratio0.convert_to<double>();
  REQUIRE(r0 > 0.97);
  REQUIRE(r0 < 1.03);

  AsymptoticConstant b = B1();
  for (unsigned j : {1u, 3u}) {
    PowerSeries<BigFloat> gj = matchings_j_series<BigFloat>(j, order);
    BigFloat ratio =
        gj[order] * scale / (to_bigfloat(pj_at_one(j)) * BigFloat(b.value));
    double r = ratio.convert_to<double>();
    REQUIRE(r > 0.95);
    REQUIRE(r < 1.05);
  }
}

TEST_CASE("wreath bound series: degenerate and frozen values", "[series]") {
  PowerSeries<Rat> ones = wreath_bound_series<Rat>(1, 30);
  for (unsigned n = 0; n <= 30; ++n) REQUIRE(ones[n] == 1);

  PowerSeries<Rat> pairs = wreath_bound_series<Rat>(2, 6);
  REQUIRE(pairs[0] == 1);
  REQUIRE(pairs[1] == 1);
  REQUIRE(pairs[2] == Rat(7, 8));  // 1/2 + 3/8 by hand
  REQUIRE_THROWS_AS(wreath_bound_series<Rat>(0, 4), domain_error);

  for (unsigned a = 2; a <= 5; ++a) {
    PowerSeries<Rat> s = wreath_bound_series<Rat>(a, 40);
    for (unsigned n = 1; n <= 40; ++n) {
      REQUIRE(s[n] > 0);
      REQUIRE(s[n] <= 1);
    }
  }
}

TEST_CASE("wreath bound dominates the brute-force block proportion",
          "[series]") {
  struct Case {
    unsigned a, n;
  };
  for (Case c : {Case{2, 2}, {2, 3}, {2, 4}, {3, 2}, {4, 2}}) {
    ActionTable table =
        brute_force_fixed_points(c.a * c.n, OracleAction::Blocks, c.a);
    std::uint64_t with_invariant = 0;
    for (std::uint64_t count : table.counts)
      if (count > 0) ++with_invariant;
    Rat proportion = Rat(Int(with_invariant)) / Rat(factorial(c.a * c.n));
    Rat bound = wreath_bound_series<Rat>(c.a, c.n)[c.n];
    REQUIRE(proportion <= bound);
  }
  // Trivial single-block systems are preserved by everything.
  REQUIRE(wreath_bound_series<Rat>(3, 1)[1] == 1);
  REQUIRE(wreath_bound_series<Rat>(4, 1)[1] == 1);
}

TEST_CASE("wreath asymptotic constants", "[series]") {
  AsymptoticConstant degenerate = wreath_bound_asymptotic(1);
  REQUIRE(degenerate.value == 1.0);
  REQUIRE_THROWS_AS(wreath_bound_asymptotic(0), domain_error);

  // a = 2: e^{zeta(2)/2} / Gamma(1/2) = e^{pi^2/12} / sqrt(pi).
  BigFloat direct = boost::multiprecision::exp(pi_constant() * pi_constant() /
                                               12) /
                    sqrt(pi_constant());
  AsymptoticConstant a2 = wreath_bound_asymptotic(2);
  REQUIRE(std::abs(a2.value - direct.convert_to<double>()) < 1e-13);
  REQUIRE(a2.tail_bound < 1e-10);

  // a = 3 with cycle-count proportions p(3,2) = 1/2, p(3,3) = 1/6.
  BigFloat direct3 =
      boost::multiprecision::exp(zeta_value(2) / 2 + zeta_value(3) / 6) /
      gamma_value(BigFloat(1) / 3);
  AsymptoticConstant a3 = wreath_bound_asymptotic(3);
  REQUIRE(std::abs(a3.value - direct3.convert_to<double>()) < 1e-13);

  const double frozen[] = {1.2841565101753762408, 1.0380969733953654001,
                           0.8282142653206018380, 0.6775716127169716376};
  for (unsigned a = 2; a <= 5; ++a)
    REQUIRE(std::abs(wreath_bound_asymptotic(a).value - frozen[a - 2]) <
            1e-12);
}

TEST_CASE("wreath coefficients approach the predicted scale", "[series]") {
  // [u^n] ~ constant * n^(1/a - 1); at a = 2, n = 400 the ratio is already
  // within a few percent.
  constexpr unsigned order = 400;
  PowerSeries<BigFloat> s = wreath_bound_series<BigFloat>(2, order);
  AsymptoticConstant c = wreath_bound_asymptotic(2);
  BigFloat predicted = BigFloat(c.value) / sqrt(BigFloat(order));
  double ratio = (s[order] / predicted).convert_to<double>();
  REQUIRE(ratio > 0.95);
  REQUIRE(ratio < 1.05);
}

TEST_CASE("block system bound", "[series]") {
  REQUIRE(block_system_bound(1) == 1);
  Rat by_hand = wreath_bound_series<Rat>(2, 2)[2];
  REQUIRE(block_system_bound(2) == by_hand);
  REQUIRE(block_system_bound(4) == Rat(3623131, 7962624));
  REQUIRE_THROWS_AS(block_system_bound(0), domain_error);

  // Trend at the proof's m^(-3/2) scale: v(m) * m^(3/2) stays bounded.
  double previous_scaled = 4.0;
  for (unsigned m : {4u, 8u, 16u, 32u}) {
    Rat v = block_system_bound(m);
    double scaled =
        to_double(v) * std::sqrt(static_cast<double>(m)) * m;
    REQUIRE(scaled < 4.0);
    REQUIRE(scaled <= previous_scaled);
    previous_scaled = scaled;
  }
}
