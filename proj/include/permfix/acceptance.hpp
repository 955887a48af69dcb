#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "permfix/actions.hpp"
#include "permfix/distributions.hpp"
#include "permfix/limits.hpp"
#include "permfix/numbers.hpp"
#include "permfix/oracle.hpp"
#include "permfix/samplers.hpp"
#include "permfix/series.hpp"
#include "permfix/shuffle.hpp"
#include "permfix/special_functions.hpp"

namespace permfix {

struct CriterionResult {
  unsigned index = 0;
  std::string label;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace acceptance_detail {

using Verdict = std::pair<bool, std::string>;

inline std::string fixed3(double x) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << x;
  return out.str();
}

inline std::string rat_display(const Rat& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

inline std::string scientific2(double x) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(2) << x;
  return out.str();
}

inline Verdict check_oracle_equivalence() {
  unsigned cases = 0;
  for (unsigned n = 2; n <= kOracleDegreeCap; ++n) {
    for (unsigned k = 1; 2 * k <= n; ++k) {
      ActionTable table = brute_force_fixed_points(n, OracleAction::KSets, k);
      if (induced_distribution(table) != distribution_ksets(n, k).support)
        return {false, "k-set law mismatch at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k)};
      ++cases;
    }
  }
  for (unsigned two_n = 2; two_n <= kOracleDegreeCap; two_n += 2) {
    ActionTable table =
        brute_force_fixed_points(two_n, OracleAction::Matchings, 0);
    if (induced_distribution(table) != distribution_matchings(two_n).support)
      return {false, "matching law mismatch at degree " + std::to_string(two_n)};
    ++cases;
  }
  return {true, std::to_string(cases) +
                    " enumerated laws equal their formula counterparts exactly"};
}

inline Verdict check_moments() {
  unsigned cases = 0;
  for (unsigned n = 4; n <= 30; ++n) {
    for (unsigned k = 1; k <= 3; ++k) {
      if (2 * k > n) continue;
      ExactDistribution d = distribution_ksets(n, k);
      if (d.mean() != 1 || d.variance() != Rat(k))
        return {false, "moment mismatch at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k)};
      ++cases;
    }
  }
  for (unsigned two_n = 2; two_n <= 20; two_n += 2) {
    ExactDistribution d = distribution_matchings(two_n);
    if (d.mean() != 1 ||
        d.variance() != Rat(partition_count(two_n / 2) - 1))
      return {false,
              "matching moment mismatch at degree " + std::to_string(two_n)};
    ++cases;
  }
  return {true, "mean 1 and the stated variance hold exactly in " +
                    std::to_string(cases) + " cases"};
}

inline Verdict check_limit_values() {
  const double stated[3] = {0.36788, 0.44626, 0.50342};
  std::string gaps;
  for (unsigned k = 1; k <= 3; ++k) {
    CertifiedProbability limit = limit_prob_exact(k, Int(0));
    if (std::abs(limit.value - stated[k - 1]) >= 5e-6)
      return {false, "limit value off at k=" + std::to_string(k)};
    ExactDistribution d = distribution_ksets(40, k);
    double gap = std::abs(to_double(derangement_proportion(d)) - limit.value);
    if (gap >= 1e-3)
      return {false, "degree-40 proportion too far from the limit at k=" +
                         std::to_string(k)};
    if (!gaps.empty()) gaps += ", ";
    gaps += gap == 0.0 ? "<1e-15" : scientific2(gap);
  }
  return {true, "all three limits match to 5 decimals; degree-40 gaps " + gaps};
}

inline Verdict check_matchings_asymptotics() {
  for (unsigned j : {1u, 3u, 5u, 7u}) {
    static const std::map<unsigned, Rat> stated = {
        {1, Rat(3, 2)}, {3, Rat(1, 4)}, {5, Rat(27, 400)}, {7, Rat(127, 2352)}};
    if (pj_at_one(j) != stated.at(j))
      return {false, "prefactor value wrong at j=" + std::to_string(j)};
  }

  const unsigned order = 200;
  BigFloat root = sqrt(pi_constant() * order);
  PowerSeries<BigFloat> base = matchings_nonderangement_series<BigFloat>(order);
  double ratio0 = (base[order] * root).convert_to<double>() / A1().value;
  if (ratio0 < 0.97 || ratio0 > 1.03)
    return {false, "count-series ratio out of window: " + fixed3(ratio0)};

  std::string detail = "degree-400 ratios " + fixed3(ratio0);
  for (unsigned j : {1u, 3u}) {
    PowerSeries<BigFloat> gj = matchings_j_series<BigFloat>(j, order);
    double target = to_double(pj_at_one(j)) * B1().value;
    double ratio = (gj[order] * root).convert_to<double>() / target;
    if (ratio < 0.95 || ratio > 1.05)
      return {false, "j=" + std::to_string(j) +
                         " ratio out of window: " + fixed3(ratio)};
    detail += ", " + fixed3(ratio);
  }
  return {true, detail + " within their windows; prefactor values exact"};
}

inline Verdict check_series_distribution_equality() {
  const unsigned max_order = 8;
  PowerSeries<Rat> count = matchings_nonderangement_series<Rat>(max_order);
  std::map<unsigned, PowerSeries<Rat>> laws;
  for (unsigned j : {1u, 3u, 5u, 7u})
    laws.emplace(j, matchings_j_series<Rat>(j, max_order));

  for (unsigned n = 1; n <= max_order; ++n) {
    ExactDistribution d = distribution_matchings(2 * n);
    if (count[n] != 1 - derangement_proportion(d))
      return {false, "count coefficient differs at degree " +
                         std::to_string(2 * n)};
    for (unsigned j : {1u, 3u, 5u, 7u})
      if (laws.at(j)[n] != d.probability_at(Int(j)))
        return {false, "j=" + std::to_string(j) +
                           " coefficient differs at degree " +
                           std::to_string(2 * n)};
  }
  return {true, "all coefficients up to degree 16 equal the exact laws"};
}

inline Verdict check_wreath_bound() {
  for (unsigned a = 1; a <= 8; ++a) {
    for (unsigned k = 1; k <= 8; ++k) {
      Rat sum = 0;
      for_each_cycle_type(a, [&](std::span<const std::uint32_t> m) {
        Rat term = 1;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m[i] == 0) continue;
          term /= Rat(int_pow(Int((i + 1) * k), m[i]) * factorial(m[i]));
        }
        sum += term;
      });
      if (sum != rising_factorial_sum(a, k))
        return {false, "index-form identity fails at a=" + std::to_string(a) +
                           ", k=" + std::to_string(k)};
    }
  }

  const unsigned n = 2000;
  PowerSeries<BigFloat> series = wreath_bound_series<BigFloat>(2, n);
  BigFloat target = exp(pi_constant() * pi_constant() / 12) /
                    sqrt(pi_constant() * n);
  double ratio = (series[n] / target).convert_to<double>();
  if (ratio < 0.98 || ratio > 1.02)
    return {false, "a=2 coefficient ratio out of window: " + fixed3(ratio)};

  ActionTable table = brute_force_fixed_points(4, OracleAction::Blocks, 2);
  std::uint64_t with_fixed = 0;
  for (std::uint64_t c : table.counts)
    if (c > 0) ++with_fixed;
  Rat proportion(with_fixed, 24);
  Rat coefficient = wreath_bound_series<Rat>(2, 2)[2];
  if (proportion > coefficient)
    return {false, "direct block proportion exceeds the series bound"};

  return {true, "identity exact for a,k <= 8; a=2 ratio " + fixed3(ratio) +
                    " at degree 4000; direct degree-4 proportion " +
                    rat_display(proportion) + " <= bound " +
                    rat_display(coefficient)};
}

inline Verdict check_shuffle_spectrum() {
  unsigned chains = 0;
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      ShuffleChain chain = build_chain(n, k);
      SpectrumCheck sc = eigenvalue_multiset_check(chain, 10);
      if (!sc.exact || sc.max_difference != 0)
        return {false, "trace identity fails at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k)};
      Rat fan(Int(chain.interleavers.size()));
      if (return_probability(chain, 1) != 1 / fan)
        return {false, "one-step return probability wrong at n=" +
                           std::to_string(n) + ", k=" + std::to_string(k)};
      if (2 * k <= n &&
          return_probability(chain, 2) != Rat(k + 1) / (fan * fan))
        return {false, "two-step return probability wrong at n=" +
                           std::to_string(n) + ", k=" + std::to_string(k)};
      ++chains;
    }
  }
  return {true, "trace identity exact through r=10 on " +
                    std::to_string(chains) +
                    " walks; one- and two-step returns match"};
}

inline Verdict check_sandwich() {
  unsigned cases = 0;
  auto holds = [&cases](const ExactDistribution& d) {
    RankBounds b = rank_bounds(d);
    Rat p0 = derangement_proportion(d);
    ++cases;
    return b.lower <= p0 && p0 <= b.upper;
  };

  for (unsigned n = 2; n <= kOracleDegreeCap; ++n)
    for (unsigned k = 1; 2 * k <= n; ++k)
      if (!holds(distribution_ksets(n, k)))
        return {false, "sandwich fails for k-sets at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k)};
  for (unsigned n = 4; n <= 30; ++n)
    for (unsigned k = 1; k <= 3; ++k)
      if (2 * k <= n && !holds(distribution_ksets(n, k)))
        return {false, "sandwich fails for k-sets at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k)};
  for (unsigned k = 1; k <= 3; ++k)
    if (!holds(distribution_ksets(40, k)))
      return {false, "sandwich fails for k-sets at n=40, k=" +
                         std::to_string(k)};
  for (unsigned two_n = 2; two_n <= 20; two_n += 2)
    if (!holds(distribution_matchings(two_n)))
      return {false,
              "sandwich fails for matchings at degree " + std::to_string(two_n)};
  return {true, "rank bounds enclose the no-fixed-point probability in " +
                    std::to_string(cases) + " laws"};
}

inline Verdict check_involution_counts() {
  std::vector<Int> totals(41);
  totals[0] = 1;
  totals[1] = 1;
  for (unsigned m = 2; m <= 40; ++m)
    totals[m] = totals[m - 1] + Int(m - 1) * totals[m - 2];

  for (unsigned m = 8; m <= 40; ++m) {
    InvolutionCounts ic = involution_counts(m);
    if (ic.a % 4 != 0 || ic.b % 4 != 0)
      return {false, "parity class count not divisible by 4 at m=" +
                         std::to_string(m)};
    if (ic.a + ic.b != totals[m])
      return {false,
              "involution total mismatch at m=" + std::to_string(m)};
  }
  return {true, "both parity counts divisible by 4 for 8 <= m <= 40; totals "
                "match the independent recurrence"};
}

inline Verdict check_samplers() {
  constexpr unsigned draws = 100000;
  // 0.999 chi-square quantiles for 8 and 43 degrees of freedom
  const double quantile[2] = {26.124482, 77.418578};

  std::string detail;
  for (unsigned n : {4u, 5u}) {
    Rng rng(9000 + n);
    std::map<Permutation, std::uint64_t> counts;
    for (unsigned i = 0; i < draws; ++i) {
      Permutation w = rejection_derangement(n, rng);
      if (!is_derangement(w)) return {false, "rejection sample has a fixed point"};
      ++counts[w];
    }
    auto cells = derangement_count(n).convert_to<double>();
    double expected = draws / cells;
    double stat = 0.0;
    for (const auto& [w, c] : counts)
      stat += (c - expected) * (c - expected) / expected;
    if (counts.size() != static_cast<std::size_t>(cells) ||
        stat >= quantile[n - 4])
      return {false, "uniformity rejected at degree " + std::to_string(n) +
                         " (chi-square " + fixed3(stat) + ")"};
    detail += "chi-square " + fixed3(stat) + " on " +
              std::to_string(static_cast<unsigned>(cells)) + " cells; ";
  }

  Rng pass_rng(6174);
  for (unsigned n = 3; n <= 6; ++n)
    for (unsigned i = 0; i < 20000; ++i)
      if (!is_derangement(payne_derangement(n, pass_rng)))
        return {false, "repair-pass sample has a fixed point"};

  for (unsigned n : {3u, 4u, 5u}) {
    ChoiceTreeResult r = payne_exact_distribution(n, PayneStart::Uniform);
    detail += "degree " + std::to_string(n) + " pass " +
              (r.uniform ? "uniform" : "max/min " + rat_display(r.max_ratio) +
                                           ", " + rat_display(r.min_ratio)) +
              "; ";
  }
  detail.pop_back();
  detail.pop_back();
  return {true, detail};
}

inline Verdict check_out_of_scope_list() {
  return {true,
          "not reproduced at this scale, by design: logarithmic-decay lower "
          "bounds for derangement proportions of general primitive actions; "
          "the n^(-2/3) decay rate for transitive actions (rests on an "
          "external spectral bound); surveyed results on other group families "
          "quoted without proof. Their constructive slices (orbit counts on "
          "pairs, the m/12 cycle bound for m <= 10, the block-system "
          "coefficient trend) are verified in the unit suite"};
}

}  // namespace acceptance_detail

inline std::vector<CriterionResult> run_acceptance_suite(
    std::ostream* live = nullptr) {
  using acceptance_detail::Verdict;
  struct Criterion {
    const char* label;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {"exact laws equal brute-force enumeration",
       &acceptance_detail::check_oracle_equivalence},
      {"fixed-set counts have mean 1 and the stated variance",
       &acceptance_detail::check_moments},
      {"no-fixed-point limits match their stated decimals",
       &acceptance_detail::check_limit_values},
      {"matching-count asymptotics land in their windows",
       &acceptance_detail::check_matchings_asymptotics},
      {"series coefficients reproduce the exact laws",
       &acceptance_detail::check_series_distribution_equality},
      {"block-system bound: identity, asymptotic, direct comparison",
       &acceptance_detail::check_wreath_bound},
      {"walk traces equal fixed-point power sums",
       &acceptance_detail::check_shuffle_spectrum},
      {"rank sandwich encloses every computed law",
       &acceptance_detail::check_sandwich},
      {"involution parity counts: divisibility and totals",
       &acceptance_detail::check_involution_counts},
      {"samplers: uniformity, repair-pass verdicts, no fixed points",
       &acceptance_detail::check_samplers},
      {"out-of-scope claims are listed, not asserted",
       &acceptance_detail::check_out_of_scope_list},
  };

  std::vector<CriterionResult> results;
  unsigned index = 1;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    r.index = index++;
    r.label = c.label;
    try {
      auto [passed, detail] = c.run();
      r.passed = passed;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (live != nullptr) {
      (*live) << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.index
              << "  " << r.label << " -- " << r.detail << "  ("
              << acceptance_detail::fixed3(r.seconds) << "s)\n";
      live->flush();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace permfix
