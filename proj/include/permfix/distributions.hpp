#pragma once

#include "permfix/actions.hpp"
#include "permfix/numbers.hpp"
#include "permfix/partitions.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <thread>
#include <utility>
#include <vector>

namespace permfix {

enum class ActionKind { KSets, Matchings };

// Law of the fixed-point count over a uniform random element, stored
// sparsely: support maps each attained value to its exact probability.
struct ExactDistribution {
  unsigned degree = 0;  // n for k-sets, 2n for matchings
  ActionKind action = ActionKind::KSets;
  unsigned k = 0;  // k-sets only
  std::map<Int, Rat> support;

  Rat probability_at(const Int& value) const {
    auto it = support.find(value);
    return it == support.end() ? Rat(0) : it->second;
  }

  Rat mean() const {
    Rat m = 0;
    for (const auto& [v, p] : support) m += Rat(v) * p;
    return m;
  }

  Rat second_moment() const {
    Rat m = 0;
    for (const auto& [v, p] : support) m += Rat(v * v) * p;
    return m;
  }

  Rat variance() const {
    Rat m = mean();
    return second_moment() - m * m;
  }
};

namespace detail {

// Aggregates counter values over all cycle types of S_n weighted by class
// probability. The merge is exact rational addition, so thread count does
// not affect the result.
template <typename Counter>
std::map<Int, Rat> aggregate_by_type(unsigned n, unsigned threads,
                                     unsigned degree_cap,
                                     const Counter& counter) {
  check_degree(n, degree_cap);
  if (threads <= 1) {
    std::map<Int, Rat> law;
    for_each_cycle_type(
        n,
        [&](std::span<const std::uint32_t> m) {
          law[counter(m)] += Rat(1, centralizer_order(m));
        },
        degree_cap);
    return law;
  }
  std::vector<std::map<Int, Rat>> partial(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for_each_cycle_type_strided(
          n, threads, t,
          [&](std::span<const std::uint32_t> m) {
            partial[t][counter(m)] += Rat(1, centralizer_order(m));
          },
          degree_cap);
    });
  for (auto& th : pool) th.join();
  std::map<Int, Rat> law = std::move(partial[0]);
  for (unsigned t = 1; t < threads; ++t)
    for (auto& [v, p] : partial[t]) law[v] += p;
  return law;
}

}  // namespace detail

// Law of the fixed k-set count F_k over uniform S_n, for k <= n/2; the only
// degenerate case admitted outside that range is n = k = 1 (a single point,
// F identically 1).
inline ExactDistribution distribution_ksets(unsigned n, unsigned k,
                                            unsigned threads = 1,
                                            unsigned degree_cap =
                                                kDefaultDegreeCap) {
  if (k == 0 || (2 * k > n && !(n == 1 && k == 1)))
    throw domain_error("distribution_ksets: need 1 <= k <= n/2");
  ExactDistribution d;
  d.degree = n;
  d.action = ActionKind::KSets;
  d.k = k;
  KSetEvaluator eval(k);
  d.support = detail::aggregate_by_type(n, threads, degree_cap, eval);
  return d;
}

// Law of the fixed-matching count over uniform S_{2n}.
inline ExactDistribution distribution_matchings(unsigned two_n,
                                                unsigned threads = 1,
                                                unsigned degree_cap =
                                                    kDefaultDegreeCap) {
  if (two_n < 2 || two_n % 2 != 0)
    throw domain_error("distribution_matchings: degree must be even and >= 2");
  ExactDistribution d;
  d.degree = two_n;
  d.action = ActionKind::Matchings;
  d.support = detail::aggregate_by_type(two_n, threads, degree_cap,
                                        detail::fixed_matchings_counts);
  return d;
}

inline Rat derangement_proportion(const ExactDistribution& d) {
  return d.probability_at(0);
}

// Transitive-action sandwich: (r-1)/|Omega| <= P(F=0) <= 1 - 1/(4r).
struct RankBounds {
  Int set_size;  // |Omega|
  Int rank;      // r
  Rat lower;
  Rat upper;
};

inline RankBounds rank_bounds(ActionKind action, unsigned degree,
                              unsigned k = 0) {
  if (degree < 1) throw domain_error("rank_bounds: degree must be positive");
  RankBounds b;
  if (action == ActionKind::KSets) {
    if (k == 0 || (2 * k > degree && !(degree == 1 && k == 1)))
      throw domain_error("rank_bounds: need 1 <= k <= n/2");
    b.set_size = binomial(degree, k);
    // Orbits of the point stabilizer are indexed by intersection size,
    // giving rank k+1, except that a one-point set has rank 1.
    b.rank = b.set_size == 1 ? Int(1) : Int(k + 1);
  } else {
    if (degree % 2 != 0)
      throw domain_error("rank_bounds: matchings degree must be even");
    unsigned n = degree / 2;
    b.set_size = odd_double_factorial(n);
    b.rank = Int(partition_count(n));
  }
  b.lower = Rat(b.rank - 1, b.set_size);
  b.upper = 1 - Rat(1, 4 * b.rank);
  return b;
}

inline RankBounds rank_bounds(const ExactDistribution& d) {
  return rank_bounds(d.action, d.degree, d.k);
}

// E prod_i A_i^{b_i} over uniform S_n, with A_i the i-cycle count and
// exponents[i-1] = b_i, by exact aggregation over cycle types.
inline Rat cycle_moment(unsigned n, std::span<const unsigned> exponents,
                        unsigned degree_cap = kDefaultDegreeCap) {
  Rat total = 0;
  for_each_cycle_type(
      n,
      [&](std::span<const std::uint32_t> m) {
        Rat term(1, centralizer_order(m));
        for (std::size_t i = 0; i < exponents.size(); ++i) {
          if (exponents[i] == 0) continue;
          std::uint32_t a = i < m.size() ? m[i] : 0;
          if (a == 0) {
            term = 0;
            break;
          }
          term *= int_pow(Int(a), exponents[i]);
        }
        total += term;
      },
      degree_cap);
  return total;
}

// r-th raw moment of Poisson(lambda) by the Touchard recurrence
// m_{r+1} = lambda * sum_j C(r,j) m_j, exact in lambda.
inline Rat poisson_moment(const Rat& lambda, unsigned r) {
  std::vector<Rat> m(r + 1);
  m[0] = 1;
  for (unsigned s = 0; s + 1 <= r; ++s) {
    Rat acc = 0;
    for (unsigned j = 0; j <= s; ++j) acc += Rat(binomial(s, j)) * m[j];
    m[s + 1] = lambda * acc;
  }
  return m[r];
}

// prod_i E X_i^{b_i} for independent X_i ~ Poisson(1/i); equals the exact
// S_n moment above whenever n >= sum_i i*b_i.
inline Rat poisson_moment_product(std::span<const unsigned> exponents) {
  Rat prod = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0)
      prod *= poisson_moment(Rat(1, static_cast<int>(i + 1)), exponents[i]);
  return prod;
}

}  // namespace permfix
