#pragma once

#include "permfix/actions.hpp"
#include "permfix/numbers.hpp"
#include "permfix/rng.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

// Limiting (n -> infinity) laws of the fixed k-set count: the same
// polynomial sum over partitions of k as in the finite case, evaluated on
// independent Poisson(1/i) cycle counts X_1..X_k.

namespace permfix {

inline constexpr unsigned kLimitKCap = 16;

struct CertifiedProbability {
  double value;
  double error_bound;  // rigorous bound covering all truncation
};

struct McEstimate {
  double estimate;
  double standard_error;
};

// Exact truncated-support summation. Lattice points (x_1..x_k) carry
// rational weight prod_i (1/i)^{x_i}/x_i!, always of the form 1/D; the
// search walks variables in order and cuts each coordinate loop once
// 1/D falls below the cutoff. A cut at denominator D discards absolute
// probability at most 2/D (geometric tail of the Poisson terms times the
// e^{-sum 1/i} normalization, bounded by 1), accumulated exactly in
// `dropped`.
struct TruncatedLimitLaw {
  unsigned k = 0;
  std::map<Int, Rat> mass;  // rational masses; probabilities after scaling
  Rat dropped;              // absolute bound on everything cut off

  CertifiedProbability probability(const Int& j) const {
    BigFloat h = 0;
    for (unsigned i = 1; i <= k; ++i) h += BigFloat(1) / i;
    BigFloat scale = boost::multiprecision::exp(-h);
    auto it = mass.find(j);
    BigFloat value = it == mass.end() ? BigFloat(0)
                                      : scale * to_bigfloat(it->second);
    BigFloat bound = to_bigfloat(dropped) + BigFloat("1e-25");
    return {value.convert_to<double>(), bound.convert_to<double>()};
  }
};

inline TruncatedLimitLaw limit_law_truncated(unsigned k, double cutoff) {
  if (k == 0) throw domain_error("limit_law_truncated: k must be positive");
  if (k > kLimitKCap)
    throw capacity_error("limit_law_truncated: k above the lattice cap");
  if (!(cutoff > 0.0) || cutoff >= 1.0)
    throw domain_error("limit_law_truncated: cutoff must be in (0, 1)");

  Int ceiling = (BigFloat(1) / BigFloat(cutoff)).convert_to<Int>() + 1;
  KSetEvaluator evaluate(k);

  TruncatedLimitLaw law;
  law.k = k;
  law.dropped = 0;

  std::vector<std::uint32_t> point(k, 0);
  // denominator-only DFS: weight of the current prefix is exactly 1/denom
  auto walk = [&](auto&& self, unsigned depth, const Int& denom) -> void {
    if (depth == k) {
      law.mass[evaluate(point)] += Rat(1) / Rat(denom);
      return;
    }
    const unsigned i = depth + 1;  // this variable is Poisson(1/i)
    Int d = denom;
    for (std::uint32_t x = 0;; ++x) {
      if (x > 0) d *= Int(i) * x;  // extra factor i^1 * x over x-1
      if (d > ceiling) {
        law.dropped += Rat(2) / Rat(d);
        return;
      }
      point[depth] = x;
      self(self, depth + 1, d);
    }
  };
  walk(walk, 0, Int(1));
  return law;
}

// Closed evaluation for k in {1,2,3} with a certificate far below 1e-12;
// other k are served by limit_prob_mc (sampling) or limit_law_truncated
// directly (exact with a chosen cutoff).
inline CertifiedProbability limit_prob_exact(unsigned k, const Int& j) {
  if (k < 1 || k > 3)
    throw domain_error(
        "limit_prob_exact: only k in {1,2,3}; use limit_prob_mc for larger "
        "k");
  if (j < 0) throw domain_error("limit_prob_exact: j must be non-negative");
  TruncatedLimitLaw law = limit_law_truncated(k, 1e-16);
  CertifiedProbability p = law.probability(j);
  if (!(p.error_bound < 1e-12))
    throw std::logic_error("limit_prob_exact: certificate exceeded budget");
  return p;
}

inline McEstimate limit_prob_mc(unsigned k, const Int& j,
                                std::uint64_t samples, std::uint64_t seed,
                                unsigned threads = 1) {
  if (k == 0) throw domain_error("limit_prob_mc: k must be positive");
  if (k > kLimitKCap)
    throw capacity_error("limit_prob_mc: k above the lattice cap");
  if (samples == 0)
    throw domain_error("limit_prob_mc: need at least one sample");
  if (threads == 0) threads = 1;

  // The budget is split over a fixed set of substreams so the estimate
  // depends only on the seed, not on the thread count.
  constexpr unsigned kSubstreams = 64;
  KSetEvaluator evaluate(k);

  std::vector<std::uint64_t> hits(kSubstreams, 0);
  auto run_substream = [&](unsigned s) {
    std::uint64_t quota = samples / kSubstreams +
                          (s < samples % kSubstreams ? 1 : 0);
    Rng rng(substream_seed(seed, s));
    std::vector<std::uint32_t> counts(k);
    std::uint64_t local = 0;
    for (std::uint64_t draw = 0; draw < quota; ++draw) {
      for (unsigned i = 1; i <= k; ++i)
        counts[i - 1] = rng.poisson(1.0 / i);
      if (evaluate(counts) == j) ++local;
    }
    hits[s] = local;
  };

  if (threads == 1) {
    for (unsigned s = 0; s < kSubstreams; ++s) run_substream(s);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (unsigned s = t; s < kSubstreams; s += threads)
          run_substream(s);
      });
    for (std::thread& worker : pool) worker.join();
  }

  std::uint64_t total = 0;
  for (std::uint64_t h : hits) total += h;
  double estimate = static_cast<double>(total) / static_cast<double>(samples);
  double standard_error =
      std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(samples));
  return {estimate, standard_error};
}

// Explicit finite product from the positive-probability argument: a lower
// bound on lim P(F_k > 0), so 1 minus it bounds the derangement limit from
// above. The product runs over j = 1..max(1, floor((k-1)/2)).
inline double derangement_upper_bound(unsigned k) {
  if (k < 2) throw domain_error("derangement_upper_bound: k must be >= 2");
  unsigned top = (k - 1) / 2;
  if (top == 0) top = 1;
  double product = 1.0;
  for (unsigned j = 1; j <= top; ++j) {
    double left = -std::expm1(-1.0 / j);        // 1 - e^{-1/j}
    double right = -std::expm1(-1.0 / (k - j));  // 1 - e^{-1/(k-j)}
    product *= 1.0 - left * right;
  }
  return 1.0 - product;
}

}  // namespace permfix
