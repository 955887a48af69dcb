#pragma once

#include "permfix/actions.hpp"
#include "permfix/numbers.hpp"
#include "permfix/partitions.hpp"
#include "permfix/permutation.hpp"

#include <algorithm>
#include <span>
#include <cstdint>
#include <utility>
#include <vector>

// Top-k-to-random shuffle on decks of n cards, as a random walk on S_n.
// A step removes the top k cards and re-inserts them at a uniformly random
// k-subset of positions, preserving both relative orders; the increment for
// landing set S sends position s_i (i-th smallest of S) to i and the
// complement to k..n-1 in order, so a step is right-composition by one of
// the C(n,k) interleaver permutations.

namespace permfix {

inline constexpr unsigned kShuffleDegreeCap = 7;  // state space n! <= 5040

struct ShuffleChain {
  unsigned degree = 0;
  unsigned k = 0;
  std::vector<Permutation> interleavers;  // C(n,k) equally likely increments

  std::uint64_t state_count() const {
    std::uint64_t size = 1;
    for (unsigned i = 2; i <= degree; ++i) size *= i;
    return size;
  }
  Rat step_probability() const {
    return Rat(1) / Rat(Int(interleavers.size()));
  }
};

inline ShuffleChain build_chain(unsigned n, unsigned k) {
  if (n > kShuffleDegreeCap)
    throw capacity_error("build_chain: degree above the n! state cap");
  if (k < 1 || k > n)
    throw domain_error("build_chain: need 1 <= k <= n");

  ShuffleChain chain;
  chain.degree = n;
  chain.k = k;

  std::vector<std::uint32_t> landing(k);
  auto emit = [&] {
    std::vector<std::uint32_t> image(n);
    for (unsigned i = 0; i < k; ++i) image[landing[i]] = i;
    unsigned next = k;
    unsigned cursor = 0;
    for (unsigned j = 0; j < n; ++j) {
      if (cursor < k && landing[cursor] == j) {
        ++cursor;
        continue;
      }
      image[j] = next++;
    }
    chain.interleavers.push_back(Permutation{std::move(image)});
  };
  auto recurse = [&](auto&& self, unsigned index, unsigned low) -> void {
    if (index == k) {
      emit();
      return;
    }
    for (unsigned value = low; value + (k - index) <= n; ++value) {
      landing[index] = value;
      self(self, index + 1, value + 1);
    }
  };
  recurse(recurse, 0, 0);
  return chain;
}

namespace shuffle_detail {

// targets[s * C + j] = rank of (state s) composed with interleaver j.
inline std::vector<std::uint32_t> target_table(const ShuffleChain& chain) {
  const std::uint64_t states = chain.state_count();
  const std::size_t fan = chain.interleavers.size();
  std::vector<std::uint32_t> targets(states * fan);
  for (std::uint64_t s = 0; s < states; ++s) {
    Permutation state = lehmer_unrank(chain.degree, s);
    for (std::size_t j = 0; j < fan; ++j)
      targets[s * fan + j] = static_cast<std::uint32_t>(
          lehmer_rank(compose(state, chain.interleavers[j])));
  }
  return targets;
}

// Number of r-step increment words whose product is each state; the walk
// starts at the identity, which has Lehmer rank 0.
inline void convolve_step(const std::vector<std::uint32_t>& targets,
                          std::size_t fan, std::vector<Int>& counts) {
  std::vector<Int> next(counts.size());
  for (std::uint64_t s = 0; s < counts.size(); ++s) {
    if (counts[s] == 0) continue;
    for (std::size_t j = 0; j < fan; ++j)
      next[targets[s * fan + j]] += counts[s];
  }
  counts.swap(next);
}

}  // namespace shuffle_detail

// Sparse transition row: C(n,k) distinct states, each with probability
// 1/C(n,k), sorted by target rank.
inline std::vector<std::pair<std::uint64_t, Rat>> transition_row(
    const ShuffleChain& chain, std::uint64_t state_rank) {
  if (state_rank >= chain.state_count())
    throw domain_error("transition_row: state rank out of range");
  Permutation state = lehmer_unrank(chain.degree, state_rank);
  std::vector<std::pair<std::uint64_t, Rat>> row;
  row.reserve(chain.interleavers.size());
  Rat p = chain.step_probability();
  for (const Permutation& sigma : chain.interleavers)
    row.emplace_back(lehmer_rank(compose(state, sigma)), p);
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

// Probability of sitting at the identity after r steps from the identity.
inline Rat return_probability(const ShuffleChain& chain, unsigned r) {
  if (r == 0) return 1;
  auto targets = shuffle_detail::target_table(chain);
  std::vector<Int> counts(chain.state_count());
  counts[0] = 1;
  for (unsigned step = 0; step < r; ++step)
    shuffle_detail::convolve_step(targets, chain.interleavers.size(), counts);
  return Rat(counts[0]) /
         rat_pow(Rat(Int(chain.interleavers.size())), r);
}

// Tr(M^r), exactly; by transitivity of the walk this is n! times the
// return probability.
inline Rat trace_power(const ShuffleChain& chain, unsigned r) {
  return Rat(factorial(chain.degree)) * return_probability(chain, r);
}

struct SpectrumCheck {
  unsigned r_max = 0;
  Rat max_difference;  // max over r of |Tr(M^r) - sum_w (F_k(w)/C)^r|
  bool exact = false;  // every tested difference was exactly zero
};

// Power sums of the claimed eigenvalue multiset {F_k(w)/C(n,k) : w in S_n}
// against exact traces of the walk, for r = 1..r_max.
inline SpectrumCheck eigenvalue_multiset_check(const ShuffleChain& chain,
                                               unsigned r_max) {
  const unsigned n = chain.degree;
  const Rat fan = Rat(Int(chain.interleavers.size()));

  std::vector<std::pair<Int, Int>> classes;  // (class size, F_k on class)
  for_each_cycle_type(n, [&](std::span<const std::uint32_t> counts) {
    CycleType type{counts};
    classes.emplace_back(conjugacy_class_size(type),
                         fixed_ksets(type, chain.k));
  });

  auto targets = shuffle_detail::target_table(chain);
  std::vector<Int> counts(chain.state_count());
  counts[0] = 1;

  SpectrumCheck report;
  report.r_max = r_max;
  report.max_difference = 0;
  report.exact = true;
  Rat fan_power = 1;
  for (unsigned r = 1; r <= r_max; ++r) {
    shuffle_detail::convolve_step(targets, chain.interleavers.size(), counts);
    fan_power *= fan;
    Rat trace = Rat(factorial(n)) * (Rat(counts[0]) / fan_power);
    Rat power_sum = 0;
    for (const auto& [size, fixed] : classes)
      power_sum += Rat(size) * rat_pow(Rat(fixed), r);
    power_sum /= fan_power;
    Rat diff = trace - power_sum;
    if (diff < 0) diff = -diff;
    if (diff > report.max_difference) report.max_difference = diff;
    if (diff != 0) report.exact = false;
  }
  return report;
}

}  // namespace permfix
