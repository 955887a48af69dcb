#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "permfix/numbers.hpp"
#include "permfix/permutation.hpp"
#include "permfix/rng.hpp"

namespace permfix {

inline constexpr unsigned kChoiceTreeDegreeCap = 6;

// Swap-target rule applied at each fixed point of the repair pass.
enum class PayneVariant {
  SwapWithOther,  // j uniform over the n-1 positions != i
  SwapWithLater,  // j uniform over positions > i; the last position can stay fixed
  SwapWithAny,    // j uniform over all n positions; j = i leaves the fixed point
};

enum class PayneStart { Uniform, Identity };

inline Permutation random_permutation(unsigned n, Rng& rng) {
  if (n == 0) throw domain_error("random_permutation: degree must be positive");
  Permutation w = identity_permutation(n);
  for (std::uint32_t i = n - 1; i > 0; --i) {
    auto j = static_cast<std::uint32_t>(rng.below(i + 1));
    std::swap(w.image[i], w.image[j]);
  }
  return w;
}

inline Permutation random_permutation(unsigned n, std::uint64_t seed) {
  Rng rng(seed);
  return random_permutation(n, rng);
}

inline Permutation rejection_derangement(unsigned n, Rng& rng,
                                         std::uint64_t* attempts = nullptr) {
  if (n < 2) throw domain_error("rejection_derangement: no derangements below degree 2");
  std::uint64_t count = 0;
  for (;;) {
    Permutation w = random_permutation(n, rng);
    ++count;
    if (is_derangement(w)) {
      if (attempts != nullptr) *attempts = count;
      return w;
    }
  }
}

inline Permutation rejection_derangement(unsigned n, std::uint64_t seed,
                                         std::uint64_t* attempts = nullptr) {
  Rng rng(seed);
  return rejection_derangement(n, rng, attempts);
}

// One left-to-right repair pass: every current fixed point is swapped with a
// randomly chosen partner. Swapping images at i and j != i removes the fixed
// point at i and cannot create one elsewhere, so the default rule always
// lands on a derangement.
inline Permutation payne_pass(Permutation w, Rng& rng,
                              PayneVariant variant = PayneVariant::SwapWithOther) {
  const std::uint32_t n = w.degree();
  for (std::uint32_t i = 0; i < n; ++i) {
    if (w.image[i] != i) continue;
    std::uint32_t j = i;
    switch (variant) {
      case PayneVariant::SwapWithOther:
        j = static_cast<std::uint32_t>(rng.below(n - 1));
        if (j >= i) ++j;
        break;
      case PayneVariant::SwapWithLater:
        if (i + 1 == n) continue;
        j = i + 1 + static_cast<std::uint32_t>(rng.below(n - 1 - i));
        break;
      case PayneVariant::SwapWithAny:
        j = static_cast<std::uint32_t>(rng.below(n));
        break;
    }
    std::swap(w.image[i], w.image[j]);
  }
  return w;
}

inline Permutation payne_derangement(unsigned n, Rng& rng,
                                     PayneVariant variant = PayneVariant::SwapWithOther) {
  if (n < 2) throw domain_error("payne_derangement: degree must be at least 2");
  return payne_pass(random_permutation(n, rng), rng, variant);
}

inline Permutation payne_derangement(unsigned n, std::uint64_t seed,
                                     PayneVariant variant = PayneVariant::SwapWithOther) {
  Rng rng(seed);
  return payne_derangement(n, rng, variant);
}

// Exact output law of the repair pass, with every probability a rational.
// Ratios compare against the uniform law on derangements; a derangement the
// pass can never produce drives min_ratio to zero.
struct ChoiceTreeResult {
  std::map<Permutation, Rat> distribution;
  Rat total = 0;
  Rat non_derangement_mass = 0;
  Rat max_ratio = 0;
  Rat min_ratio = 0;
  bool uniform = false;
};

namespace sampler_detail {

template <typename Sink>
void walk_choices(Permutation w, std::uint32_t from, const Rat& weight,
                  PayneVariant variant, Sink& sink) {
  const std::uint32_t n = w.degree();
  for (std::uint32_t i = from; i < n; ++i) {
    if (w.image[i] != i) continue;
    switch (variant) {
      case PayneVariant::SwapWithOther: {
        Rat share = weight / (n - 1);
        for (std::uint32_t j = 0; j < n; ++j) {
          if (j == i) continue;
          Permutation next = w;
          std::swap(next.image[i], next.image[j]);
          walk_choices(std::move(next), i + 1, share, variant, sink);
        }
        return;
      }
      case PayneVariant::SwapWithLater: {
        if (i + 1 == n) continue;
        Rat share = weight / (n - 1 - i);
        for (std::uint32_t j = i + 1; j < n; ++j) {
          Permutation next = w;
          std::swap(next.image[i], next.image[j]);
          walk_choices(std::move(next), i + 1, share, variant, sink);
        }
        return;
      }
      case PayneVariant::SwapWithAny: {
        Rat share = weight / n;
        for (std::uint32_t j = 0; j < n; ++j) {
          Permutation next = w;
          std::swap(next.image[i], next.image[j]);
          walk_choices(std::move(next), i + 1, share, variant, sink);
        }
        return;
      }
    }
  }
  sink(w, weight);
}

}  // namespace sampler_detail

inline ChoiceTreeResult payne_exact_distribution(
    unsigned n, PayneStart start,
    PayneVariant variant = PayneVariant::SwapWithOther) {
  if (n < 2) throw domain_error("payne_exact_distribution: degree must be at least 2");
  if (n > kChoiceTreeDegreeCap)
    throw capacity_error("payne_exact_distribution: choice tree is capped at degree 6");

  ChoiceTreeResult result;
  auto sink = [&result](const Permutation& w, const Rat& weight) {
    result.distribution[w] += weight;
    result.total += weight;
  };

  if (start == PayneStart::Identity) {
    sampler_detail::walk_choices(identity_permutation(n), 0, Rat(1), variant, sink);
  } else {
    Rat share = Rat(1) / Rat(factorial(n));
    for_each_permutation(n, [&](const Permutation& w) {
      sampler_detail::walk_choices(w, 0, share, variant, sink);
    });
  }

  Rat uniform_mass = Rat(1) / Rat(derangement_count(n));
  bool first = true;
  for_each_permutation(n, [&](const Permutation& w) {
    if (!is_derangement(w)) return;
    auto it = result.distribution.find(w);
    Rat mass = it == result.distribution.end() ? Rat(0) : it->second;
    Rat ratio = mass / uniform_mass;
    if (first || ratio > result.max_ratio) result.max_ratio = ratio;
    if (first || ratio < result.min_ratio) result.min_ratio = ratio;
    first = false;
  });
  for (const auto& [w, mass] : result.distribution)
    if (!is_derangement(w)) result.non_derangement_mass += mass;

  result.uniform = result.non_derangement_mass == 0 &&
                   result.max_ratio == 1 && result.min_ratio == 1;
  return result;
}

}  // namespace permfix
