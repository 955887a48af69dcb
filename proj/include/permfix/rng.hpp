#pragma once

#include "permfix/numbers.hpp"

#include <cmath>
#include <cstdint>
#include <random>

// Seedable randomness with a stable cross-platform stream. The raw source
// is std::mt19937_64, whose output sequence is fixed by the standard;
// bounded draws use rejection so they are exactly uniform, unit draws take
// the top 53 bits, and Poisson draws invert the CDF by sequential search.

namespace permfix {

// One step of the splitmix64 sequence; used to derive substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// index-th element of the splitmix64 stream seeded by master: substreams
// for the same master are decorrelated and independent of thread layout.
inline std::uint64_t substream_seed(std::uint64_t master,
                                    std::uint64_t index) {
  std::uint64_t state = master + index * 0x9e3779b97f4a7c15ULL;
  return splitmix64(state);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, bound) by rejection; never biased.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw domain_error("Rng::below: bound must be positive");
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  // Uniform on [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Poisson(lambda) by CDF inversion; sequential search is exact and fast
  // for the lambda <= 1 draws used here.
  unsigned poisson(double lambda) {
    if (!(lambda > 0.0))
      throw domain_error("Rng::poisson: lambda must be positive");
    double u = unit();
    double term = std::exp(-lambda);
    double cumulative = term;
    unsigned m = 0;
    while (u >= cumulative) {
      ++m;
      term *= lambda / m;
      cumulative += term;
      if (m > 1000) break;  // u in the far tail; term has underflowed
    }
    return m;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace permfix
