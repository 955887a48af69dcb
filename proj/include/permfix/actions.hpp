#pragma once

#include "permfix/numbers.hpp"
#include "permfix/partitions.hpp"
#include "permfix/permutation.hpp"

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace permfix {

// Number of k-subsets fixed setwise by a permutation with the given cycle
// counts:
//
//   F_k = sum over partitions lambda of k of prod_i C(counts[i-1], n_i)
//
// where n_i is the multiplicity of part i in lambda (a fixed k-set is a
// disjoint union of whole cycles). The evaluator caches the partition list
// of k so it can be applied to many count vectors; counts beyond the span
// are zero. The same polynomial evaluated on independent Poisson counts is
// the limiting law, so this is shared with the limit engine.
class KSetEvaluator {
 public:
  explicit KSetEvaluator(unsigned k) : k_(k) {
    if (k == 0) throw domain_error("KSetEvaluator: k must be positive");
    for_each_cycle_type(k, [&](std::span<const std::uint32_t> m) {
      lambdas_.emplace_back(m.begin(), m.end());
    });
  }

  unsigned k() const { return k_; }

  Int operator()(std::span<const std::uint32_t> counts) const {
    Int total = 0;
    for (const auto& lambda : lambdas_) {
      Int term = 1;
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] == 0) continue;
        std::uint32_t avail = i < counts.size() ? counts[i] : 0;
        if (avail < lambda[i]) {
          term = 0;
          break;
        }
        term *= binomial(Int(avail), lambda[i]);
      }
      total += term;
    }
    return total;
  }

 private:
  unsigned k_;
  std::vector<std::vector<std::uint32_t>> lambdas_;
};

inline Int fixed_ksets(const CycleType& t, unsigned k) {
  if (k == 0 || k > t.degree())
    throw domain_error("fixed_ksets: need 1 <= k <= degree");
  return KSetEvaluator(k)(t.multiplicities());
}

namespace detail {

// Per-part-size factors of the fixed-matching count. Odd cycle lengths can
// only be matched against an equal-length partner, s ways per pair, so an
// odd count of them kills the product; even cycle lengths additionally own
// exactly one invariant internal matching (the antipodal one), giving
//   F_s(a) = sum_m (2m-1)!! C(a,2m) s^m
// over the number m of cross-matched pairs.
inline Int matchings_factor(unsigned s, std::uint32_t a) {
  if (a == 0) return 1;
  if (s % 2 == 1) {
    if (a % 2 == 1) return 0;
    return odd_double_factorial(a / 2) * int_pow(Int(s), a / 2);
  }
  Int f = 0;
  for (std::uint32_t m = 0; m <= a / 2; ++m)
    f += odd_double_factorial(m) * binomial(Int(a), 2 * m) * int_pow(Int(s), m);
  return f;
}

inline Int fixed_matchings_counts(std::span<const std::uint32_t> mult) {
  Int f = 1;
  for (std::size_t i = 0; i < mult.size() && f != 0; ++i)
    f *= matchings_factor(static_cast<unsigned>(i + 1), mult[i]);
  return f;
}

}  // namespace detail

// Fixed points on the perfect matchings of the degree-2n set.
inline Int fixed_matchings(const CycleType& t) {
  if (t.degree() % 2 != 0)
    throw domain_error("fixed_matchings: degree must be even");
  return detail::fixed_matchings_counts(t.multiplicities());
}

// Orbits on 2-sets whose two symbols share a cycle: sum over cycles of
// floor(len/2), i.e. m/2 - (number of odd-length cycles)/2.
inline Rat orbits_on_2sets_within_cycles(const CycleType& t) {
  Rat odd = 0;
  const auto& m = t.multiplicities();
  for (std::size_t i = 0; i < m.size(); i += 2) odd += m[i];
  return Rat(t.degree(), 2) - odd / 2;
}

// Full cycle count of the induced permutation on unordered pairs, computed
// from the canonical representative rather than a closed form.
inline std::uint64_t total_cycles_on_2sets(const CycleType& t) {
  const unsigned m = t.degree();
  if (m < 2) throw domain_error("total_cycles_on_2sets: degree must be >= 2");
  Permutation w = representative(t);
  auto pair_index = [m](std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(a) * (2 * m - a - 1) / 2 + (b - a - 1);
  };
  const std::size_t pairs = static_cast<std::size_t>(m) * (m - 1) / 2;
  std::vector<std::uint32_t> induced(pairs);
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = a + 1; b < m; ++b)
      induced[pair_index(a, b)] =
          static_cast<std::uint32_t>(pair_index(w.image[a], w.image[b]));
  std::uint64_t cycles = 0;
  std::vector<bool> seen(pairs, false);
  for (std::size_t i = 0; i < pairs; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = induced[j]) seen[j] = true;
  }
  return cycles;
}

// Involutions of S_m split by parity: a(m) inside A_m (identity included),
// b(m) outside. Adding point m either stays fixed or joins one of m-1
// transpositions, whence a(m) = a(m-1) + (m-1) b(m-2) and symmetrically.
struct InvolutionCounts {
  Int a;
  Int b;
};

inline InvolutionCounts involution_counts(unsigned m) {
  if (m == 0) throw domain_error("involution_counts: m must be positive");
  std::vector<Int> a(m + 1), b(m + 1);
  a[0] = 1;
  b[0] = 0;
  if (m >= 1) {
    a[1] = 1;
    b[1] = 0;
  }
  for (unsigned i = 2; i <= m; ++i) {
    a[i] = a[i - 1] + Int(i - 1) * b[i - 2];
    b[i] = b[i - 1] + Int(i - 1) * a[i - 2];
  }
  return {a[m], b[m]};
}

}  // namespace permfix
