#pragma once

#include "permfix/numbers.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace permfix {

// Enumerating S_n class data is linear in the partition count p(n);
// p(80) = 15,796,476 keeps exact-rational aggregation in the seconds range,
// so 80 is the default ceiling. Every entry point that walks cycle types
// takes the cap explicitly for callers that want to raise it.
inline constexpr unsigned kDefaultDegreeCap = 80;

// Cycle type of a permutation in S_n, stored as part multiplicities:
// count(i) = number of i-cycles, with sum over i of i*count(i) = n.
// Degree 0 (the empty type) is legal.
class CycleType {
 public:
  CycleType() = default;

  explicit CycleType(std::vector<std::uint32_t> multiplicities)
      : mult_(std::move(multiplicities)) {
    while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
    for (std::size_t i = 0; i < mult_.size(); ++i)
      degree_ += static_cast<unsigned>((i + 1) * mult_[i]);
  }

  explicit CycleType(std::span<const std::uint32_t> multiplicities)
      : CycleType(std::vector<std::uint32_t>(multiplicities.begin(),
                                             multiplicities.end())) {}

  static CycleType single_cycle(unsigned n) {
    if (n == 0) throw domain_error("single_cycle: degree must be positive");
    std::vector<std::uint32_t> m(n, 0);
    m[n - 1] = 1;
    return CycleType(std::move(m));
  }

  unsigned degree() const { return degree_; }

  // Multiplicity of part size i (1-based); zero beyond the stored range.
  std::uint32_t count(unsigned i) const {
    return (i >= 1 && i <= mult_.size()) ? mult_[i - 1] : 0;
  }

  const std::vector<std::uint32_t>& multiplicities() const { return mult_; }

  // Parts in decreasing order, e.g. 3+1+1 -> {3,1,1}.
  std::vector<unsigned> parts() const {
    std::vector<unsigned> p;
    for (unsigned i = static_cast<unsigned>(mult_.size()); i >= 1; --i)
      for (std::uint32_t c = 0; c < mult_[i - 1]; ++c) p.push_back(i);
    return p;
  }

  // "3+1+1" (degree 0 renders as "0").
  std::string to_string() const {
    if (degree_ == 0) return "0";
    std::string s;
    for (unsigned part : parts()) {
      if (!s.empty()) s += '+';
      s += std::to_string(part);
    }
    return s;
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<std::uint32_t> mult_;
  unsigned degree_ = 0;
};

namespace detail {

template <typename Fn>
void enum_parts(unsigned remaining, unsigned max_part,
                std::vector<std::uint32_t>& mult, Fn& fn) {
  if (remaining == 0) {
    fn(std::span<const std::uint32_t>(mult));
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    ++mult[part - 1];
    enum_parts(remaining - part, part, mult, fn);
    --mult[part - 1];
  }
}

inline void check_degree(unsigned n, unsigned degree_cap) {
  if (n > degree_cap)
    throw capacity_error("degree " + std::to_string(n) + " exceeds cap " +
                         std::to_string(degree_cap));
}

}  // namespace detail

// Visits every cycle type of S_n (equivalently every partition of n) in
// lexicographically decreasing part-list order: 4, 3+1, 2+2, 2+1+1, 1+1+1+1.
// The span is indexed by part size - 1 and is only valid during the call.
template <typename Fn>
void for_each_cycle_type(unsigned n, Fn fn,
                         unsigned degree_cap = kDefaultDegreeCap) {
  detail::check_degree(n, degree_cap);
  std::vector<std::uint32_t> mult(n, 0);
  if (n == 0) {
    fn(std::span<const std::uint32_t>(mult));
    return;
  }
  detail::enum_parts(n, n, mult, fn);
}

// Same walk restricted to visit indices congruent to offset mod stride, for
// splitting an aggregation across threads without materializing the list.
template <typename Fn>
void for_each_cycle_type_strided(unsigned n, unsigned stride, unsigned offset,
                                 Fn fn,
                                 unsigned degree_cap = kDefaultDegreeCap) {
  if (stride == 0 || offset >= stride)
    throw domain_error("for_each_cycle_type_strided: need offset < stride");
  std::uint64_t index = 0;
  for_each_cycle_type(
      n,
      [&](std::span<const std::uint32_t> mult) {
        if (index++ % stride == offset) fn(mult);
      },
      degree_cap);
}

inline std::vector<CycleType> cycle_types(unsigned n,
                                          unsigned degree_cap = kDefaultDegreeCap) {
  std::vector<CycleType> out;
  for_each_cycle_type(
      n, [&](std::span<const std::uint32_t> m) { out.emplace_back(m); },
      degree_cap);
  return out;
}

// p(n) by the pentagonal-number recurrence.
inline std::uint64_t partition_count(unsigned n,
                                     unsigned degree_cap = kDefaultDegreeCap) {
  detail::check_degree(n, degree_cap);
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    long long acc = 0;
    for (unsigned k = 1;; ++k) {
      unsigned g1 = k * (3 * k - 1) / 2;
      unsigned g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long long term = p[m - g1] + (g2 <= m ? p[m - g2] : 0);
      acc += (k % 2 == 1) ? term : -term;
    }
    p[m] = acc;
  }
  return static_cast<std::uint64_t>(p[n]);
}

// |C_{S_n}(w)| = prod_i i^{a_i} a_i! for w of the given type.
inline Int centralizer_order(std::span<const std::uint32_t> mult) {
  Int z = 1;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] != 0) z *= int_pow(Int(i + 1), mult[i]) * factorial(mult[i]);
  return z;
}

inline Int centralizer_order(const CycleType& t) {
  return centralizer_order(std::span<const std::uint32_t>(t.multiplicities()));
}

// Probability that a uniform element of S_n has this cycle type.
inline Rat class_probability(const CycleType& t) {
  return Rat(1, centralizer_order(t));
}

inline Int conjugacy_class_size(const CycleType& t) {
  return factorial(t.degree()) / centralizer_order(t);
}

// Law of the cycle count of a uniform element of S_a: entry r-1 is the
// probability of exactly r cycles, c(a,r)/a! with c(a,r) the unsigned
// Stirling numbers of the first kind, read off x(x+1)...(x+a-1).
inline std::vector<Rat> cycle_count_proportions(unsigned a) {
  if (a == 0) throw domain_error("cycle_count_proportions: a must be positive");
  std::vector<Int> c(a + 1, 0);
  c[0] = 1;
  for (unsigned m = 0; m < a; ++m) {
    for (unsigned d = std::min<unsigned>(m + 1, a); d >= 1; --d)
      c[d] = c[d - 1] + Int(m) * c[d];
    c[0] *= m;
  }
  Int fact = factorial(a);
  std::vector<Rat> out(a);
  for (unsigned r = 1; r <= a; ++r) out[r - 1] = Rat(c[r], fact);
  return out;
}

// sum over partitions lambda of a, with n_i parts of size i, of
// 1 / prod_i ((i*k)^{n_i} n_i!). Closed form: (1/k)(1/k+1)...(1/k+a-1) / a!.
// The unit tests replay the partition sum term by term against this.
inline Rat rising_factorial_sum(unsigned a, unsigned k) {
  if (a == 0 || k == 0)
    throw domain_error("rising_factorial_sum: need a >= 1 and k >= 1");
  Rat prod = 1;
  Rat x(1, static_cast<int>(k));
  for (unsigned j = 0; j < a; ++j) prod *= x + j;
  return prod / Rat(factorial(a));
}

}  // namespace permfix
