#pragma once

#include "permfix/numbers.hpp"
#include "permfix/partitions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace permfix {

// Lehmer ranks live in 64 bits up to 20! only.
inline constexpr unsigned kMaxRankDegree = 20;

// One-line notation on 0-based points: image[i] = w(i).
struct Permutation {
  std::vector<std::uint32_t> image;

  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> img) : image(std::move(img)) {}

  unsigned degree() const { return static_cast<unsigned>(image.size()); }
  std::uint32_t operator()(std::uint32_t i) const { return image[i]; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

inline bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.image.size(), false);
  for (std::uint32_t v : p.image) {
    if (v >= p.image.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline Permutation identity_permutation(unsigned n) {
  Permutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 0u);
  return p;
}

// (a * b)(i) = a(b(i)): b acts first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw domain_error("compose: degree mismatch");
  Permutation c;
  c.image.resize(a.degree());
  for (std::uint32_t i = 0; i < a.degree(); ++i)
    c.image[i] = a.image[b.image[i]];
  return c;
}

inline Permutation inverse(const Permutation& p) {
  Permutation q;
  q.image.resize(p.degree());
  for (std::uint32_t i = 0; i < p.degree(); ++i) q.image[p.image[i]] = i;
  return q;
}

inline unsigned fixed_point_count(const Permutation& p) {
  unsigned c = 0;
  for (std::uint32_t i = 0; i < p.degree(); ++i)
    if (p.image[i] == i) ++c;
  return c;
}

inline bool is_derangement(const Permutation& p) {
  return fixed_point_count(p) == 0;
}

inline CycleType cycle_type_of(const Permutation& p) {
  std::vector<std::uint32_t> mult(p.degree(), 0);
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (std::uint32_t j = i; !seen[j]; j = p.image[j]) {
      seen[j] = true;
      ++len;
    }
    ++mult[len - 1];
  }
  return CycleType(std::move(mult));
}

// Canonical class representative: cycles laid out on consecutive symbols in
// decreasing length order, each cycle mapping x -> x+1 cyclically.
inline Permutation representative(const CycleType& t) {
  Permutation p;
  p.image.reserve(t.degree());
  std::uint32_t base = 0;
  for (unsigned len : t.parts()) {
    for (unsigned off = 1; off < len; ++off) p.image.push_back(base + off);
    p.image.push_back(base);
    base += len;
  }
  return p;
}

// D_n via D_n = (n-1)(D_{n-1} + D_{n-2}).
inline Int derangement_count(unsigned n) {
  Int prev2 = 1, prev1 = 0;  // D_0, D_1
  if (n == 0) return prev2;
  if (n == 1) return prev1;
  Int d = 0;
  for (unsigned m = 2; m <= n; ++m) {
    d = Int(m - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = d;
  }
  return d;
}

namespace detail {
inline const std::uint64_t* rank_factorials() {
  static const auto table = [] {
    std::array<std::uint64_t, kMaxRankDegree + 1> t{};
    t[0] = 1;
    for (unsigned i = 1; i <= kMaxRankDegree; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table.data();
}
}  // namespace detail

// Position in the lexicographic order of S_n, 0-based; the identity has rank
// 0 and ranks increase in step with std::next_permutation.
inline std::uint64_t lehmer_rank(const Permutation& p) {
  unsigned n = p.degree();
  if (n > kMaxRankDegree)
    throw capacity_error("lehmer_rank: degree exceeds " +
                         std::to_string(kMaxRankDegree));
  const std::uint64_t* fact = detail::rank_factorials();
  std::uint64_t rank = 0;
  for (unsigned i = 0; i < n; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < n; ++j)
      if (p.image[j] < p.image[i]) ++smaller;
    rank += smaller * fact[n - 1 - i];
  }
  return rank;
}

inline Permutation lehmer_unrank(unsigned n, std::uint64_t rank) {
  if (n > kMaxRankDegree)
    throw capacity_error("lehmer_unrank: degree exceeds " +
                         std::to_string(kMaxRankDegree));
  const std::uint64_t* fact = detail::rank_factorials();
  if (rank >= fact[n]) throw domain_error("lehmer_unrank: rank out of range");
  std::vector<std::uint32_t> unused(n);
  std::iota(unused.begin(), unused.end(), 0u);
  Permutation p;
  p.image.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t f = fact[n - 1 - i];
    auto digit = static_cast<std::size_t>(rank / f);
    rank %= f;
    p.image.push_back(unused[digit]);
    unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return p;
}

// Visits all of S_n in lexicographic (= Lehmer rank) order.
template <typename Fn>
void for_each_permutation(unsigned n, Fn fn) {
  Permutation p = identity_permutation(n);
  do {
    fn(const_cast<const Permutation&>(p));
  } while (std::next_permutation(p.image.begin(), p.image.end()));
}

// 1-based one-line notation, e.g. "2 1 4 3".
inline std::string one_line(const Permutation& p) {
  std::string s;
  for (std::uint32_t v : p.image) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v + 1);
  }
  return s;
}

}  // namespace permfix
