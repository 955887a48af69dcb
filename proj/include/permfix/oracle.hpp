#pragma once

#include "permfix/numbers.hpp"
#include "permfix/partitions.hpp"
#include "permfix/permutation.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

// Ground truth by direct enumeration. Everything here works on explicit
// permutations and explicit acted-on sets; none of the counting formulas
// from the rest of the library are consulted, so agreement is evidence.

namespace permfix {

inline constexpr unsigned kOracleDegreeCap = 8;

enum class OracleAction { KSets, Matchings, Blocks };

struct ActionTable {
  unsigned degree = 0;
  OracleAction action = OracleAction::KSets;
  unsigned parameter = 0;          // k for KSets, block size for Blocks
  std::uint64_t set_size = 0;      // |Omega|
  std::vector<std::uint64_t> counts;  // fixed points, indexed by Lehmer rank
};

namespace oracle_detail {

inline void check_oracle_degree(unsigned n) {
  if (n > kOracleDegreeCap)
    throw capacity_error("oracle degree " + std::to_string(n) + " exceeds " +
                         std::to_string(kOracleDegreeCap));
}

// All k-subsets as bitmasks.
inline std::vector<std::uint32_t> all_ksets(unsigned n, unsigned k) {
  std::vector<std::uint32_t> out;
  std::vector<unsigned> pick(k);
  auto rec = [&](auto&& self, unsigned next, unsigned depth) -> void {
    if (depth == k) {
      std::uint32_t mask = 0;
      for (unsigned p : pick) mask |= 1u << p;
      out.push_back(mask);
      return;
    }
    for (unsigned v = next; v < n; ++v) {
      pick[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// All perfect matchings as partner arrays (partner[i] = mate of i).
inline std::vector<std::vector<std::uint32_t>> all_matchings(unsigned n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> partner(n, n);  // n = unmatched
  auto rec = [&](auto&& self) -> void {
    unsigned first = 0;
    while (first < n && partner[first] != n) ++first;
    if (first == n) {
      out.push_back(partner);
      return;
    }
    for (unsigned mate = first + 1; mate < n; ++mate) {
      if (partner[mate] != n) continue;
      partner[first] = mate;
      partner[mate] = first;
      self(self);
      partner[first] = n;
      partner[mate] = n;
    }
  };
  rec(rec);
  return out;
}

// All partitions of {0..n-1} into n/a blocks of size a, canonicalized as a
// block-id array where ids appear in order of first appearance.
inline std::vector<std::vector<std::uint32_t>> all_block_systems(unsigned n,
                                                                 unsigned a) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> id(n, n);
  auto rec = [&](auto&& self, std::uint32_t next_id) -> void {
    unsigned first = 0;
    while (first < n && id[first] != n) ++first;
    if (first == n) {
      out.push_back(id);
      return;
    }
    id[first] = next_id;
    std::vector<unsigned> free;
    for (unsigned v = first + 1; v < n; ++v)
      if (id[v] == n) free.push_back(v);
    std::vector<unsigned> pick(a - 1);
    auto choose = [&](auto&& chooser, unsigned from, unsigned depth) -> void {
      if (depth == a - 1) {
        for (unsigned v : pick) id[v] = next_id;
        self(self, next_id + 1);
        for (unsigned v : pick) id[v] = n;
        return;
      }
      for (unsigned idx = from; idx < free.size(); ++idx) {
        pick[depth] = free[idx];
        chooser(chooser, idx + 1, depth + 1);
      }
    };
    if (a == 1)
      self(self, next_id + 1);
    else
      choose(choose, 0, 0);
    id[first] = n;
  };
  rec(rec, 0);
  return out;
}

inline std::vector<std::uint32_t> normalize_block_ids(
    std::vector<std::uint32_t> id) {
  std::vector<std::uint32_t> remap(id.size(), UINT32_MAX);
  std::uint32_t next = 0;
  for (auto& v : id) {
    if (remap[v] == UINT32_MAX) remap[v] = next++;
    v = remap[v];
  }
  return id;
}

}  // namespace oracle_detail

// Walks all n! permutations and counts, for each one, how many elements of
// the acted-on set it fixes.
inline ActionTable brute_force_fixed_points(unsigned n, OracleAction action,
                                            unsigned parameter = 0) {
  using namespace oracle_detail;
  check_oracle_degree(n);
  ActionTable table;
  table.degree = n;
  table.action = action;
  table.parameter = parameter;

  if (action == OracleAction::KSets) {
    if (parameter == 0 || parameter > n)
      throw domain_error("brute_force_fixed_points: need 1 <= k <= n");
    auto sets = all_ksets(n, parameter);
    table.set_size = sets.size();
    for_each_permutation(n, [&](const Permutation& w) {
      std::uint64_t fixed = 0;
      for (std::uint32_t mask : sets) {
        std::uint32_t img = 0;
        for (unsigned i = 0; i < n; ++i)
          if (mask & (1u << i)) img |= 1u << w.image[i];
        fixed += img == mask;
      }
      table.counts.push_back(fixed);
    });
  } else if (action == OracleAction::Matchings) {
    if (n % 2 != 0)
      throw domain_error("brute_force_fixed_points: matchings need even n");
    auto matchings = all_matchings(n);
    table.set_size = matchings.size();
    for_each_permutation(n, [&](const Permutation& w) {
      std::uint64_t fixed = 0;
      for (const auto& partner : matchings) {
        bool ok = true;
        for (unsigned i = 0; i < n && ok; ++i)
          ok = w.image[partner[i]] == partner[w.image[i]];
        fixed += ok;
      }
      table.counts.push_back(fixed);
    });
  } else {
    if (parameter == 0 || n % parameter != 0)
      throw domain_error("brute_force_fixed_points: blocks need a | n");
    auto systems = all_block_systems(n, parameter);
    table.set_size = systems.size();
    std::vector<std::uint32_t> img(n);
    for_each_permutation(n, [&](const Permutation& w) {
      std::uint64_t fixed = 0;
      for (const auto& id : systems) {
        for (unsigned i = 0; i < n; ++i) img[w.image[i]] = id[i];
        fixed += normalize_block_ids(img) == id;
      }
      table.counts.push_back(fixed);
    });
  }
  return table;
}

// Empirical law of the fixed-point count under the uniform measure.
inline std::map<Int, Rat> induced_distribution(const ActionTable& table) {
  std::map<Int, Rat> law;
  Rat weight(1, factorial(table.degree));
  for (std::uint64_t c : table.counts) law[Int(c)] += weight;
  return law;
}

// Fixed points of a class C on k-subsets, from subgroup data only: with
// H the setwise stabilizer of {0..k-1} (= S_k x S_{n-k}),
//
//   (1)  |C n H| |X| / |C|
//   (3)  |C_G(g)| sum_i 1/|C_H(g_i)|    over H-classes of C n H,
//
// with every order obtained by direct counting, not formulas.
struct ClassIntersectionRow {
  CycleType type;
  Int class_size;         // |C|
  Int intersection_size;  // |C n H|
  Rat quotient_form;      // (1)
  Rat centralizer_form;   // (3)
};

inline std::vector<ClassIntersectionRow> fixed_points_via_class_intersection(
    unsigned n, unsigned k) {
  oracle_detail::check_oracle_degree(n);
  if (k == 0 || 2 * k > n)
    throw domain_error(
        "fixed_points_via_class_intersection: need 1 <= k <= n/2");

  std::vector<Permutation> subgroup;  // H = stabilizer of {0..k-1}
  for_each_permutation(n, [&](const Permutation& w) {
    bool stable = true;
    for (unsigned i = 0; i < k && stable; ++i) stable = w.image[i] < k;
    if (stable) subgroup.push_back(w);
  });

  std::map<std::vector<unsigned>, std::vector<Permutation>> classes;
  for_each_permutation(n, [&](const Permutation& w) {
    classes[cycle_type_of(w).parts()].push_back(w);
  });

  auto centralizer_count = [](const std::vector<Permutation>& group,
                              const Permutation& g) {
    Int count = 0;
    for (const Permutation& h : group)
      if (compose(h, g) == compose(g, h)) ++count;
    return count;
  };

  std::vector<Permutation> group;
  for_each_permutation(n, [&](const Permutation& w) { group.push_back(w); });

  std::vector<ClassIntersectionRow> rows;
  const Int set_size = binomial(n, k);
  for (auto& [parts, members] : classes) {
    ClassIntersectionRow row;
    row.type = cycle_type_of(members.front());
    row.class_size = Int(members.size());

    std::vector<Permutation> meet;
    for (const Permutation& h : subgroup) {
      bool stable = true;
      for (unsigned i = 0; i < k && stable; ++i) stable = h.image[i] < k;
      if (stable && cycle_type_of(h).parts() == parts) meet.push_back(h);
    }
    row.intersection_size = Int(meet.size());
    row.quotient_form = Rat(row.intersection_size * set_size, row.class_size);

    // Split C n H into H-conjugacy classes by orbit closure.
    std::map<Permutation, std::size_t> position;
    for (std::size_t i = 0; i < meet.size(); ++i) position[meet[i]] = i;
    std::vector<bool> used(meet.size(), false);
    Rat sum = 0;
    Int covered = 0;
    for (std::size_t i = 0; i < meet.size(); ++i) {
      if (used[i]) continue;
      std::vector<std::size_t> orbit{i};
      used[i] = true;
      for (std::size_t o = 0; o < orbit.size(); ++o)
        for (const Permutation& h : subgroup) {
          Permutation conj = compose(compose(h, meet[orbit[o]]), inverse(h));
          auto it = position.find(conj);
          if (it == position.end())
            throw std::logic_error("H-conjugation left the intersection");
          if (!used[it->second]) {
            used[it->second] = true;
            orbit.push_back(it->second);
          }
        }
      covered += Int(orbit.size());
      sum += Rat(1, centralizer_count(subgroup, meet[i]));
    }
    if (covered != row.intersection_size)
      throw std::logic_error("H-class decomposition lost elements");
    row.centralizer_form =
        Rat(centralizer_count(group, members.front())) * sum;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace permfix
