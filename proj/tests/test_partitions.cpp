#include "permfix/partitions.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace permfix;

namespace {

// A000041.
const std::uint64_t kPartitionCounts[] = {
    1,  1,  2,  3,  5,   7,   11,  15,  22,  30,   42,   56,   77,  101,
    135, 176, 231, 297, 385, 490, 627, 792, 1002, 1255, 1575, 1958};

}  // namespace

TEST_CASE("partition counts match the reference table", "[partitions]") {
  for (unsigned n = 0; n <= 25; ++n)
    REQUIRE(partition_count(n) == kPartitionCounts[n]);
  REQUIRE(partition_count(30) == 5604);
  REQUIRE(partition_count(40) == 37338);
  REQUIRE(partition_count(80) == 15796476);
  REQUIRE_THROWS_AS(partition_count(81), capacity_error);
  REQUIRE(partition_count(100, 128) == 190569292);
}

TEST_CASE("cycle type enumeration order and count", "[partitions]") {
  auto types = cycle_types(4);
  REQUIRE(types.size() == 5);
  REQUIRE(types[0].parts() == std::vector<unsigned>{4});
  REQUIRE(types[1].parts() == std::vector<unsigned>{3, 1});
  REQUIRE(types[2].parts() == std::vector<unsigned>{2, 2});
  REQUIRE(types[3].parts() == std::vector<unsigned>{2, 1, 1});
  REQUIRE(types[4].parts() == std::vector<unsigned>{1, 1, 1, 1});

  for (unsigned n = 0; n <= 20; ++n) {
    auto all = cycle_types(n);
    REQUIRE(all.size() == partition_count(n));
    std::set<std::vector<unsigned>> seen;
    std::vector<unsigned> previous;
    for (std::size_t i = 0; i < all.size(); ++i) {
      REQUIRE(all[i].degree() == n);
      auto p = all[i].parts();
      REQUIRE(seen.insert(p).second);
      if (i > 0) REQUIRE(p < previous);
      previous = p;
    }
  }

  REQUIRE(cycle_types(0).size() == 1);
  REQUIRE(cycle_types(0)[0].degree() == 0);
  REQUIRE_THROWS_AS(cycle_types(81), capacity_error);
}

TEST_CASE("cycle type accessors", "[partitions]") {
  CycleType t(std::vector<std::uint32_t>{2, 0, 1});
  REQUIRE(t.degree() == 5);
  REQUIRE(t.count(1) == 2);
  REQUIRE(t.count(2) == 0);
  REQUIRE(t.count(3) == 1);
  REQUIRE(t.count(9) == 0);
  REQUIRE(t.to_string() == "3+1+1");
  REQUIRE(CycleType().to_string() == "0");
  REQUIRE(CycleType::single_cycle(6).parts() == std::vector<unsigned>{6});
  REQUIRE_THROWS_AS(CycleType::single_cycle(0), domain_error);

  // Trailing zero multiplicities do not affect identity.
  REQUIRE(CycleType(std::vector<std::uint32_t>{2, 0, 1, 0, 0}) == t);
}

TEST_CASE("class probabilities sum to one and match S_4 sizes", "[partitions]") {
  std::map<std::vector<unsigned>, Int> s4;
  for (const auto& t : cycle_types(4)) s4[t.parts()] = conjugacy_class_size(t);
  REQUIRE(s4[{4}] == 6);
  REQUIRE(s4[{3, 1}] == 8);
  REQUIRE(s4[{2, 2}] == 3);
  REQUIRE(s4[{2, 1, 1}] == 6);
  REQUIRE(s4[{1, 1, 1, 1}] == 1);

  for (unsigned n = 0; n <= 14; ++n) {
    Rat total = 0;
    Int count_total = 0;
    for (const auto& t : cycle_types(n)) {
      total += class_probability(t);
      count_total += conjugacy_class_size(t);
      REQUIRE(class_probability(t) ==
              Rat(conjugacy_class_size(t), factorial(n)));
    }
    REQUIRE(total == 1);
    REQUIRE(count_total == factorial(n));
  }
}

TEST_CASE("strided enumeration partitions the full walk", "[partitions]") {
  for (unsigned stride : {2u, 3u, 5u}) {
    std::vector<std::vector<unsigned>> merged;
    for (unsigned offset = 0; offset < stride; ++offset)
      for_each_cycle_type_strided(11, stride, offset,
                                  [&](std::span<const std::uint32_t> m) {
                                    merged.push_back(CycleType(m).parts());
                                  });
    REQUIRE(merged.size() == partition_count(11));
    std::set<std::vector<unsigned>> unique(merged.begin(), merged.end());
    REQUIRE(unique.size() == merged.size());
  }
  REQUIRE_THROWS_AS(
      for_each_cycle_type_strided(5, 0, 0, [](auto) {}), domain_error);
  REQUIRE_THROWS_AS(
      for_each_cycle_type_strided(5, 3, 3, [](auto) {}), domain_error);
}

TEST_CASE("cycle count law on S_a", "[partitions]") {
  auto law4 = cycle_count_proportions(4);
  REQUIRE(law4.size() == 4);
  REQUIRE(law4[0] == Rat(6, 24));
  REQUIRE(law4[1] == Rat(11, 24));
  REQUIRE(law4[2] == Rat(6, 24));
  REQUIRE(law4[3] == Rat(1, 24));

  for (unsigned a = 1; a <= 12; ++a) {
    auto law = cycle_count_proportions(a);
    Rat total = 0;
    for (const Rat& p : law) total += p;
    REQUIRE(total == 1);
    REQUIRE(law[0] == Rat(1, a));                 // single a-cycle count
    REQUIRE(law[a - 1] == Rat(1, factorial(a)));  // identity only

    // Independent route: group cycle types of S_a by number of parts.
    std::vector<Rat> by_parts(a, Rat(0));
    for (const auto& t : cycle_types(a))
      by_parts[t.parts().size() - 1] += class_probability(t);
    for (unsigned r = 1; r <= a; ++r) REQUIRE(law[r - 1] == by_parts[r - 1]);
  }
  REQUIRE_THROWS_AS(cycle_count_proportions(0), domain_error);
}

TEST_CASE("rising factorial identity for partition sums", "[partitions]") {
  REQUIRE(rising_factorial_sum(3, 2) == Rat(5, 16));
  REQUIRE(rising_factorial_sum(1, 7) == Rat(1, 7));

  // Term-by-term partition sum: 1 / prod_i ((i k)^{n_i} n_i!).
  for (unsigned a = 1; a <= 8; ++a)
    for (unsigned k = 1; k <= 5; ++k) {
      Rat direct = 0;
      for (const auto& t : cycle_types(a)) {
        Rat term = 1;
        const auto& m = t.multiplicities();
        for (std::size_t i = 0; i < m.size(); ++i)
          if (m[i] != 0)
            term /= Rat(int_pow(Int((i + 1) * k), m[i]) * factorial(m[i]));
        direct += term;
      }
      REQUIRE(direct == rising_factorial_sum(a, k));
    }

  // k = 1 collapses to the class equation: sum of 1/|C(w)| over types is 1.
  for (unsigned a = 1; a <= 10; ++a)
    REQUIRE(rising_factorial_sum(a, 1) == 1);

  REQUIRE_THROWS_AS(rising_factorial_sum(0, 2), domain_error);
  REQUIRE_THROWS_AS(rising_factorial_sum(2, 0), domain_error);
}
