#include <catch2/catch_amalgamated.hpp>

#include "permfix/json_io.hpp"
#include "permfix/series.hpp"

using namespace permfix;

TEST_CASE("rationals serialize reduced", "[json]") {
  REQUIRE(rat_string(Rat(3, 6)) == "1/2");
  REQUIRE(rat_string(Rat(5)) == "5/1");
  REQUIRE(rat_string(Rat(0)) == "0/1");
  REQUIRE(rat_string(Rat(-2, 4)) == "-1/2");
}

TEST_CASE("distributions serialize with sorted support", "[json]") {
  nlohmann::json j = distribution_json(distribution_ksets(5, 2));
  REQUIRE(j["degree"] == 5);
  REQUIRE(j["action"] == "ksets");
  REQUIRE(j["k"] == 2);
  const auto& support = j["support"];
  REQUIRE(support.front()[0] == "0");
  REQUIRE(support.back()[0] == "10");
  REQUIRE(support.back()[1] == "1/120");
  Rat total = 0;
  Int previous = -1;
  for (const auto& entry : support) {
    Int value(entry[0].get<std::string>());
    REQUIRE(value > previous);
    previous = value;
    total += Rat(entry[1].get<std::string>());
  }
  REQUIRE(total == 1);

  nlohmann::json m = distribution_json(distribution_matchings(6));
  REQUIRE(m["action"] == "matchings");
  REQUIRE_FALSE(m.contains("k"));
}

TEST_CASE("series serialize coefficient lists", "[json]") {
  nlohmann::json j =
      series_json(matchings_nonderangement_series<Rat>(4), "u");
  REQUIRE(j["variable"] == "u");
  REQUIRE(j["order"] == 4);
  std::vector<std::string> expected = {"1/1", "1/1", "2/3", "26/45",
                                       "158/315"};
  REQUIRE(j["coefficients"].get<std::vector<std::string>>() == expected);
}

TEST_CASE("choice trees serialize with their verdict", "[json]") {
  nlohmann::json j =
      choice_tree_json(payne_exact_distribution(2, PayneStart::Uniform));
  REQUIRE(j["support"].size() == 1);
  REQUIRE(j["support"][0][0] == "2 1");
  REQUIRE(j["support"][0][1] == "1/1");
  REQUIRE(j["total"] == "1/1");
  REQUIRE(j["uniform"] == true);

  nlohmann::json leaky = choice_tree_json(payne_exact_distribution(
      3, PayneStart::Uniform, PayneVariant::SwapWithLater));
  REQUIRE(leaky["non_derangement_mass"] == "1/4");
  REQUIRE(leaky["uniform"] == false);
}

TEST_CASE("envelopes carry invocation and version", "[json]") {
  nlohmann::json j = envelope_json("permfix dist --action ksets --n 5 --k 1");
  REQUIRE(j["invocation"] == "permfix dist --action ksets --n 5 --k 1");
  REQUIRE(j["version"] == kVersionString);
}
