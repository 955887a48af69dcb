#pragma once

#include <json.hpp>

#include <string>

#include "permfix/distributions.hpp"
#include "permfix/numbers.hpp"
#include "permfix/power_series.hpp"
#include "permfix/samplers.hpp"
#include "permfix/version.hpp"

namespace permfix {

// Rationals travel as "p/q" strings so no consumer is tempted to round them.
inline std::string rat_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline nlohmann::json envelope_json(const std::string& invocation) {
  nlohmann::json j;
  j["invocation"] = invocation;
  j["version"] = kVersionString;
  return j;
}

inline nlohmann::json distribution_json(const ExactDistribution& d) {
  nlohmann::json j;
  j["degree"] = d.degree;
  j["action"] = d.action == ActionKind::KSets ? "ksets" : "matchings";
  if (d.action == ActionKind::KSets) j["k"] = d.k;
  nlohmann::json support = nlohmann::json::array();
  for (const auto& [value, p] : d.support)
    support.push_back({value.str(), rat_string(p)});
  j["support"] = std::move(support);
  return j;
}

inline nlohmann::json series_json(const PowerSeries<Rat>& s,
                                  const std::string& variable) {
  nlohmann::json j;
  j["variable"] = variable;
  j["order"] = s.order();
  nlohmann::json coeffs = nlohmann::json::array();
  for (unsigned i = 0; i <= s.order(); ++i) coeffs.push_back(rat_string(s[i]));
  j["coefficients"] = std::move(coeffs);
  return j;
}

inline nlohmann::json choice_tree_json(const ChoiceTreeResult& r) {
  nlohmann::json j;
  nlohmann::json support = nlohmann::json::array();
  for (const auto& [w, mass] : r.distribution)
    support.push_back({one_line(w), rat_string(mass)});
  j["support"] = std::move(support);
  j["total"] = rat_string(r.total);
  j["non_derangement_mass"] = rat_string(r.non_derangement_mass);
  j["max_ratio"] = rat_string(r.max_ratio);
  j["min_ratio"] = rat_string(r.min_ratio);
  j["uniform"] = r.uniform;
  return j;
}

}  // namespace permfix
