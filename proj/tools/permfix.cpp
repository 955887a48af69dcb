#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "permfix/acceptance.hpp"
#include "permfix/distributions.hpp"
#include "permfix/json_io.hpp"
#include "permfix/limits.hpp"
#include "permfix/numbers.hpp"
#include "permfix/oracle.hpp"
#include "permfix/samplers.hpp"
#include "permfix/series.hpp"
#include "permfix/shuffle.hpp"
#include "permfix/version.hpp"

namespace {

using namespace permfix;

unsigned thread_default() {
  if (const char* env = std::getenv("PERMFIX_THREADS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1 && parsed <= 1024)
      return static_cast<unsigned>(parsed);
  }
  return 1;
}

std::string plain_rat(const Rat& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

// Payload goes to --out when given, stdout otherwise.
void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload << '\n';
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw domain_error("cannot open output path " + out_path);
  file << payload << '\n';
  std::cout << "wrote " << out_path << '\n';
}

PayneVariant parse_variant(const std::string& name) {
  if (name == "other") return PayneVariant::SwapWithOther;
  if (name == "later") return PayneVariant::SwapWithLater;
  return PayneVariant::SwapWithAny;
}

struct DistConfig {
  std::string action = "ksets";
  unsigned n = 0;
  unsigned k = 1;
  unsigned threads = 1;
  std::string out;
};

void run_dist(const DistConfig& cfg, const std::string& invocation) {
  ExactDistribution d = cfg.action == "ksets"
                            ? distribution_ksets(cfg.n, cfg.k, cfg.threads)
                            : distribution_matchings(cfg.n, cfg.threads);
  RankBounds bounds = rank_bounds(d);
  nlohmann::json j = envelope_json(invocation);
  j.update(distribution_json(d));
  j["mean"] = rat_string(d.mean());
  j["variance"] = rat_string(d.variance());
  j["no_fixed_point_probability"] = rat_string(derangement_proportion(d));
  j["rank_bounds"] = {{"set_size", bounds.set_size.str()},
                      {"rank", bounds.rank.str()},
                      {"lower", rat_string(bounds.lower)},
                      {"upper", rat_string(bounds.upper)}};
  emit(j.dump(2), cfg.out);
}

struct LimitConfig {
  unsigned k = 0;
  std::uint64_t j = 0;
  std::string method = "auto";
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out;
};

void run_limit(const LimitConfig& cfg, const std::string& invocation) {
  nlohmann::json j = envelope_json(invocation);
  j["k"] = cfg.k;
  j["j"] = cfg.j;
  std::string method = cfg.method;
  if (method == "auto") method = cfg.k <= 3 ? "exact" : "mc";
  j["method"] = method;
  if (method == "exact") {
    CertifiedProbability p = limit_prob_exact(cfg.k, Int(cfg.j));
    j["value"] = p.value;
    j["error_bound"] = p.error_bound;
  } else {
    McEstimate e =
        limit_prob_mc(cfg.k, Int(cfg.j), cfg.samples, cfg.seed, cfg.threads);
    j["estimate"] = e.estimate;
    j["standard_error"] = e.standard_error;
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
  }
  if (cfg.k >= 2) {
    double bound = derangement_upper_bound(cfg.k);
    j["fixed_set_probability_lower_bound"] = bound;
    j["no_fixed_set_probability_upper_bound"] = 1.0 - bound;
  }
  emit(j.dump(2), cfg.out);
}

struct SeriesConfig {
  std::string family = "count";
  std::string constant;
  unsigned j = 1;
  unsigned order = 8;
  std::string out;
};

void run_series(const SeriesConfig& cfg, const std::string& invocation) {
  if (!cfg.constant.empty()) {
    if (cfg.constant == "C") {
      emit(plain_rat(pj_at_one(cfg.j)), cfg.out);
      return;
    }
    AsymptoticConstant c = cfg.constant == "A" ? A1() : B1();
    std::ostringstream line;
    line << std::setprecision(17) << c.value << " (+/- " << std::setprecision(3)
         << c.tail_bound << "; " << c.description << ")";
    emit(line.str(), cfg.out);
    return;
  }
  PowerSeries<Rat> series = cfg.family == "count"
                                ? matchings_nonderangement_series<Rat>(cfg.order)
                                : matchings_j_series<Rat>(cfg.j, cfg.order);
  nlohmann::json j = envelope_json(invocation);
  j.update(series_json(series, "u"));
  j["family"] = cfg.family == "count"
                    ? "matchings-with-fixed-point"
                    : "matchings-exactly-" + std::to_string(cfg.j);
  emit(j.dump(2), cfg.out);
}

struct WreathConfig {
  unsigned a = 0;
  unsigned order = 0;
  unsigned block = 0;
  std::string out;
};

void run_wreath(const WreathConfig& cfg, const std::string& invocation) {
  nlohmann::json j = envelope_json(invocation);
  if (cfg.block > 0) {
    Rat bound = block_system_bound(cfg.block);
    j["m"] = cfg.block;
    j["bound"] = rat_string(bound);
    j["scaled_by_m_3_2"] =
        to_double(bound) * std::pow(static_cast<double>(cfg.block), 1.5);
    emit(j.dump(2), cfg.out);
    return;
  }
  if (cfg.a == 0 || cfg.order == 0)
    throw domain_error("wreath: need --a and --order, or --block");
  PowerSeries<Rat> series = wreath_bound_series<Rat>(cfg.a, cfg.order);
  AsymptoticConstant c = wreath_bound_asymptotic(cfg.a);
  j.update(series_json(series, "u"));
  j["a"] = cfg.a;
  j["asymptotic"] = {{"constant", c.value},
                     {"tail_bound", c.tail_bound},
                     {"description", c.description},
                     {"decay_exponent", 1.0 / cfg.a - 1.0}};
  emit(j.dump(2), cfg.out);
}

struct ShuffleConfig {
  unsigned n = 0;
  unsigned k = 0;
  unsigned traces = 10;
  std::string format = "csv";
  std::string out;
};

void run_shuffle(const ShuffleConfig& cfg, const std::string& invocation) {
  ShuffleChain chain = build_chain(cfg.n, cfg.k);
  SpectrumCheck check = eigenvalue_multiset_check(chain, cfg.traces);
  if (cfg.format == "csv") {
    std::ostringstream csv;
    csv << "# invocation: " << invocation << '\n';
    csv << "# version: " << kVersionString << '\n';
    csv << "# spectrum check through r=" << check.r_max
        << ": max difference " << check.max_difference << '\n';
    csv << "r,trace,return_probability\n";
    for (unsigned r = 1; r <= cfg.traces; ++r)
      csv << r << ',' << plain_rat(trace_power(chain, r)) << ','
          << plain_rat(return_probability(chain, r)) << '\n';
    std::string payload = csv.str();
    payload.pop_back();
    emit(payload, cfg.out);
    return;
  }
  nlohmann::json j = envelope_json(invocation);
  j["n"] = cfg.n;
  j["k"] = cfg.k;
  j["states"] = chain.state_count();
  j["step_probability"] = rat_string(chain.step_probability());
  nlohmann::json rows = nlohmann::json::array();
  for (unsigned r = 1; r <= cfg.traces; ++r)
    rows.push_back({{"r", r},
                    {"trace", rat_string(trace_power(chain, r))},
                    {"return_probability",
                     rat_string(return_probability(chain, r))}});
  j["traces"] = std::move(rows);
  j["spectrum_check"] = {{"r_max", check.r_max},
                         {"max_difference", rat_string(check.max_difference)},
                         {"exact", check.exact}};
  emit(j.dump(2), cfg.out);
}

struct SampleConfig {
  std::string action = "derangement";
  std::string method = "rejection";
  std::string variant = "other";
  unsigned n = 0;
  unsigned count = 1;
  std::uint64_t seed = 0;
};

void run_sample(const SampleConfig& cfg, const std::string& invocation) {
  std::cout << "# invocation: " << invocation << '\n';
  std::cout << "# version: " << kVersionString << '\n';
  std::cout << "# seed: " << cfg.seed << '\n';
  Rng rng(cfg.seed);
  PayneVariant variant = parse_variant(cfg.variant);
  for (unsigned i = 0; i < cfg.count; ++i) {
    Permutation w;
    if (cfg.action == "permutation") {
      w = random_permutation(cfg.n, rng);
    } else if (cfg.method == "rejection") {
      w = rejection_derangement(cfg.n, rng);
    } else {
      w = payne_derangement(cfg.n, rng, variant);
    }
    bool must_derange = cfg.action == "derangement" &&
                        (cfg.method == "rejection" || cfg.variant == "other");
    if (must_derange && !is_derangement(w))
      throw std::logic_error("sampler emitted a permutation with a fixed point");
    std::cout << one_line(w) << '\n';
  }
}

struct AuditConfig {
  unsigned n = 0;
  std::string start = "uniform";
  std::string variant = "other";
  std::string out;
};

void run_payne_audit(const AuditConfig& cfg, const std::string& invocation) {
  ChoiceTreeResult r = payne_exact_distribution(
      cfg.n, cfg.start == "uniform" ? PayneStart::Uniform : PayneStart::Identity,
      parse_variant(cfg.variant));
  nlohmann::json j = envelope_json(invocation);
  j["n"] = cfg.n;
  j["start"] = cfg.start;
  j["variant"] = cfg.variant;
  j.update(choice_tree_json(r));
  emit(j.dump(2), cfg.out);
}

struct OracleConfig {
  std::string action = "ksets";
  unsigned n = 0;
  unsigned k = 1;
  unsigned a = 2;
  std::string out;
};

void run_oracle(const OracleConfig& cfg, const std::string& invocation) {
  nlohmann::json j = envelope_json(invocation);
  j["degree"] = cfg.n;
  j["action"] = cfg.action;
  if (cfg.action == "blocks") {
    ActionTable table = brute_force_fixed_points(cfg.n, OracleAction::Blocks, cfg.a);
    std::uint64_t with_fixed = 0;
    for (std::uint64_t c : table.counts)
      if (c > 0) ++with_fixed;
    Rat proportion(with_fixed, factorial(cfg.n));
    Rat bound = wreath_bound_series<Rat>(cfg.a, cfg.n / cfg.a)[cfg.n / cfg.a];
    j["a"] = cfg.a;
    j["proportion_with_fixed_block_system"] = rat_string(proportion);
    j["series_bound"] = rat_string(bound);
    j["within_bound"] = proportion <= bound;
    emit(j.dump(2), cfg.out);
    return;
  }
  OracleAction action = cfg.action == "ksets" ? OracleAction::KSets
                                              : OracleAction::Matchings;
  ActionTable table = brute_force_fixed_points(cfg.n, action, cfg.k);
  std::map<Int, Rat> law = induced_distribution(table);
  ExactDistribution formula = cfg.action == "ksets"
                                  ? distribution_ksets(cfg.n, cfg.k)
                                  : distribution_matchings(cfg.n);
  if (cfg.action == "ksets") j["k"] = cfg.k;
  nlohmann::json support = nlohmann::json::array();
  for (const auto& [value, p] : law)
    support.push_back({value.str(), rat_string(p)});
  j["support"] = std::move(support);
  j["matches_formula"] = law == formula.support;
  emit(j.dump(2), cfg.out);
}

void run_reproduce(const std::string& out_path, const std::string& invocation) {
  auto results = run_acceptance_suite(&std::cout);
  bool all_passed = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    rows.push_back({{"index", r.index},
                    {"label", r.label},
                    {"passed", r.passed},
                    {"detail", r.detail},
                    {"seconds", r.seconds}});
  }
  if (!out_path.empty()) {
    nlohmann::json j = envelope_json(invocation);
    j["criteria"] = std::move(rows);
    j["all_passed"] = all_passed;
    std::ofstream file(out_path);
    if (!file) throw domain_error("cannot open output path " + out_path);
    file << j.dump(2) << '\n';
    std::cout << "wrote " << out_path << '\n';
  }
  if (!all_passed) throw std::runtime_error("acceptance criteria failed");
}

}  // namespace

int main(int argc, char** argv) {
  std::string invocation = "permfix";
  for (int i = 1; i < argc; ++i) invocation += std::string(" ") + argv[i];

  CLI::App app{"fixed-point statistics of permutation actions"};
  app.set_version_flag("--version", kVersionString);
  app.require_subcommand(1);
  unsigned threads = thread_default();

  DistConfig dist;
  CLI::App* dist_cmd = app.add_subcommand("dist", "exact fixed-point laws");
  dist_cmd->add_option("--action", dist.action)
      ->check(CLI::IsMember({"ksets", "matchings"}));
  dist_cmd->add_option("--n", dist.n, "degree of the symmetric group")->required();
  dist_cmd->add_option("--k", dist.k, "subset size (ksets only)");
  dist_cmd->add_option("--threads", dist.threads);
  dist_cmd->add_option("--out", dist.out);

  LimitConfig limit;
  CLI::App* limit_cmd = app.add_subcommand("limit", "limiting laws and bounds");
  limit_cmd->add_option("--k", limit.k)->required();
  limit_cmd->add_option("--j", limit.j, "fixed-set count");
  limit_cmd->add_option("--method", limit.method)
      ->check(CLI::IsMember({"auto", "exact", "mc"}));
  limit_cmd->add_option("--samples", limit.samples);
  limit_cmd->add_option("--seed", limit.seed);
  limit_cmd->add_option("--threads", limit.threads);
  limit_cmd->add_option("--out", limit.out);

  SeriesConfig series;
  CLI::App* series_cmd =
      app.add_subcommand("series", "matching-count generating functions");
  series_cmd->add_option("--family", series.family)
      ->check(CLI::IsMember({"count", "j"}));
  series_cmd->add_option("--constant", series.constant)
      ->check(CLI::IsMember({"A", "B", "C"}));
  series_cmd->add_option("--j", series.j)->check(CLI::IsMember({1, 3, 5, 7}));
  series_cmd->add_option("--order", series.order);
  series_cmd->add_option("--out", series.out);

  WreathConfig wreath;
  CLI::App* wreath_cmd =
      app.add_subcommand("wreath", "block-system bound series");
  wreath_cmd->add_option("--a", wreath.a, "block size");
  wreath_cmd->add_option("--order", wreath.order);
  wreath_cmd->add_option("--block", wreath.block,
                         "degree for the vanishing-coefficient bound");
  wreath_cmd->add_option("--out", wreath.out);

  ShuffleConfig shuffle;
  CLI::App* shuffle_cmd =
      app.add_subcommand("shuffle", "top-k-to-random walk traces");
  shuffle_cmd->add_option("--n", shuffle.n)->required();
  shuffle_cmd->add_option("--k", shuffle.k)->required();
  shuffle_cmd->add_option("--traces", shuffle.traces);
  shuffle_cmd->add_option("--format", shuffle.format)
      ->check(CLI::IsMember({"csv", "json"}));
  shuffle_cmd->add_option("--out", shuffle.out);

  SampleConfig sample;
  CLI::App* sample_cmd = app.add_subcommand("sample", "draw permutations");
  sample_cmd->add_option("--action", sample.action)
      ->check(CLI::IsMember({"derangement", "permutation"}));
  sample_cmd->add_option("--method", sample.method)
      ->check(CLI::IsMember({"rejection", "payne"}));
  sample_cmd->add_option("--variant", sample.variant)
      ->check(CLI::IsMember({"other", "later", "any"}));
  sample_cmd->add_option("--n", sample.n)->required();
  sample_cmd->add_option("--count", sample.count);
  sample_cmd->add_option("--seed", sample.seed);

  AuditConfig audit;
  CLI::App* audit_cmd =
      app.add_subcommand("payne-audit", "exact law of the repair pass");
  audit_cmd->add_option("--n", audit.n)->required();
  audit_cmd->add_option("--start", audit.start)
      ->check(CLI::IsMember({"uniform", "identity"}));
  audit_cmd->add_option("--variant", audit.variant)
      ->check(CLI::IsMember({"other", "later", "any"}));
  audit_cmd->add_option("--out", audit.out);

  OracleConfig oracle;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force law comparison");
  oracle_cmd->add_option("--action", oracle.action)
      ->check(CLI::IsMember({"ksets", "matchings", "blocks"}));
  oracle_cmd->add_option("--n", oracle.n)->required();
  oracle_cmd->add_option("--k", oracle.k);
  oracle_cmd->add_option("--a", oracle.a, "block size (blocks only)");
  oracle_cmd->add_option("--out", oracle.out);

  std::string reproduce_out;
  CLI::App* reproduce_cmd =
      app.add_subcommand("reproduce", "run the full acceptance suite");
  reproduce_cmd->add_option("--out", reproduce_out, "JSON report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dist_cmd->parsed()) {
      if (dist.threads == 1) dist.threads = threads;
      run_dist(dist, invocation);
    } else if (limit_cmd->parsed()) {
      if (limit.threads == 1) limit.threads = threads;
      run_limit(limit, invocation);
    } else if (series_cmd->parsed()) {
      run_series(series, invocation);
    } else if (wreath_cmd->parsed()) {
      run_wreath(wreath, invocation);
    } else if (shuffle_cmd->parsed()) {
      run_shuffle(shuffle, invocation);
    } else if (sample_cmd->parsed()) {
      run_sample(sample, invocation);
    } else if (audit_cmd->parsed()) {
      run_payne_audit(audit, invocation);
    } else if (oracle_cmd->parsed()) {
      run_oracle(oracle, invocation);
    } else if (reproduce_cmd->parsed()) {
      run_reproduce(reproduce_out, invocation);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
