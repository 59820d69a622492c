#include "subsample/report.hpp"

#include <algorithm>
#include <cmath>

namespace subsample {

using nlohmann::json;

std::string encode_instance(const CopyInstance& copy) {
  std::string s;
  for (auto [u, v] : copy) {
    if (!s.empty()) s += ",";
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

namespace {

json stats_to_json(const QueryStats& s) {
  return json{{"degree", s.degree_queries},
              {"neighbor", s.neighbor_queries},
              {"pair", s.pair_queries},
              {"edge_sample", s.edge_sample_queries},
              {"vertex_sample", s.vertex_sample_queries},
              {"total", s.total()}};
}

json common_header(const HostGraph& g, const Pattern& h, const Decomposition& t,
                   long long f) {
  return json{{"n", g.n()},
              {"m", g.m()},
              {"pattern", h.spec()},
              {"rho", t.rho_total.to_string()},
              {"decomposition", t.describe()},
              {"configurations", f},
              {"agm_copies_upper_bound", agm_copies_upper_bound(g.m(), t.rho_total)}};
}

}  // namespace

json build_sample_report(const HostGraph& g, const Pattern& h,
                         const Decomposition& t, long long f,
                         const ExperimentConfig& config, double x_h_used,
                         const std::string& method, const RunResult& run,
                         const std::optional<CopySet>& copies) {
  json report = common_header(g, h, t, f);
  report["kind"] = "sample";
  report["graph_source"] = config.graph_source;
  report["seed"] = config.seed;
  report["threads"] = config.threads;
  report["method"] = method;
  report["x_h"] = x_h_used;
  report["trials"] = run.trials;
  report["successes"] = run.successes;

  double rate = (double)run.successes / (double)run.trials;
  double ci = 1.96 * std::sqrt(rate * (1 - rate) / (double)run.trials);
  report["success_rate"] = rate;
  report["success_rate_ci95"] = ci;

  json hist = json::object();
  for (const auto& [copy, cnt] : run.histogram) hist[encode_instance(copy)] = cnt;
  report["per_copy_histogram"] = hist;

  report["queries"] = stats_to_json(run.total_stats);
  report["max_trial_queries"] = run.max_trial_queries;
  report["trial_query_cap"] = run.trial_query_cap;
  report["all_trials_within_cap"] = run.all_trials_within_cap;

  if (copies && copies->count() >= 2 && run.successes > 0) {
    std::vector<long long> counts;
    for (const auto& copy : copies->copies) {
      auto it = run.histogram.find(copy);
      counts.push_back(it == run.histogram.end() ? 0 : it->second);
    }
    UniformityReport u = uniformity_test(counts, run.successes);
    report["uniformity"] = json{{"chi_square", u.chi_square},
                                {"df", u.df},
                                {"p_value", u.p_value},
                                {"tv_distance", u.tv_distance},
                                {"undersampled", u.undersampled}};
  }
  if (copies) report["copies_exact"] = copies->count();
  if (config.include_timing) report["wall_seconds"] = run.wall_seconds;
  return report;
}

json build_estimate_report(const HostGraph& g, const Pattern& h,
                           const Decomposition& t, long long f,
                           const ExperimentConfig& config,
                           const CountEstimate& est) {
  json report = common_header(g, h, t, f);
  report["kind"] = "estimate-count";
  report["graph_source"] = config.graph_source;
  report["seed"] = config.seed;
  report["trials"] = est.trials;
  report["successes"] = est.successes;
  report["estimate"] = est.estimate;
  report["ci95_halfwidth"] = est.ci_halfwidth;
  return report;
}

json build_verify_exact_report(const HostGraph& g, const Pattern& h,
                               const Decomposition& t, long long f,
                               const ExactDistribution& dist,
                               const CopySet& copies) {
  json report = common_header(g, h, t, f);
  report["kind"] = "verify-exact";
  int two_rho;
  {
    const Rational& rho = t.rho_total;
    two_rho = rho.den() == 1 ? (int)(2 * rho.num()) : (int)rho.num();
  }
  bool all_pass = true;
  json per_instance = json::array();
  for (const auto& copy : copies.copies) {
    json entry;
    entry["instance"] = encode_instance(copy);
    auto it = dist.per_instance.find(copy);
    bool pass = false;
    if (it != dist.per_instance.end()) {
      entry["probability"] = it->second.to_string();
      pass = it->second.equals_pure_power(g.two_m(), two_rho);
      auto cls = dist.accepting_classes.find(copy);
      entry["accepting_classes"] =
          cls == dist.accepting_classes.end() ? 0 : cls->second;
    } else {
      entry["probability"] = "0";
    }
    entry["pass"] = pass;
    all_pass = all_pass && pass;
    per_instance.push_back(entry);
  }
  // anything returned that is not a genuine copy is an automatic failure
  for (const auto& [copy, p] : dist.per_instance) {
    if (!std::binary_search(copies.copies.begin(), copies.copies.end(), copy)) {
      all_pass = false;
      per_instance.push_back(json{{"instance", encode_instance(copy)},
                                  {"probability", p.to_string()},
                                  {"pass", false},
                                  {"spurious", true}});
    }
  }
  report["expected_probability"] =
      "(2m)^(-" + std::to_string(two_rho) + "/2)";
  report["instances"] = per_instance;
  report["paths_explored"] = dist.paths_explored;
  report["all_pass"] = all_pass;
  return report;
}

json build_decompose_report(const Pattern& h, const Decomposition& t,
                            long long f) {
  json report;
  report["kind"] = "decompose";
  report["pattern"] = h.spec();
  report["rho"] = t.rho_total.to_string();
  report["configurations"] = f;
  json pieces = json::array();
  for (const auto& c : t.cycles)
    pieces.push_back(json{{"type", "cycle"},
                          {"length", c.length()},
                          {"vertices", c.vertices}});
  for (const auto& s : t.stars)
    pieces.push_back(json{{"type", "star"},
                          {"petals", s.petals()},
                          {"root", s.root},
                          {"leaves", s.leaves}});
  report["pieces"] = pieces;
  return report;
}

std::string report_to_csv(const json& report) {
  std::string csv = "instance,count\n";
  if (report.contains("per_copy_histogram")) {
    for (auto& [key, value] : report["per_copy_histogram"].items())
      csv += key + "," + value.dump() + "\n";
  }
  return csv;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace subsample
