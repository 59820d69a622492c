#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "subsample/generators.hpp"
#include "subsample/graph.hpp"
#include "subsample/report.hpp"
#include "subsample/verify.hpp"

namespace ss = subsample;

namespace {

uint64_t default_seed() {
  // SAMPLER_SEED overrides the built-in default; an explicit --seed wins
  if (const char* env = std::getenv("SAMPLER_SEED"))
    return std::strtoull(env, nullptr, 10);
  return ss::kDefaultSeed;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
}

std::string render(const nlohmann::json& report, const std::string& format) {
  return format == "csv" ? ss::report_to_csv(report) : ss::dump_report(report);
}

struct XhResolution {
  double value = 0;
  long long exact_copies = -1;
};

XhResolution resolve_xh(const std::string& mode, const ss::HostGraph& g,
                        const ss::Pattern& h, const ss::Decomposition& t,
                        long long f, long long trials, uint64_t seed,
                        int threads) {
  XhResolution r;
  if (mode == "exact") {
    r.exact_copies = ss::enumerate_copies(g, h).count();
    r.value = std::max<double>(1.0, (double)r.exact_copies);
  } else if (mode == "estimate") {
    long long warmup = std::max<long long>(1, trials / 10);
    auto est = ss::estimate_count(g, h, t, f, warmup, seed, threads);
    // stream_base of the main run starts past the warm-up streams
    r.value = std::max(1.0, est.estimate);
  } else {
    r.value = std::stod(mode);
    if (r.value <= 0) throw std::invalid_argument("--xh must be positive");
  }
  return r;
}

int cmd_sample(const ss::ExperimentConfig& cfg, const std::string& out_path) {
  ss::HostGraph g = ss::HostGraph::load_file(cfg.graph_source);
  ss::Pattern h = ss::Pattern::parse(cfg.pattern_spec);
  ss::Decomposition t = ss::decompose(h);
  long long f = ss::count_configurations(h, t);

  XhResolution xh = resolve_xh(cfg.xh_mode, g, h, t, f, cfg.trials, cfg.seed,
                               cfg.threads);

  // when m is below m^rho/x_h, scanning the whole graph is the cheaper route
  double dense_threshold =
      std::pow((double)g.m(), t.rho_total.to_double()) / xh.value;
  bool full_scan = (double)g.m() < dense_threshold && g.m() > 0;

  ss::RunConfig run_cfg;
  run_cfg.trials = cfg.trials;
  run_cfg.seed = cfg.seed;
  run_cfg.threads = cfg.threads;
  run_cfg.mode = full_scan ? ss::RunMode::kFullScan : ss::RunMode::kWrapper;
  run_cfg.x_h = xh.value;
  // keep wrapper streams disjoint from any estimate warm-up streams
  run_cfg.stream_base = cfg.xh_mode == "estimate" ? (uint64_t)1 << 32 : 0;
  ss::RunResult run = ss::run_trials(g, h, t, f, run_cfg);

  std::optional<ss::CopySet> copies;
  if (xh.exact_copies >= 0) copies = ss::enumerate_copies(g, h);
  auto report =
      ss::build_sample_report(g, h, t, f, cfg, xh.value,
                              full_scan ? "full_scan" : "wrapper", run, copies);
  emit(render(report, cfg.format), out_path);
  return 0;
}

int cmd_verify_exact(const ss::ExperimentConfig& cfg,
                     const std::string& mutate, const std::string& out_path) {
  ss::HostGraph g = ss::HostGraph::load_file(cfg.graph_source);
  ss::Pattern h = ss::Pattern::parse(cfg.pattern_spec);
  ss::Decomposition t = ss::decompose(h);
  long long f = ss::count_configurations(h, t);

  ss::SamplerOptions opts;
  if (mutate == "skip-coin")
    opts.skip_config_coin = true;
  else if (mutate == "skip-order")
    opts.skip_order_checks = true;
  else if (mutate != "none")
    throw std::invalid_argument("--mutate must be none|skip-coin|skip-order");

  auto dist = ss::exact_distribution(g, h, t, f, opts);
  auto copies = ss::enumerate_copies(g, h);
  auto report = ss::build_verify_exact_report(g, h, t, f, dist, copies);
  emit(render(report, cfg.format), out_path);
  return report["all_pass"].get<bool>() ? 0 : 1;
}

int cmd_decompose(const std::string& pattern_spec, const std::string& out_path) {
  ss::Pattern h = ss::Pattern::parse(pattern_spec);
  ss::Decomposition t = ss::decompose(h);
  long long f = ss::count_configurations(h, t);
  emit(ss::dump_report(ss::build_decompose_report(h, t, f)), out_path);
  return 0;
}

int cmd_estimate(const ss::ExperimentConfig& cfg, const std::string& out_path) {
  ss::HostGraph g = ss::HostGraph::load_file(cfg.graph_source);
  ss::Pattern h = ss::Pattern::parse(cfg.pattern_spec);
  ss::Decomposition t = ss::decompose(h);
  long long f = ss::count_configurations(h, t);
  auto est = ss::estimate_count(g, h, t, f, cfg.trials, cfg.seed, cfg.threads);
  emit(render(ss::build_estimate_report(g, h, t, f, cfg, est), cfg.format),
       out_path);
  return 0;
}

int cmd_gen(const std::string& spec, int n, double p, uint64_t seed, int clique,
            int tail, const std::string& out_path) {
  ss::HostGraph g = ss::make_path(0);
  if (spec == "er") {
    g = ss::make_erdos_renyi(n, p, seed);
  } else if (spec == "lollipop") {
    g = ss::make_lollipop(clique, tail);
  } else {
    ss::Pattern h = ss::Pattern::parse(spec);
    g = ss::HostGraph::from_edges(h.n(), h.edges());
  }
  emit(g.to_edge_list_text(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exactly-uniform subgraph sampling in the augmented query model"};
  app.require_subcommand(1);

  ss::ExperimentConfig cfg;
  cfg.seed = default_seed();
  std::string out_path;
  std::string mutate = "none";

  auto add_common = [&](CLI::App* sub, bool needs_graph) {
    if (needs_graph)
      sub->add_option("--graph", cfg.graph_source, "edge-list file")->required();
    sub->add_option("--pattern", cfg.pattern_spec,
                    "pattern spec (K3, C5, S3, P4, @file.edges)")
        ->required();
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = serial)");
    sub->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out_path, "output file (default stdout)");
  };

  auto* sample = app.add_subcommand("sample", "run the uniform sampler");
  add_common(sample, true);
  sample->add_option("--trials", cfg.trials, "wrapper repetitions");
  sample->add_option("--xh", cfg.xh_mode, "exact | estimate | <positive value>");
  sample->add_flag("--timing", cfg.include_timing,
                   "include wall time in the report (not reproducible)");

  auto* verify = app.add_subcommand("verify-exact",
                                    "symbolically verify per-instance probabilities");
  add_common(verify, true);
  verify->add_option("--mutate", mutate, "none | skip-coin | skip-order");

  auto* decomp = app.add_subcommand("decompose", "show the pattern decomposition");
  decomp->add_option("--pattern", cfg.pattern_spec, "pattern spec")->required();
  decomp->add_option("--out", out_path, "output file (default stdout)");

  auto* estimate = app.add_subcommand("estimate-count", "estimate #H");
  add_common(estimate, true);
  estimate->add_option("--trials", cfg.trials, "sampler trials");

  auto* gen = app.add_subcommand("gen", "generate a corpus graph");
  std::string gen_spec;
  int gen_n = 10, gen_clique = 4, gen_tail = 4;
  double gen_p = 0.5;
  uint64_t gen_seed = ss::kDefaultSeed;
  gen->add_option("spec", gen_spec, "K6 | C5 | S9 | P7 | er | lollipop")
      ->required();
  gen->add_option("--n", gen_n, "vertex count (er)");
  gen->add_option("--p", gen_p, "edge probability (er)");
  gen->add_option("--seed", gen_seed, "generator seed (er)");
  gen->add_option("--clique", gen_clique, "clique size (lollipop)");
  gen->add_option("--tail", gen_tail, "tail length (lollipop)");
  gen->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed()) return cmd_sample(cfg, out_path);
    if (verify->parsed()) return cmd_verify_exact(cfg, mutate, out_path);
    if (decomp->parsed()) return cmd_decompose(cfg.pattern_spec, out_path);
    if (estimate->parsed()) return cmd_estimate(cfg, out_path);
    if (gen->parsed())
      return cmd_gen(gen_spec, gen_n, gen_p, gen_seed, gen_clique, gen_tail,
                     out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
