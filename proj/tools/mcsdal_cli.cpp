// mcsdal: solve, batch-benchmark and generate maximum common induced subgraph
// instances.
//
// Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 search stopped
// by a budget (solve only).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcsdal/bench.hpp"
#include "mcsdal/solver.hpp"

namespace {

using namespace mcsdal;
namespace bench = mcsdal::bench;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct SolverFlags {
  double timeout = 0;
  std::uint64_t node_budget = 0;
  bool lum = false;
  std::uint64_t seed = 0;
  std::uint64_t tv = ScoreTables::kDefaultTv;
  std::uint64_t tvw = ScoreTables::kDefaultTvw;
  std::uint64_t max_nb_app = 0;
  std::string rl_reward = "sum-delta";
  std::string format = "auto";
  bool symmetrize = false;

  void attach(CLI::App& app) {
    app.add_option("--timeout", timeout, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
    app.add_option("--node-budget", node_budget, "Limit on recursive calls")->check(CLI::PositiveNumber);
    app.add_flag("--lum", lum, "Match leaf neighbours together after each match");
    app.add_option("--seed", seed, "Seed for hybrid-rand");
    app.add_option("--tv", tv, "Vertex score decay threshold")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--tvw", tvw, "Pair score decay threshold")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--max-nb-app", max_nb_app, "Selections between hybrid switches (default 2*min(|Vp|,|Vt|))")
        ->check(CLI::PositiveNumber);
    app.add_option("--rl-reward", rl_reward, "RL reward form")
        ->check(CLI::IsMember({"sum-delta", "ub-delta"}))
        ->capture_default_str();
    app.add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"auto", "lad", "dimacs"}))
        ->capture_default_str();
    app.add_flag("--symmetrize", symmetrize, "Treat asymmetric LAD neighbour lists as undirected");
  }

  SolverConfig config(const std::string& policy) const {
    SolverConfig cfg;
    cfg.policy = *parse_policy(policy, seed);
    cfg.lum = lum;
    cfg.t_v = tv;
    cfg.t_vw = tvw;
    if (max_nb_app) cfg.max_nb_app = max_nb_app;
    if (timeout > 0) cfg.time_budget = std::chrono::duration<double>(timeout);
    if (node_budget) cfg.node_budget = node_budget;
    cfg.rl_reward = rl_reward == "ub-delta" ? RlReward::UbDelta : RlReward::SumDelta;
    return cfg;
  }

  bench::GraphFormat graph_format() const {
    if (format == "lad") return bench::GraphFormat::Lad;
    if (format == "dimacs") return bench::GraphFormat::Dimacs;
    return bench::GraphFormat::Auto;
  }
};

int cmd_solve(const std::string& pattern, const std::string& target, const std::string& policy,
              const SolverFlags& flags) {
  Graph gp, gt;
  try {
    gp = bench::load_graph(pattern, flags.graph_format(), {flags.symmetrize});
  } catch (const std::exception& e) {
    std::cerr << pattern << ": " << e.what() << '\n';
    return kExitInput;
  }
  try {
    gt = bench::load_graph(target, flags.graph_format(), {flags.symmetrize});
  } catch (const std::exception& e) {
    std::cerr << target << ": " << e.what() << '\n';
    return kExitInput;
  }
  const SolverConfig cfg = flags.config(policy);
  const SolveResult r = solve(gp, gt, cfg);
  std::cout << "policy: " << bench::run_label(cfg) << '\n'
            << "size: " << r.size << '\n'
            << "status: " << to_string(r.status) << '\n'
            << "elapsed_ms: " << std::fixed << std::setprecision(3)
            << std::chrono::duration<double, std::milli>(r.elapsed).count() << '\n'
            << "recursive_calls: " << r.recursive_calls << '\n'
            << "policy_switches: " << r.stats.policy_switches << '\n'
            << "pairs:";
  for (const auto& [v, w] : r.best) std::cout << " (" << v << ',' << w << ')';
  std::cout << '\n';
  return r.status == SolveStatus::Optimal ? 0 : kExitBudget;
}

int cmd_bench(const std::string& manifest_path, const std::vector<std::string>& policies,
              unsigned jobs, const std::string& out_path, const SolverFlags& flags) {
  std::vector<bench::ManifestEntry> manifest;
  try {
    manifest = bench::load_manifest(manifest_path);
  } catch (const std::exception& e) {
    std::cerr << manifest_path << ": " << e.what() << '\n';
    return kExitInput;
  }
  bench::BatchOptions opts;
  for (const auto& p : policies) opts.configs.push_back(flags.config(p));
  opts.format = flags.graph_format();
  opts.parse.symmetrize = flags.symmetrize;
  opts.base_dir = std::filesystem::path(manifest_path).parent_path();
  opts.jobs = jobs;
  const auto rows = bench::run_batch(manifest, opts);
  if (out_path.empty() || out_path == "-") {
    bench::write_csv(std::cout, rows);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << out_path << ": cannot open for writing\n";
    return kExitInput;
  }
  bench::write_csv(out, rows);
  return 0;
}

int cmd_gen(std::size_t n_p, std::size_t n_t, double p, std::uint64_t seed, const std::string& out_dir) {
  try {
    auto [pp, tp] = bench::write_generated(bench::generate_pair(n_p, n_t, p, seed), out_dir);
    std::cout << pp.string() << ' ' << tp.string() << '\n';
  } catch (const std::exception& e) {
    std::cerr << out_dir << ": " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}

int cmd_cactus(const std::string& csv_path, const std::string& metric) {
  std::ifstream in(csv_path);
  if (!in) {
    std::cerr << csv_path << ": cannot open\n";
    return kExitInput;
  }
  try {
    const auto rows = bench::read_csv(in);
    bench::write_cactus(std::cout, bench::cactus(rows, metric == "calls" ? bench::CactusMetric::Calls
                                                                        : bench::CactusMetric::Time));
  } catch (const std::exception& e) {
    std::cerr << csv_path << ": " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum common induced subgraph solver with learned branching"};
  app.require_subcommand(1);

  const auto policy_check = CLI::IsMember(all_policy_labels());

  auto* solve_cmd = app.add_subcommand("solve", "Solve one pattern/target pair");
  std::string pattern, target, policy = "hybrid";
  SolverFlags solve_flags;
  solve_cmd->add_option("pattern", pattern, "Pattern graph file")->required();
  solve_cmd->add_option("target", target, "Target graph file")->required();
  solve_cmd->add_option("--policy", policy, "Branching policy")->check(policy_check)->capture_default_str();
  solve_flags.attach(*solve_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "Run a manifest of instances and emit CSV");
  std::string manifest, out_path;
  std::vector<std::string> policies;
  unsigned jobs = 1;
  SolverFlags bench_flags;
  bench_cmd->add_option("manifest", manifest, "File with one 'pattern target' pair per line")->required();
  bench_cmd->add_option("--policy", policies, "Policies to run (repeat or comma-separate)")
      ->delimiter(',')
      ->check(policy_check);
  bench_cmd->add_option("--jobs", jobs, "Instances solved concurrently")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", out_path, "CSV output file (default stdout)");
  bench_flags.attach(*bench_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Write a random G(n,p) pattern/target pair as LAD");
  std::size_t n_p = 0, n_t = 0;
  double edge_prob = 0;
  std::uint64_t gen_seed = 0;
  std::string out_dir;
  gen_cmd->add_option("n_p", n_p, "Pattern vertex count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("n_t", n_t, "Target vertex count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("edge_prob", edge_prob, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("seed", gen_seed, "Generator seed")->required();
  gen_cmd->add_option("out_dir", out_dir, "Output directory")->required();

  auto* cactus_cmd = app.add_subcommand("cactus", "Cactus-plot series from a bench CSV");
  std::string csv_path, metric = "time";
  cactus_cmd->add_option("csv", csv_path, "CSV written by bench")->required();
  cactus_cmd->add_option("--metric", metric, "Cost per solved instance")
      ->check(CLI::IsMember({"time", "calls"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (*solve_cmd) return cmd_solve(pattern, target, policy, solve_flags);
  if (*bench_cmd) {
    if (policies.empty()) policies.push_back("hybrid");
    return cmd_bench(manifest, policies, jobs, out_path, bench_flags);
  }
  if (*gen_cmd) return cmd_gen(n_p, n_t, edge_prob, gen_seed, out_dir);
  if (*cactus_cmd) return cmd_cactus(csv_path, metric);
  return kExitUsage;
}
