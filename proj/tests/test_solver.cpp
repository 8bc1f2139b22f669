#include <gtest/gtest.h>

#include <random>

#include "mcsdal/oracle.hpp"
#include "mcsdal/solver.hpp"
#include "test_util.hpp"

namespace mcsdal {
namespace {

using testing::complete_graph;
using testing::path_graph;
using testing::star_graph;

std::vector<SolverConfig> all_configs() {
  std::vector<SolverConfig> out;
  for (const auto& label : all_policy_labels())
    for (bool lum : {false, true}) {
      SolverConfig cfg;
      cfg.policy = *parse_policy(label, 17);
      cfg.lum = lum;
      out.push_back(cfg);
    }
  return out;
}

TEST(CheckSolution, Examples) {
  Graph k2 = complete_graph(2);
  EXPECT_TRUE(check_solution(k2, k2, {{0, 0}, {1, 1}}));
  EXPECT_FALSE(check_solution(path_graph(3), complete_graph(3), {{0, 0}, {1, 1}, {2, 2}}));
  EXPECT_TRUE(check_solution(k2, k2, {}));
  EXPECT_FALSE(check_solution(k2, k2, {{0, 0}, {0, 1}}));
  EXPECT_FALSE(check_solution(k2, k2, {{0, 0}, {1, 0}}));
  EXPECT_FALSE(check_solution(k2, k2, {{0, 5}}));
}

TEST(Solve, SmallExamples) {
  Graph k2 = complete_graph(2);
  auto r = solve(k2, k2);
  EXPECT_EQ(r.size, 2u);
  EXPECT_EQ(r.status, SolveStatus::Optimal);
  EXPECT_TRUE(check_solution(k2, k2, r.best));

  auto r2 = solve(path_graph(3), complete_graph(3));
  EXPECT_EQ(r2.size, 2u);
  EXPECT_TRUE(check_solution(path_graph(3), complete_graph(3), r2.best));
}

TEST(Solve, EmptyGraphsShortCircuit) {
  auto r = solve(Graph(0), complete_graph(3));
  EXPECT_EQ(r.size, 0u);
  EXPECT_EQ(r.status, SolveStatus::Optimal);
  EXPECT_EQ(r.recursive_calls, 0u);
  EXPECT_EQ(solve(complete_graph(3), Graph(0)).size, 0u);
}

TEST(Solve, SingleVertices) {
  Graph one(1);
  for (const auto& cfg : all_configs()) EXPECT_EQ(solve(one, one, cfg).size, 1u);
}

TEST(Solve, RejectsNonPositiveBudgets) {
  Graph k2 = complete_graph(2);
  SolverConfig cfg;
  cfg.node_budget = 0;
  EXPECT_THROW(solve(k2, k2, cfg), ContractViolation);
  cfg = {};
  cfg.max_nb_app = 0;
  EXPECT_THROW(solve(k2, k2, cfg), ContractViolation);
}

TEST(Solve, DefaultParameters) {
  SolverConfig cfg;
  EXPECT_EQ(cfg.t_v, 100000u);
  EXPECT_EQ(cfg.t_vw, 1000000000u);
  EXPECT_FALSE(cfg.max_nb_app.has_value());
  EXPECT_EQ(cfg.effective_max_nb_app(path_graph(7), complete_graph(4)), 8u);
  EXPECT_TRUE(std::holds_alternative<AlternateMode>(cfg.policy));
  EXPECT_FALSE(cfg.lum);
}

TEST(Solve, MatchesOracleOnRandomPairs) {
  std::mt19937_64 rng(123);
  const auto configs = all_configs();
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t np = 1 + rng() % 8, nt = 1 + rng() % 8;
    const double p = std::array{0.2, 0.5, 0.8}[trial % 3];
    Graph gp = testing::random_graph(np, p, rng), gt = testing::random_graph(nt, p, rng);
    const std::size_t expected = brute_force_mcs(gp, gt).size;
    for (const auto& cfg : configs) {
      auto r = solve(gp, gt, cfg);
      ASSERT_EQ(r.size, expected) << "trial " << trial << " " << policy_label(cfg.policy);
      ASSERT_EQ(r.best.size(), r.size);
      ASSERT_TRUE(check_solution(gp, gt, r.best));
    }
  }
}

TEST(Solve, RootBoundIsMinOfSizes) {
  Graph a = path_graph(5), b = complete_graph(3);
  EXPECT_EQ(bound_sum(initial_environment(a, b)), 3u);
}

TEST(Solve, DeterministicTraces) {
  std::mt19937_64 rng(5);
  Graph gp = testing::random_graph(14, 0.5, rng), gt = testing::random_graph(14, 0.5, rng);
  for (const auto& cfg : all_configs()) {
    std::vector<std::size_t> t1, t2;
    SearchObserver o1{{}, [&](const Assignment& a) { t1.push_back(a.size()); }};
    SearchObserver o2{{}, [&](const Assignment& a) { t2.push_back(a.size()); }};
    auto r1 = solve(gp, gt, cfg, &o1);
    auto r2 = solve(gp, gt, cfg, &o2);
    EXPECT_EQ(r1.recursive_calls, r2.recursive_calls);
    EXPECT_EQ(r1.best, r2.best);
    EXPECT_EQ(t1, t2);
    EXPECT_TRUE(std::is_sorted(t1.begin(), t1.end()));  // incumbent never shrinks
    EXPECT_EQ(r1.stats.incumbent_updates, t1.size());
  }
}

TEST(Solve, NodeBudget) {
  std::mt19937_64 rng(8);
  Graph gp = testing::random_graph(20, 0.5, rng), gt = testing::random_graph(20, 0.5, rng);
  SolverConfig cfg;
  cfg.node_budget = 50;
  auto r = solve(gp, gt, cfg);
  EXPECT_EQ(r.status, SolveStatus::NodeBudgetExhausted);
  EXPECT_LE(r.recursive_calls, 50u);
  EXPECT_TRUE(check_solution(gp, gt, r.best));
  EXPECT_GT(r.size, 0u);
}

TEST(Solve, TimeBudget) {
  std::mt19937_64 rng(9);
  Graph gp = testing::random_graph(60, 0.5, rng), gt = testing::random_graph(60, 0.5, rng);
  SolverConfig cfg;
  cfg.time_budget = std::chrono::milliseconds(50);
  auto r = solve(gp, gt, cfg);
  EXPECT_EQ(r.status, SolveStatus::TimedOut);
  EXPECT_LT(r.elapsed.count(), 2.0);
  EXPECT_TRUE(check_solution(gp, gt, r.best));
}

TEST(Solve, RecursiveCallsCountPrunedCalls) {
  Graph k2 = complete_graph(2);
  auto r = solve(k2, k2, {.policy = SingleMode{PolicyKind::Degree}});
  EXPECT_GT(r.stats.prunes, 0u);
  // Root, child after (0,0), grandchild after (1,1): then every further call
  // is cut by the bound.
  EXPECT_GE(r.recursive_calls, 3u);
}

// Exhaustive search of the subproblem under a pruned call: extensions of the
// current matching that only use vertices still in the environment.
std::size_t best_extension(const Graph& gp, const Graph& gt, const Environment& env, Assignment& cur) {
  std::size_t best = cur.size();
  auto left = env.all_left();
  auto right = env.all_right();
  std::vector<VertexId> lp(left.begin(), left.end()), rt(right.begin(), right.end());
  std::sort(lp.begin(), lp.end());
  std::vector<bool> used(gt.size(), false);
  for (auto [v, w] : cur) used[w] = true;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    best = std::max(best, cur.size());
    if (i == lp.size()) return;
    for (VertexId x : rt) {
      if (used[x]) continue;
      bool ok = true;
      for (auto [u, y] : cur) ok = ok && gp.adjacent(lp[i], u) == gt.adjacent(x, y);
      if (!ok) continue;
      used[x] = true;
      cur.push_back({lp[i], x});
      go(i + 1);
      cur.pop_back();
      used[x] = false;
    }
    go(i + 1);
  };
  go(0);
  return best;
}

TEST(Solve, PrunedSubtreesHoldNothingBetter) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Graph gp = testing::random_graph(6, 0.5, rng), gt = testing::random_graph(6, 0.5, rng);
    for (const auto& cfg : all_configs()) {
      std::size_t checked = 0;
      SearchObserver obs;
      obs.on_prune = [&](const Environment& env, const Assignment& cur, std::size_t incumbent) {
        Assignment c = cur;
        EXPECT_LE(best_extension(gp, gt, env, c), incumbent);
        ++checked;
      };
      solve(gp, gt, cfg, &obs);
      EXPECT_GT(checked, 0u);
    }
  }
}

TEST(Lum, PairsLeavesSmallestFirst) {
  // v = 0 has leaves {3, 4}; w = 0 has leaf {2}.
  Graph gp = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 2}});
  Graph gt = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}});
  ASSERT_EQ(leaf_neighbours(gp, 0), (std::vector<VertexId>{3, 4}));
  ASSERT_EQ(leaf_neighbours(gt, 0), (std::vector<VertexId>{2}));
  Environment child = split(initial_environment(gp, gt), 0, 0, gp, gt);
  auto [env, cur] = lum_extend(gp, gt, 0, 0, child, {{0, 0}});
  EXPECT_EQ(cur, (Assignment{{0, 0}, {3, 2}}));
  EXPECT_TRUE(check_solution(gp, gt, cur));
  EXPECT_FALSE(testing::as_set(env).empty());
  for (VertexId u : env.all_left()) EXPECT_NE(u, 3u);
  for (VertexId x : env.all_right()) EXPECT_NE(x, 2u);
}

TEST(Lum, NoLeavesIsNoop) {
  Graph k3 = complete_graph(3);
  Environment child = split(initial_environment(k3, k3), 0, 0, k3, k3);
  auto [env, cur] = lum_extend(k3, k3, 0, 0, child, {{0, 0}});
  EXPECT_EQ(env, child);
  EXPECT_EQ(cur, (Assignment{{0, 0}}));
}

TEST(Lum, StarsMatchCompletely) {
  Graph s = star_graph(3);
  EXPECT_EQ(brute_force_mcs(s, s).size, 4u);
  Environment child = split(initial_environment(s, s), 0, 0, s, s);
  auto [env, cur] = lum_extend(s, s, 0, 0, child, {{0, 0}});
  EXPECT_EQ(cur.size(), 4u);
  EXPECT_TRUE(env.empty());
  EXPECT_TRUE(check_solution(s, s, cur));

  SolverConfig cfg;
  cfg.lum = true;
  auto r = solve(s, s, cfg);
  EXPECT_EQ(r.size, 4u);
  EXPECT_GT(r.stats.lum_pairs, 0u);
}

}  // namespace
}  // namespace mcsdal
