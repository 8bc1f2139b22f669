#ifndef MCSDAL_SOLVER_HPP_
#define MCSDAL_SOLVER_HPP_

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mcsdal/environment.hpp"
#include "mcsdal/graph.hpp"
#include "mcsdal/policy.hpp"

namespace mcsdal {

enum class SolveStatus { Optimal, TimedOut, NodeBudgetExhausted };

inline std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::TimedOut: return "TimedOut";
    case SolveStatus::NodeBudgetExhausted: return "NodeBudgetExhausted";
  }
  return "?";
}

struct SolverConfig {
  HybridMode policy = AlternateMode{};
  std::uint64_t t_v = ScoreTables::kDefaultTv;
  std::uint64_t t_vw = ScoreTables::kDefaultTvw;
  /// Unset means 2 * min(|Vp|, |Vt|) for the instance at hand.
  std::optional<std::uint64_t> max_nb_app;
  bool lum = false;
  std::optional<std::chrono::duration<double>> time_budget;
  std::optional<std::uint64_t> node_budget;
  RlReward rl_reward = RlReward::SumDelta;

  std::uint64_t effective_max_nb_app(const Graph& gp, const Graph& gt) const {
    if (max_nb_app) return *max_nb_app;
    return std::max<std::uint64_t>(1, 2 * std::min(gp.size(), gt.size()));
  }
};

struct SearchStats {
  std::uint64_t prunes = 0;
  std::uint64_t policy_switches = 0;
  std::uint64_t incumbent_updates = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t lum_pairs = 0;
};

struct SolveResult {
  Assignment best;
  std::size_t size = 0;
  std::uint64_t recursive_calls = 0;
  std::chrono::duration<double> elapsed{};
  SolveStatus status = SolveStatus::Optimal;
  SearchStats stats;
};

/// Optional instrumentation; both callbacks may be left empty.
struct SearchObserver {
  /// A call was cut by the bound: (environment, current matching, incumbent size).
  std::function<void(const Environment&, const Assignment&, std::size_t)> on_prune;
  /// A new incumbent was recorded.
  std::function<void(const Assignment&)> on_incumbent;
};

/// True iff `a` is injective on both sides and preserves adjacency and
/// non-adjacency between every two of its pairs.
inline bool check_solution(const Graph& gp, const Graph& gt, const Assignment& a) {
  std::vector<bool> used_p(gp.size(), false), used_t(gt.size(), false);
  for (const auto& [v, w] : a) {
    if (v >= gp.size() || w >= gt.size() || used_p[v] || used_t[w]) return false;
    used_p[v] = used_t[w] = true;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (gp.adjacent(a[i].v, a[j].v) != gt.adjacent(a[i].w, a[j].w)) return false;
  return true;
}

namespace detail {

inline bool contains(std::span<const VertexId> xs, VertexId x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

// Pairs the leaves of v and w still present in env, smallest ids first, and
// consumes each pair from env. Returns the number of pairs added.
inline std::size_t lum_apply(const Graph& gp, const Graph& gt, const std::vector<VertexId>& leaves_v,
                             const std::vector<VertexId>& leaves_w, Environment& env,
                             Assignment& cur) {
  std::vector<VertexId> lp, lt;
  for (VertexId u : leaves_v)
    if (contains(env.all_left(), u)) lp.push_back(u);
  for (VertexId x : leaves_w)
    if (contains(env.all_right(), x)) lt.push_back(x);
  const std::size_t k = std::min(lp.size(), lt.size());
  for (std::size_t i = 0; i < k; ++i) {
    env = split(env, lp[i], lt[i], gp, gt);
    cur.push_back({lp[i], lt[i]});
  }
  return k;
}

class Search {
 public:
  Search(const Graph& gp, const Graph& gt, const SolverConfig& cfg, const SearchObserver* obs)
      : gp_(gp),
        gt_(gt),
        cfg_(cfg),
        obs_(obs),
        tables_(gp.size(), gt.size(), cfg.t_v, cfg.t_vw),
        ctl_(cfg.policy, cfg.effective_max_nb_app(gp, gt), std::min(gp.size(), gt.size())) {
    if (cfg.lum) {
      leaves_p_.resize(gp.size());
      leaves_t_.resize(gt.size());
      for (VertexId v = 0; v < gp.size(); ++v) leaves_p_[v] = leaf_neighbours(gp, v);
      for (VertexId w = 0; w < gt.size(); ++w) leaves_t_[w] = leaf_neighbours(gt, w);
    }
  }

  SolveResult run() {
    const auto start = std::chrono::steady_clock::now();
    if (cfg_.time_budget)
      deadline_ = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(*cfg_.time_budget);
    expand(initial_environment(gp_, gt_), 1);
    SolveResult r;
    r.best = best_;
    r.size = best_.size();
    r.recursive_calls = calls_;
    r.elapsed = std::chrono::steady_clock::now() - start;
    r.status = status_;
    r.stats = stats_;
    r.stats.policy_switches = ctl_.switches();
    return r;
  }

 private:
  bool out_of_budget() {
    if (cfg_.node_budget && calls_ >= *cfg_.node_budget) {
      status_ = SolveStatus::NodeBudgetExhausted;
      return stop_ = true;
    }
    if (deadline_ && std::chrono::steady_clock::now() >= *deadline_) {
      status_ = SolveStatus::TimedOut;
      return stop_ = true;
    }
    return false;
  }

  void record_incumbent() {
    assert(check_solution(gp_, gt_, cur_));
    best_ = cur_;
    ++stats_.incumbent_updates;
    ctl_.on_improvement();
    if (obs_ && obs_->on_incumbent) obs_->on_incumbent(best_);
  }

  void expand(const Environment& env, std::uint64_t depth) {
    if (stop_ || out_of_budget()) return;
    ++calls_;
    stats_.max_depth = std::max(stats_.max_depth, depth);

    if (cur_.size() + bound_sum(env) <= best_.size()) {
      ++stats_.prunes;
      if (obs_ && obs_->on_prune) obs_->on_prune(env, cur_, best_.size());
      return;
    }

    const auto domain = env[select_domain(env, gp_)];
    const PolicyKind policy = ctl_.begin_node(cur_.size() + 1);
    const VertexId v = select_v(domain, tables_, policy, gp_);
    ctl_.on_selection();
    const std::vector<VertexId> targets = order_w(domain, v, tables_, policy, gt_);

    for (VertexId w : targets) {
      if (stop_) return;
      ctl_.on_selection();
      cur_.push_back({v, w});
      Environment child = split(env, v, w, gp_, gt_);
      update_scores(tables_, v, w, reward_rl(env, child, cfg_.rl_reward), reward_dal(env, child));
      std::size_t extra = 0;
      if (cfg_.lum) {
        extra = lum_apply(gp_, gt_, leaves_p_[v], leaves_t_[w], child, cur_);
        stats_.lum_pairs += extra;
      }
      if (cur_.size() > best_.size()) record_incumbent();
      expand(child, depth + 1);
      cur_.resize(cur_.size() - 1 - extra);
    }
    if (stop_) return;
    expand(remove_left_vertex(env, v), depth + 1);
  }

  const Graph& gp_;
  const Graph& gt_;
  const SolverConfig& cfg_;
  const SearchObserver* obs_;
  ScoreTables tables_;
  HybridController ctl_;
  std::vector<std::vector<VertexId>> leaves_p_, leaves_t_;
  Assignment cur_, best_;
  std::uint64_t calls_ = 0;
  SearchStats stats_;
  SolveStatus status_ = SolveStatus::Optimal;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  bool stop_ = false;
};

}  // namespace detail

/// Exact maximum common induced subgraph by bidomain branch and bound.
/// Returns the best matching found; `status` says whether the search tree
/// was exhausted or a budget cut it short.
inline SolveResult solve(const Graph& gp, const Graph& gt, const SolverConfig& cfg = {},
                         const SearchObserver* observer = nullptr) {
  if (cfg.node_budget && *cfg.node_budget == 0) throw ContractViolation("node budget must be positive");
  if (cfg.time_budget && cfg.time_budget->count() <= 0) throw ContractViolation("time budget must be positive");
  if (cfg.max_nb_app && *cfg.max_nb_app == 0) throw ContractViolation("max_nb_app must be positive");
  if (gp.empty() || gt.empty()) return {};
  return detail::Search(gp, gt, cfg, observer).run();
}

/// Leaf-union match after (v, w): pairs the degree-1 neighbours of v with
/// those of w that are still in `env`, smallest ids first, and consumes them.
inline std::pair<Environment, Assignment> lum_extend(const Graph& gp, const Graph& gt, VertexId v,
                                                     VertexId w, Environment env, Assignment cur) {
  detail::lum_apply(gp, gt, leaf_neighbours(gp, v), leaf_neighbours(gt, w), env, cur);
  return {std::move(env), std::move(cur)};
}

}  // namespace mcsdal

#endif  // MCSDAL_SOLVER_HPP_
