#ifndef MCSDAL_POLICY_HPP_
#define MCSDAL_POLICY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "mcsdal/environment.hpp"
#include "mcsdal/graph.hpp"

namespace mcsdal {

enum class PolicyKind { Degree, RL, DAL, LL };

inline std::string_view to_string(PolicyKind k) {
  switch (k) {
    case PolicyKind::Degree: return "degree";
    case PolicyKind::RL: return "rl";
    case PolicyKind::DAL: return "dal";
    case PolicyKind::LL: return "ll";
  }
  return "?";
}

/// How the RL reward measures the bound change of a match.
enum class RlReward {
  SumDelta,  // bound_sum(env) - bound_sum(child); counts the consumed pair
  UbDelta,   // full upper-bound change, |curSol| + bound_sum; one less than SumDelta
};

// ---------------------------------------------------------------------------
// Rewards

inline std::uint64_t reward_rl(const Environment& env, const Environment& child,
                               RlReward variant = RlReward::SumDelta) {
  const std::size_t before = bound_sum(env);
  const std::size_t after = bound_sum(child);
  std::uint64_t r = before - after;
  if (variant == RlReward::UbDelta) r = r > 0 ? r - 1 : 0;
  return r;
}

/// Bound reduction plus the number of domains in the child environment.
inline std::uint64_t reward_dal(const Environment& env, const Environment& child) {
  return bound_sum(env) - bound_sum(child) + child.size();
}

// ---------------------------------------------------------------------------
// Score tables

/// Accumulator keyed by (pattern vertex, target vertex). Dense when the
/// product of the graph sizes is small, otherwise a hash map holding only
/// pairs that were ever rewarded. Absent entries read as zero.
class PairTable {
 public:
  static constexpr std::size_t kDenseLimit = std::size_t{1} << 20;

  PairTable() = default;
  PairTable(std::size_t np, std::size_t nt) : nt_(nt) {
    if (np * nt <= kDenseLimit) dense_.assign(np * nt, 0);
    else sparse_.emplace();
  }

  std::uint64_t get(VertexId v, VertexId w) const {
    const std::size_t key = static_cast<std::size_t>(v) * nt_ + w;
    if (!sparse_) return dense_[key];
    auto it = sparse_->find(key);
    return it == sparse_->end() ? 0 : it->second;
  }

  /// Adds r and returns the new value.
  std::uint64_t add(VertexId v, VertexId w, std::uint64_t r) {
    const std::size_t key = static_cast<std::size_t>(v) * nt_ + w;
    if (!sparse_) return dense_[key] += r;
    return (*sparse_)[key] += r;
  }

  void halve_all() {
    if (!sparse_) {
      for (auto& x : dense_) x /= 2;
      return;
    }
    for (auto it = sparse_->begin(); it != sparse_->end();) {
      it->second /= 2;
      it = it->second == 0 ? sparse_->erase(it) : std::next(it);
    }
  }

  std::uint64_t max_value() const {
    std::uint64_t m = 0;
    if (!sparse_)
      for (auto x : dense_) m = std::max(m, x);
    else
      for (const auto& [k, x] : *sparse_) m = std::max(m, x);
    return m;
  }

  bool is_dense() const noexcept { return !sparse_; }

 private:
  std::size_t nt_ = 0;
  std::vector<std::uint64_t> dense_;
  std::optional<std::unordered_map<std::size_t, std::uint64_t>> sparse_;
};

/// Accumulated rewards for every policy. All tables learn at every match,
/// whichever policy is active.
struct ScoreTables {
  static constexpr std::uint64_t kDefaultTv = 100'000;
  static constexpr std::uint64_t kDefaultTvw = 1'000'000'000;

  std::vector<std::uint64_t> rl_vertex;   // pattern side, RL reward
  std::vector<std::uint64_t> rl_target;   // target side, RL reward
  std::vector<std::uint64_t> dal_vertex;  // DAL(v)
  PairTable dal_pair;                     // DAL(v, w)
  PairTable ll_pair;                      // pair memory, RL reward
  std::uint64_t t_v = kDefaultTv;
  std::uint64_t t_vw = kDefaultTvw;

  ScoreTables() = default;
  ScoreTables(std::size_t np, std::size_t nt, std::uint64_t tv = kDefaultTv,
              std::uint64_t tvw = kDefaultTvw)
      : rl_vertex(np, 0),
        rl_target(nt, 0),
        dal_vertex(np, 0),
        dal_pair(np, nt),
        ll_pair(np, nt),
        t_v(tv),
        t_vw(tvw) {}
};

namespace detail {
inline void bump(std::vector<std::uint64_t>& table, VertexId i, std::uint64_t r,
                 std::uint64_t threshold) {
  if ((table[i] += r) >= threshold)
    for (auto& x : table) x /= 2;
}
inline void bump(PairTable& table, VertexId v, VertexId w, std::uint64_t r,
                 std::uint64_t threshold) {
  if (table.add(v, w, r) >= threshold) table.halve_all();
}
}  // namespace detail

/// Credits the rewards of matching (v, w). A table whose updated entry
/// reaches its threshold is halved as a whole (floor).
inline void update_scores(ScoreTables& t, VertexId v, VertexId w, std::uint64_t r_rl,
                          std::uint64_t r_dal) {
  detail::bump(t.rl_vertex, v, r_rl, t.t_v);
  detail::bump(t.rl_target, w, r_rl, t.t_v);
  detail::bump(t.dal_vertex, v, r_dal, t.t_v);
  detail::bump(t.dal_pair, v, w, r_dal, t.t_vw);
  detail::bump(t.ll_pair, v, w, r_rl, t.t_vw);
}

// ---------------------------------------------------------------------------
// Vertex selection

inline std::uint64_t vertex_score(const ScoreTables& t, PolicyKind kind, const Graph& gp,
                                  VertexId v) {
  switch (kind) {
    case PolicyKind::Degree: return gp.degree(v);
    case PolicyKind::RL:
    case PolicyKind::LL: return t.rl_vertex[v];
    case PolicyKind::DAL: return t.dal_vertex[v];
  }
  return 0;
}

inline std::uint64_t target_score(const ScoreTables& t, PolicyKind kind, const Graph& gt,
                                  VertexId v, VertexId w) {
  switch (kind) {
    case PolicyKind::Degree: return gt.degree(w);
    case PolicyKind::RL: return t.rl_target[w];
    case PolicyKind::DAL: return t.dal_pair.get(v, w);
    case PolicyKind::LL: return t.ll_pair.get(v, w);
  }
  return 0;
}

/// Pattern vertex to branch on: highest score, then highest degree, then
/// lowest id.
inline VertexId select_v(BidomainView domain, const ScoreTables& t, PolicyKind kind,
                         const Graph& gp) {
  if (domain.left.empty()) throw ContractViolation("select_v on empty left side");
  VertexId best = domain.left[0];
  std::uint64_t best_score = vertex_score(t, kind, gp, best);
  for (VertexId u : domain.left.subspan(1)) {
    const std::uint64_t s = vertex_score(t, kind, gp, u);
    if (s != best_score) {
      if (s > best_score) best = u, best_score = s;
      continue;
    }
    const auto du = gp.degree(u), db = gp.degree(best);
    if (du > db || (du == db && u < best)) best = u;
  }
  return best;
}

/// Order in which target vertices are tried against v: score descending,
/// then degree descending, then id ascending.
inline std::vector<VertexId> order_w(BidomainView domain, VertexId v, const ScoreTables& t,
                                     PolicyKind kind, const Graph& gt) {
  struct Keyed {
    std::uint64_t score;
    std::size_t deg;
    VertexId w;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(domain.right.size());
  for (VertexId w : domain.right) keyed.push_back({target_score(t, kind, gt, v, w), gt.degree(w), w});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.deg != b.deg) return a.deg > b.deg;
    return a.w < b.w;
  });
  std::vector<VertexId> out;
  out.reserve(keyed.size());
  for (const auto& k : keyed) out.push_back(k.w);
  return out;
}

// ---------------------------------------------------------------------------
// Hybrid controller

struct SingleMode {
  PolicyKind kind = PolicyKind::DAL;
  friend bool operator==(const SingleMode&, const SingleMode&) = default;
};
/// Switch between RL and DAL every max_nb_app selections.
struct AlternateMode {
  friend bool operator==(const AlternateMode&, const AlternateMode&) = default;
};
/// Pick RL or DAL uniformly at every branch node.
struct RandomMode {
  std::uint64_t seed = 0;
  friend bool operator==(const RandomMode&, const RandomMode&) = default;
};
/// Pick RL or DAL from the number of matched pairs.
struct DepthMode {
  friend bool operator==(const DepthMode&, const DepthMode&) = default;
};

using HybridMode = std::variant<SingleMode, AlternateMode, RandomMode, DepthMode>;

/// RL on the first quarter and the third quarter of [1, max_dep], DAL
/// elsewhere.
inline PolicyKind policy_at_depth(std::size_t max_dep, std::size_t depth) {
  const std::size_t q1 = max_dep / 4;
  const std::size_t half = (max_dep + 1) / 2;
  const std::size_t q3 = 3 * max_dep / 4;
  if ((depth >= 1 && depth <= q1) || (depth >= half && depth <= q3)) return PolicyKind::RL;
  return PolicyKind::DAL;
}

class HybridController {
 public:
  HybridController(HybridMode mode, std::uint64_t max_nb_app, std::size_t max_dep)
      : mode_(mode), max_nb_app_(std::max<std::uint64_t>(1, max_nb_app)), max_dep_(max_dep) {
    if (auto* s = std::get_if<SingleMode>(&mode_)) current_ = s->kind;
    if (auto* r = std::get_if<RandomMode>(&mode_)) rng_.seed(r->seed);
  }

  /// Policy for a branch node at the given depth (>= 1). Random mode draws a
  /// fresh policy here; Depth mode derives it from the depth.
  PolicyKind begin_node(std::size_t depth) {
    if (std::holds_alternative<RandomMode>(mode_)) {
      set_current((rng_() >> 63) ? PolicyKind::DAL : PolicyKind::RL);
    } else if (std::holds_alternative<DepthMode>(mode_)) {
      set_current(policy_at_depth(max_dep_, depth));
    }
    return current_;
  }

  /// A vertex v or w was chosen with the current policy.
  void on_selection() {
    if (!std::holds_alternative<AlternateMode>(mode_)) return;
    if (++nb_app_ >= max_nb_app_) {
      nb_app_ = 0;
      set_current(current_ == PolicyKind::RL ? PolicyKind::DAL : PolicyKind::RL);
    }
  }

  /// A better incumbent was found: keep the policy, restart the count.
  void on_improvement() { nb_app_ = 0; }

  PolicyKind policy_at(std::size_t depth) const { return policy_at_depth(max_dep_, depth); }

  PolicyKind current() const noexcept { return current_; }
  std::uint64_t nb_app() const noexcept { return nb_app_; }
  std::uint64_t max_nb_app() const noexcept { return max_nb_app_; }
  std::size_t max_dep() const noexcept { return max_dep_; }
  std::uint64_t switches() const noexcept { return switches_; }
  const HybridMode& mode() const noexcept { return mode_; }

  // Test hooks for driving the controller from a known state.
  void set_state(PolicyKind current, std::uint64_t nb_app) {
    current_ = current;
    nb_app_ = nb_app;
  }

 private:
  void set_current(PolicyKind k) {
    if (k != current_) ++switches_;
    current_ = k;
  }

  HybridMode mode_;
  PolicyKind current_ = PolicyKind::RL;
  std::uint64_t nb_app_ = 0;
  std::uint64_t max_nb_app_;
  std::size_t max_dep_;
  std::uint64_t switches_ = 0;
  std::mt19937_64 rng_;
};

/// CLI / CSV label of a mode, e.g. "dal", "hybrid", "hybrid-rand".
inline std::string policy_label(const HybridMode& mode) {
  struct {
    std::string operator()(const SingleMode& s) const { return std::string(to_string(s.kind)); }
    std::string operator()(const AlternateMode&) const { return "hybrid"; }
    std::string operator()(const RandomMode&) const { return "hybrid-rand"; }
    std::string operator()(const DepthMode&) const { return "hybrid-depth"; }
  } visitor;
  return std::visit(visitor, mode);
}

/// Inverse of policy_label. `seed` feeds Random mode.
inline std::optional<HybridMode> parse_policy(std::string_view label, std::uint64_t seed = 0) {
  if (label == "degree") return SingleMode{PolicyKind::Degree};
  if (label == "rl") return SingleMode{PolicyKind::RL};
  if (label == "dal") return SingleMode{PolicyKind::DAL};
  if (label == "ll") return SingleMode{PolicyKind::LL};
  if (label == "hybrid") return AlternateMode{};
  if (label == "hybrid-rand") return RandomMode{seed};
  if (label == "hybrid-depth") return DepthMode{};
  return std::nullopt;
}

inline const std::vector<std::string>& all_policy_labels() {
  static const std::vector<std::string> labels = {"degree", "rl",     "dal",         "ll",
                                                  "hybrid", "hybrid-rand", "hybrid-depth"};
  return labels;
}

}  // namespace mcsdal

#endif  // MCSDAL_POLICY_HPP_
