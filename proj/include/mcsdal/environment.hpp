#ifndef MCSDAL_ENVIRONMENT_HPP_
#define MCSDAL_ENVIRONMENT_HPP_

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "mcsdal/graph.hpp"

namespace mcsdal {

/// Owning form of a domain: the pattern-side and target-side vertex sets
/// that share one adjacency history to the current matching.
struct Bidomain {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  friend bool operator==(const Bidomain&, const Bidomain&) = default;
};

/// Non-owning view of one domain inside an Environment.
struct BidomainView {
  std::span<const VertexId> left;
  std::span<const VertexId> right;
};

/// Ordered set of bidomains. Vertices of all domains live in two flat
/// arrays; each domain is a pair of contiguous slices. Values are immutable
/// from the outside: split and removal produce a fresh Environment, so a
/// parent is intact after its children return.
class Environment {
 public:
  Environment() = default;

  /// Builds an environment from explicit domains, dropping any with an empty
  /// side. Throws ContractViolation if a vertex occurs in two domains.
  static Environment from_domains(const std::vector<Bidomain>& domains) {
    Environment env;
    for (const auto& d : domains) {
      if (d.left.empty() || d.right.empty()) continue;
      env.push(d.left, d.right);
    }
    auto dup = [](std::vector<VertexId> xs) {
      std::sort(xs.begin(), xs.end());
      return std::adjacent_find(xs.begin(), xs.end()) != xs.end();
    };
    if (dup(env.left_) || dup(env.right_))
      throw ContractViolation("domains are not pairwise disjoint");
    return env;
  }

  std::size_t size() const noexcept { return slices_.size(); }
  bool empty() const noexcept { return slices_.empty(); }

  BidomainView operator[](std::size_t i) const {
    const Slice& s = slices_[i];
    return {std::span<const VertexId>(left_).subspan(s.l, s.left_len),
            std::span<const VertexId>(right_).subspan(s.r, s.right_len)};
  }

  std::size_t left_size(std::size_t i) const { return slices_[i].left_len; }
  std::size_t right_size(std::size_t i) const { return slices_[i].right_len; }

  /// All pattern-side vertices across domains, in domain order.
  std::span<const VertexId> all_left() const noexcept { return left_; }
  std::span<const VertexId> all_right() const noexcept { return right_; }

  std::vector<Bidomain> domains() const {
    std::vector<Bidomain> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      auto d = (*this)[i];
      out.push_back({{d.left.begin(), d.left.end()}, {d.right.begin(), d.right.end()}});
    }
    return out;
  }

  friend bool operator==(const Environment& a, const Environment& b) {
    return a.domains() == b.domains();
  }

 private:
  struct Slice {
    std::size_t l, left_len, r, right_len;
  };

  template <typename L, typename R>
  void push(const L& left, const R& right) {
    slices_.push_back({left_.size(), left.size(), right_.size(), right.size()});
    left_.insert(left_.end(), left.begin(), left.end());
    right_.insert(right_.end(), right.begin(), right.end());
  }

  friend Environment split(const Environment&, VertexId, VertexId, const Graph&, const Graph&);
  friend Environment remove_left_vertex(const Environment&, VertexId);

  std::vector<VertexId> left_;
  std::vector<VertexId> right_;
  std::vector<Slice> slices_;
};

/// The root environment: every pattern vertex against every target vertex.
/// Empty if either graph is empty.
inline Environment initial_environment(const Graph& gp, const Graph& gt) {
  if (gp.empty() || gt.empty()) return {};
  Bidomain d;
  d.left.resize(gp.size());
  d.right.resize(gt.size());
  for (VertexId v = 0; v < gp.size(); ++v) d.left[v] = v;
  for (VertexId w = 0; w < gt.size(); ++w) d.right[w] = w;
  return Environment::from_domains({d});
}

/// Sum over domains of min(|left|, |right|): how many more pairs could still
/// be matched.
inline std::size_t bound_sum(const Environment& env) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < env.size(); ++i)
    total += std::min(env.left_size(i), env.right_size(i));
  return total;
}

/// Index of the domain with the smallest max(|left|, |right|). Ties go to
/// the domain whose left side holds the highest-degree vertex of gp, then to
/// the lower index.
inline std::size_t select_domain(const Environment& env, const Graph& gp) {
  if (env.empty()) throw ContractViolation("select_domain on empty environment");
  std::size_t best = 0;
  std::size_t best_size = static_cast<std::size_t>(-1);
  std::size_t best_deg = 0;
  for (std::size_t i = 0; i < env.size(); ++i) {
    const std::size_t sz = std::max(env.left_size(i), env.right_size(i));
    if (sz > best_size) continue;
    std::size_t deg = 0;
    for (VertexId v : env[i].left) deg = std::max(deg, gp.degree(v));
    if (sz < best_size || deg > best_deg) {
      best = i;
      best_size = sz;
      best_deg = deg;
    }
  }
  return best;
}

/// Environment after matching v (pattern) with w (target). Each domain is
/// cut into the part adjacent to v/w and the part non-adjacent to v/w, in
/// that order; v and w disappear and empty-sided parts are dropped.
inline Environment split(const Environment& env, VertexId v, VertexId w, const Graph& gp,
                         const Graph& gt) {
  bool resident = false;
  for (std::size_t i = 0; i < env.size() && !resident; ++i) {
    auto d = env[i];
    resident = std::find(d.left.begin(), d.left.end(), v) != d.left.end() &&
               std::find(d.right.begin(), d.right.end(), w) != d.right.end();
  }
  if (!resident) throw ContractViolation("split: (v, w) not in a common domain");

  const std::uint8_t* vrow = gp.row(v);
  const std::uint8_t* wrow = gt.row(w);
  Environment out;
  out.left_.reserve(env.left_.size());
  out.right_.reserve(env.right_.size());
  out.slices_.reserve(env.size() * 2);

  std::vector<VertexId> l_non, r_non;
  for (const auto& s : env.slices_) {
    l_non.clear();
    r_non.clear();
    const std::size_t l0 = out.left_.size();
    const std::size_t r0 = out.right_.size();
    for (std::size_t k = 0; k < s.left_len; ++k) {
      const VertexId u = env.left_[s.l + k];
      if (u == v) continue;
      if (vrow[u]) out.left_.push_back(u);
      else l_non.push_back(u);
    }
    for (std::size_t k = 0; k < s.right_len; ++k) {
      const VertexId x = env.right_[s.r + k];
      if (x == w) continue;
      if (wrow[x]) out.right_.push_back(x);
      else r_non.push_back(x);
    }
    const std::size_t la = out.left_.size() - l0;
    const std::size_t ra = out.right_.size() - r0;
    if (la && ra) {
      out.slices_.push_back({l0, la, r0, ra});
    } else {
      out.left_.resize(l0);
      out.right_.resize(r0);
    }
    if (!l_non.empty() && !r_non.empty()) out.push(l_non, r_non);
  }
  return out;
}

/// Environment with pattern vertex v discarded from its domain.
inline Environment remove_left_vertex(const Environment& env, VertexId v) {
  Environment out;
  bool found = false;
  for (const auto& s : env.slices_) {
    auto left = std::span<const VertexId>(env.left_).subspan(s.l, s.left_len);
    auto right = std::span<const VertexId>(env.right_).subspan(s.r, s.right_len);
    auto it = std::find(left.begin(), left.end(), v);
    if (it == left.end()) {
      out.push(left, right);
      continue;
    }
    found = true;
    if (left.size() == 1) continue;
    std::vector<VertexId> rest(left.begin(), it);
    rest.insert(rest.end(), it + 1, left.end());
    out.push(rest, right);
  }
  if (!found) throw ContractViolation("remove_left_vertex: vertex not in environment");
  return out;
}

/// Debug dump: one domain per line, "left | right", ids ascending.
inline std::string dump(const Environment& env) {
  std::ostringstream out;
  for (std::size_t i = 0; i < env.size(); ++i) {
    auto d = env[i];
    std::vector<VertexId> l(d.left.begin(), d.left.end()), r(d.right.begin(), d.right.end());
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    for (std::size_t k = 0; k < l.size(); ++k) out << (k ? " " : "") << l[k];
    out << " |";
    for (VertexId x : r) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

}  // namespace mcsdal

#endif  // MCSDAL_ENVIRONMENT_HPP_
