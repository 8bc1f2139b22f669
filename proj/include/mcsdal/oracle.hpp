#ifndef MCSDAL_ORACLE_HPP_
#define MCSDAL_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mcsdal/graph.hpp"

// Exhaustive reference solver. Uses nothing but Graph so that a defect in the
// bidomain search cannot leak into the ground truth.

namespace mcsdal {

struct OracleResult {
  std::size_t size = 0;
  Assignment witness;
  std::uint64_t explored = 0;
};

class OracleSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

class Enumerator {
 public:
  Enumerator(const Graph& a, const Graph& b) : a_(a), b_(b), used_(b.size(), false) {}

  OracleResult run() {
    extend(0);
    return {best_.size(), best_, explored_};
  }

 private:
  // Decide the image of vertex i of `a`: each unused vertex of `b` that keeps
  // the partial map an induced isomorphism, or nothing.
  void extend(VertexId i) {
    ++explored_;
    if (cur_.size() > best_.size()) best_ = cur_;
    if (i == a_.size()) return;
    for (VertexId x = 0; x < b_.size(); ++x) {
      if (used_[x]) continue;
      bool ok = true;
      for (const auto& [u, y] : cur_)
        if (a_.adjacent(i, u) != b_.adjacent(x, y)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used_[x] = true;
      cur_.push_back({i, x});
      extend(i + 1);
      cur_.pop_back();
      used_[x] = false;
    }
    extend(i + 1);
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<bool> used_;
  Assignment cur_, best_;
  std::uint64_t explored_ = 0;
};

}  // namespace detail

/// Largest common induced subgraph by enumerating every partial injective
/// map from the smaller graph into the larger one.
inline OracleResult brute_force_mcs(const Graph& gp, const Graph& gt) {
  constexpr std::size_t kMaxSmall = 10;
  constexpr std::size_t kMaxLarge = 16;
  const bool flip = gt.size() < gp.size();
  const Graph& small = flip ? gt : gp;
  const Graph& large = flip ? gp : gt;
  if (small.size() > kMaxSmall || large.size() > kMaxLarge)
    throw OracleSizeError("brute_force_mcs: instance too large for exhaustive enumeration");
  OracleResult r = detail::Enumerator(small, large).run();
  if (flip)
    for (auto& p : r.witness) std::swap(p.v, p.w);
  return r;
}

}  // namespace mcsdal

#endif  // MCSDAL_ORACLE_HPP_
