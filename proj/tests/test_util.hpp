#ifndef MCSDAL_TESTS_TEST_UTIL_HPP_
#define MCSDAL_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mcsdal/environment.hpp"
#include "mcsdal/graph.hpp"

namespace mcsdal::testing {

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < n; ++i) e.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

/// Star with centre 0 and `leaves` leaves.
inline Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

/// Target-side letters used by the worked example: a=0, b=1, ...
constexpr VertexId L(char c) { return static_cast<VertexId>(c - 'a'); }

/// Environment as a set of (sorted left, sorted right) pairs, for comparisons
/// that ignore domain and vertex order.
using DomainSet = std::set<std::pair<std::vector<VertexId>, std::vector<VertexId>>>;

inline DomainSet as_set(const Environment& env) {
  DomainSet out;
  for (const auto& d : env.domains()) {
    auto l = d.left, r = d.right;
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    out.emplace(l, r);
  }
  return out;
}

/// Graphs consistent with the worked example: Gp on 0..7, Gt on a..g.
/// Matching (0,a) gives Ev = {(<2,3>,<b,c,d>), (<1,4,5,6,7>,<e,f,g>)}.
/// Relative to (1,e): 2, d, 4, 6, 7, f adjacent; 3, b, c, 5, g not.
/// Relative to (3,b): 2, c adjacent; d and the second domain not.
inline std::pair<Graph, Graph> example_graphs() {
  Graph gp = Graph::from_edges(8, {{0, 2}, {0, 3}, {1, 2}, {1, 4}, {1, 6}, {1, 7}, {2, 3}});
  Graph gt = Graph::from_edges(7, {{L('a'), L('b')},
                                   {L('a'), L('c')},
                                   {L('a'), L('d')},
                                   {L('e'), L('d')},
                                   {L('e'), L('f')},
                                   {L('b'), L('c')}});
  return {gp, gt};
}

/// The worked example environment, domains listed literally.
inline Environment example_env() {
  return Environment::from_domains(
      {{{2, 3}, {L('b'), L('c'), L('d')}}, {{1, 4, 5, 6, 7}, {L('e'), L('g'), L('f')}}});
}

}  // namespace mcsdal::testing

#endif  // MCSDAL_TESTS_TEST_UTIL_HPP_
