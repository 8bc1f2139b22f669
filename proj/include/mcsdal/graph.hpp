#ifndef MCSDAL_GRAPH_HPP_
#define MCSDAL_GRAPH_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcsdal {

using VertexId = std::uint32_t;

/// A matched pair (v in the pattern graph, w in the target graph).
struct VertexPair {
  VertexId v;
  VertexId w;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

using Assignment = std::vector<VertexPair>;

/// Thrown on malformed graph input. Carries the 1-based line and the 1-based
/// token index within that line where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t token)
      : std::runtime_error("line " + std::to_string(line) + ", token " +
                           std::to_string(token) + ": " + what),
        line_(line),
        token_(token) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::size_t token_;
};

/// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Simple undirected unlabelled graph. Immutable once built.
///
/// Adjacency is held twice: a dense byte matrix for O(1) adjacency tests in
/// the splitting loop, and sorted neighbour lists for iteration.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n)
      : n_(n), adj_(n * n, 0), neighbours_(n) {}

  /// Builds a graph from an undirected edge list. Duplicates collapse.
  static Graph from_edges(std::size_t n,
                          const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    g.finalise();
    return g;
  }

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }
  std::size_t edge_count() const noexcept { return edges_; }

  bool adjacent(VertexId u, VertexId v) const noexcept {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  /// Row of the adjacency matrix for `u`; entry v is nonzero iff u ~ v.
  const std::uint8_t* row(VertexId u) const noexcept {
    return adj_.data() + static_cast<std::size_t>(u) * n_;
  }

  const std::vector<VertexId>& neighbours(VertexId v) const { return neighbours_[v]; }

  std::size_t degree(VertexId v) const { return neighbours_[v].size(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void add_edge(VertexId u, VertexId v) {
    if (u >= n_ || v >= n_) throw ContractViolation("edge endpoint out of range");
    if (u == v) throw ContractViolation("self-loop");
    auto& a = adj_[static_cast<std::size_t>(u) * n_ + v];
    if (a) return;
    a = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    neighbours_[u].push_back(v);
    neighbours_[v].push_back(u);
    ++edges_;
  }

  void finalise() {
    for (auto& nb : neighbours_) std::sort(nb.begin(), nb.end());
  }

  std::size_t n_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<VertexId>> neighbours_;
};

inline std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }

/// Neighbours of `v` whose degree is exactly one.
inline std::vector<VertexId> leaf_neighbours(const Graph& g, VertexId v) {
  std::vector<VertexId> out;
  for (VertexId u : g.neighbours(v))
    if (g.degree(u) == 1) out.push_back(u);
  return out;
}

struct ParseOptions {
  /// Accept neighbour lists that are not symmetric and treat them as
  /// undirected. Without this, an asymmetric LAD file is rejected as directed.
  bool symmetrize = false;
};

namespace detail {

// Whitespace tokenizer that tracks line and per-line token positions.
class Tokenizer {
 public:
  explicit Tokenizer(std::istream& in) : in_(in) {}

  bool next(std::string& tok) {
    tok.clear();
    int c;
    while ((c = in_.get()) != EOF) {
      if (c == '\n') {
        ++line_;
        token_ = 0;
      } else if (!std::isspace(c)) {
        break;
      }
    }
    if (c == EOF) return false;
    ++token_;
    tok.push_back(static_cast<char>(c));
    while ((c = in_.peek()) != EOF && !std::isspace(c)) tok.push_back(static_cast<char>(in_.get()));
    return true;
  }

  std::uint64_t next_uint(const char* what) {
    std::string tok;
    if (!next(tok)) fail(std::string("unexpected end of input, expected ") + what);
    std::uint64_t value = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') fail("malformed " + std::string(what) + " '" + tok + "'");
      if (value > (std::numeric_limits<std::uint64_t>::max() - 9) / 10)
        fail(std::string(what) + " too large");
      value = value * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, token_); }

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 1;
  std::size_t token_ = 0;
};

}  // namespace detail

/// Reads the LAD format: vertex count n, then for each vertex its degree
/// followed by that many 0-based neighbour indices.
inline Graph parse_lad(std::istream& in, ParseOptions opts = {}) {
  detail::Tokenizer tk(in);
  const auto n = tk.next_uint("vertex count");
  if (n > std::numeric_limits<VertexId>::max()) tk.fail("vertex count too large");
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::vector<VertexId>> listed(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto d = tk.next_uint("degree");
    for (std::uint64_t k = 0; k < d; ++k) {
      const auto j = tk.next_uint("neighbour index");
      if (j >= n) tk.fail("neighbour index " + std::to_string(j) + " out of range");
      if (j == i) tk.fail("self-loop on vertex " + std::to_string(i));
      listed[i].push_back(static_cast<VertexId>(j));
      edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  std::string extra;
  if (tk.next(extra)) tk.fail("trailing token '" + extra + "'");
  if (!opts.symmetrize) {
    for (auto& l : listed) std::sort(l.begin(), l.end());
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j : listed[i])
        if (!std::binary_search(listed[j].begin(), listed[j].end(), i))
          throw ParseError("directed input: " + std::to_string(i) + " lists " +
                               std::to_string(j) + " but not vice versa (use symmetrize)",
                           tk.line(), 0);
  }
  return Graph::from_edges(n, edges);
}

inline Graph parse_lad(const std::string& text, ParseOptions opts = {}) {
  std::istringstream in(text);
  return parse_lad(in, opts);
}

/// Reads DIMACS "p edge n m" with 1-based "e u v" lines. Lines starting with
/// 'c' are comments. Every listed edge is undirected.
inline Graph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::uint64_t n = 0;
  bool header = false;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto read_uint = [&](std::istringstream& ls, std::size_t tok) {
    std::string s;
    if (!(ls >> s)) throw ParseError("missing field", lineno, tok);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
      throw ParseError("malformed integer '" + s + "'", lineno, tok);
    return std::stoull(s);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind == "c") continue;
    if (kind == "p") {
      if (header) throw ParseError("duplicate header", lineno, 1);
      std::string fmt;
      if (!(ls >> fmt) || (fmt != "edge" && fmt != "col"))
        throw ParseError("expected 'p edge n m'", lineno, 2);
      n = read_uint(ls, 3);
      read_uint(ls, 4);
      if (n > std::numeric_limits<VertexId>::max()) throw ParseError("vertex count too large", lineno, 3);
      header = true;
    } else if (kind == "e") {
      if (!header) throw ParseError("edge before 'p edge' header", lineno, 1);
      const auto u = read_uint(ls, 2);
      const auto v = read_uint(ls, 3);
      if (u < 1 || u > n) throw ParseError("endpoint " + std::to_string(u) + " out of [1,n]", lineno, 2);
      if (v < 1 || v > n) throw ParseError("endpoint " + std::to_string(v) + " out of [1,n]", lineno, 3);
      if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), lineno, 2);
      edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
    } else {
      throw ParseError("unknown line type '" + kind + "'", lineno, 1);
    }
  }
  if (!header) throw ParseError("missing 'p edge n m' header", lineno, 0);
  return Graph::from_edges(n, edges);
}

inline Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

/// LAD serialisation: records in vertex order, neighbours ascending.
inline void write_lad(std::ostream& out, const Graph& g) {
  out << g.size() << '\n';
  for (VertexId v = 0; v < g.size(); ++v) {
    out << g.degree(v);
    for (VertexId u : g.neighbours(v)) out << ' ' << u;
    out << '\n';
  }
}

inline std::string to_lad(const Graph& g) {
  std::ostringstream out;
  write_lad(out, g);
  return out.str();
}

}  // namespace mcsdal

#endif  // MCSDAL_GRAPH_HPP_
