#ifndef MCSDAL_BENCH_HPP_
#define MCSDAL_BENCH_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "mcsdal/graph.hpp"
#include "mcsdal/policy.hpp"
#include "mcsdal/solver.hpp"

namespace mcsdal::bench {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Graph files

enum class GraphFormat { Auto, Lad, Dimacs };

/// Reads a graph file. Auto picks DIMACS when the first non-blank line starts
/// with 'p' or 'c', LAD otherwise. Throws std::runtime_error naming the path
/// if the file cannot be opened, ParseError on malformed content.
inline Graph load_graph(const fs::path& path, GraphFormat format = GraphFormat::Auto,
                        ParseOptions opts = {}) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (format == GraphFormat::Auto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    format = (first != std::string::npos && (text[first] == 'p' || text[first] == 'c'))
                 ? GraphFormat::Dimacs
                 : GraphFormat::Lad;
  }
  return format == GraphFormat::Dimacs ? parse_dimacs(text) : parse_lad(text, opts);
}

inline void save_lad(const fs::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  write_lad(out, g);
  if (!out) throw std::runtime_error("write failed on '" + path.string() + "'");
}

// ---------------------------------------------------------------------------
// Instance generation

/// Erdős–Rényi G(n, p). Each of the n(n-1)/2 pairs is drawn in (i<j) order
/// from one 53-bit uniform per pair, so output depends only on the engine.
inline Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(i, j);
    }
  return Graph::from_edges(n, edges);
}

struct GeneratedPair {
  Graph pattern;
  Graph target;
};

inline GeneratedPair generate_pair(std::size_t n_p, std::size_t n_t, double p, std::uint64_t seed) {
  if (n_p < 1 || n_t < 1) throw std::invalid_argument("vertex counts must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  Graph a = erdos_renyi(n_p, p, rng);
  Graph b = erdos_renyi(n_t, p, rng);
  return {std::move(a), std::move(b)};
}

/// Writes pattern.lad and target.lad under out_dir, creating it if needed.
inline std::pair<fs::path, fs::path> write_generated(const GeneratedPair& g, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + out_dir.string() + "': " + ec.message());
  auto pp = out_dir / "pattern.lad", tp = out_dir / "target.lad";
  save_lad(pp, g.pattern);
  save_lad(tp, g.target);
  return {pp, tp};
}

// ---------------------------------------------------------------------------
// Manifest

struct ManifestEntry {
  std::string pattern;  // as written in the manifest
  std::string target;
};

/// One "pattern_path target_path" per line; blank lines and '#' comments are
/// skipped.
inline std::vector<ManifestEntry> parse_manifest(std::istream& in) {
  std::vector<ManifestEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a) || a[0] == '#') continue;
    if (!(ls >> b) || (ls >> extra)) throw ParseError("expected 'pattern_path target_path'", lineno, 1);
    out.push_back({a, b});
  }
  return out;
}

inline std::vector<ManifestEntry> load_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return parse_manifest(in);
}

// ---------------------------------------------------------------------------
// Records and CSV

inline constexpr const char* kCsvHeader =
    "pattern,target,policy,size,status,elapsed_ms,recursive_calls,policy_switches";

struct InstanceRecord {
  std::string pattern_path;
  std::string target_path;
  std::string policy;       // label, with "+lum" when leaf union match is on
  std::string fingerprint;  // full configuration; not part of the CSV row
  std::size_t size = 0;
  std::string status;  // SolveStatus name, or "error"
  double elapsed_ms = 0;
  std::uint64_t recursive_calls = 0;
  std::uint64_t policy_switches = 0;

  friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

inline std::string run_label(const SolverConfig& cfg) {
  return policy_label(cfg.policy) + (cfg.lum ? "+lum" : "");
}

/// Deterministic description of every field of a configuration.
inline std::string fingerprint(const SolverConfig& cfg) {
  std::ostringstream s;
  s << "policy=" << policy_label(cfg.policy);
  if (auto* r = std::get_if<RandomMode>(&cfg.policy)) s << ";seed=" << r->seed;
  s << ";lum=" << cfg.lum << ";tv=" << cfg.t_v << ";tvw=" << cfg.t_vw << ";nbapp=";
  if (cfg.max_nb_app) s << *cfg.max_nb_app;
  else s << "auto";
  s << ";rl=" << (cfg.rl_reward == RlReward::SumDelta ? "sum-delta" : "ub-delta");
  s << ";timeout=";
  if (cfg.time_budget) s << cfg.time_budget->count();
  else s << "none";
  s << ";nodes=";
  if (cfg.node_budget) s << *cfg.node_budget;
  else s << "none";
  return s.str();
}

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

/// Splits one CSV line honouring double-quoted fields.
inline std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') fields.back() += '"', ++i;
      else if (c == '"') quoted = false;
      else fields.back() += c;
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quoted field");
  return fields;
}

inline void write_csv_row(std::ostream& out, const InstanceRecord& r) {
  out << csv_escape(r.pattern_path) << ',' << csv_escape(r.target_path) << ','
      << csv_escape(r.policy) << ',' << r.size << ',' << r.status << ',' << std::fixed
      << std::setprecision(3) << r.elapsed_ms << std::defaultfloat << ',' << r.recursive_calls
      << ',' << r.policy_switches << '\n';
}

inline void write_csv(std::ostream& out, const std::vector<InstanceRecord>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) write_csv_row(out, r);
}

/// Parses CSV produced by write_csv. Throws std::runtime_error with the line
/// number on malformed input.
inline std::vector<InstanceRecord> read_csv(std::istream& in) {
  std::vector<InstanceRecord> rows;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw std::runtime_error("line 1: unexpected CSV header");
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto where = "line " + std::to_string(lineno) + ": ";
    std::vector<std::string> f;
    try {
      f = csv_split(line);
    } catch (const std::exception& e) {
      throw std::runtime_error(where + e.what());
    }
    if (f.size() != 8) throw std::runtime_error(where + "expected 8 fields");
    InstanceRecord r;
    r.pattern_path = f[0];
    r.target_path = f[1];
    r.policy = f[2];
    r.status = f[4];
    try {
      std::size_t pos = 0;
      auto whole = [&](const std::string& s) {
        if (pos != s.size()) throw std::invalid_argument(s);
      };
      r.size = std::stoull(f[3], &pos), whole(f[3]);
      r.elapsed_ms = std::stod(f[5], &pos), whole(f[5]);
      r.recursive_calls = std::stoull(f[6], &pos), whole(f[6]);
      r.policy_switches = std::stoull(f[7], &pos), whole(f[7]);
    } catch (const std::exception&) {
      throw std::runtime_error(where + "malformed numeric field");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Batch runner

struct BatchOptions {
  std::vector<SolverConfig> configs;  // one row per instance per config
  GraphFormat format = GraphFormat::Auto;
  ParseOptions parse;
  fs::path base_dir;  // relative manifest paths resolve against this
  unsigned jobs = 1;
};

inline InstanceRecord run_instance(const ManifestEntry& e, const SolverConfig& cfg,
                                   const BatchOptions& opts) {
  InstanceRecord r;
  r.pattern_path = e.pattern;
  r.target_path = e.target;
  r.policy = run_label(cfg);
  r.fingerprint = fingerprint(cfg);
  auto resolve = [&](const std::string& p) {
    fs::path path(p);
    return path.is_absolute() ? path : opts.base_dir / path;
  };
  try {
    const Graph gp = load_graph(resolve(e.pattern), opts.format, opts.parse);
    const Graph gt = load_graph(resolve(e.target), opts.format, opts.parse);
    const SolveResult res = solve(gp, gt, cfg);
    r.size = res.size;
    r.status = std::string(to_string(res.status));
    // Rounded to what the CSV carries so rows read back unchanged.
    r.elapsed_ms = std::round(std::chrono::duration<double, std::milli>(res.elapsed).count() * 1000) / 1000;
    r.recursive_calls = res.recursive_calls;
    r.policy_switches = res.stats.policy_switches;
  } catch (const std::exception&) {
    r.status = "error";
  }
  return r;
}

/// Runs every (instance, config) pair. Rows come back in manifest order,
/// configs in the given order within an instance, whatever `jobs` is.
inline std::vector<InstanceRecord> run_batch(const std::vector<ManifestEntry>& manifest,
                                             const BatchOptions& opts) {
  const std::size_t per = opts.configs.size();
  std::vector<InstanceRecord> rows(manifest.size() * per);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < rows.size();)
      rows[k] = run_instance(manifest[k / per], opts.configs[k % per], opts);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(rows.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Cactus data

enum class CactusMetric { Time, Calls };

struct CactusSeries {
  std::string label;
  std::vector<double> costs;  // non-decreasing
};

/// One series per policy label in order of first appearance; only Optimal
/// rows count as solved.
inline std::vector<CactusSeries> cactus(const std::vector<InstanceRecord>& rows, CactusMetric metric) {
  std::vector<CactusSeries> out;
  std::map<std::string, std::size_t> index;
  for (const auto& r : rows) {
    auto [it, fresh] = index.try_emplace(r.policy, out.size());
    if (fresh) out.push_back({r.policy, {}});
    if (r.status != to_string(SolveStatus::Optimal)) continue;
    out[it->second].costs.push_back(metric == CactusMetric::Time
                                        ? r.elapsed_ms
                                        : static_cast<double>(r.recursive_calls));
  }
  for (auto& s : out) std::sort(s.costs.begin(), s.costs.end());
  return out;
}

/// "# label" header per series followed by "rank,cost" lines, rank from 1.
inline void write_cactus(std::ostream& out, const std::vector<CactusSeries>& series) {
  for (const auto& s : series) {
    out << "# " << s.label << '\n';
    for (std::size_t i = 0; i < s.costs.size(); ++i) {
      const double c = s.costs[i];
      out << (i + 1) << ',';
      if (c == std::floor(c) && c < 0x1.0p63) out << static_cast<std::uint64_t>(c);
      else out << std::fixed << std::setprecision(3) << c << std::defaultfloat;
      out << '\n';
    }
  }
}

}  // namespace mcsdal::bench

#endif  // MCSDAL_BENCH_HPP_
