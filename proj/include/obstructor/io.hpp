#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "obstructor/base_graph.hpp"
#include "obstructor/obstacle.hpp"

namespace obstructor {

namespace detail {
// "word key=value key=value ..." into a map; the leading word must match.
inline std::map<std::string, std::string> parse_header(const std::string& line, const std::string& word) {
  std::istringstream is(line);
  std::string first;
  is >> first;
  if (first != word) throw std::runtime_error("expected a '" + word + "' header, got: " + line);
  std::map<std::string, std::string> fields;
  std::string token;
  while (is >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) throw std::runtime_error("malformed header field: " + token);
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return fields;
}

inline std::int64_t field_int(const std::map<std::string, std::string>& f, const std::string& key) {
  auto it = f.find(key);
  if (it == f.end()) throw std::runtime_error("header is missing " + key);
  std::size_t used = 0;
  const auto v = std::stoll(it->second, &used);
  if (used != it->second.size()) throw std::runtime_error("header field " + key + " is not an integer");
  return v;
}

inline std::string params_fields(const GraphParams& p) {
  return "D=" + std::to_string(p.D) + " r=" + std::to_string(p.r) + " k=" + std::to_string(p.k) +
         " L=" + std::to_string(p.L) + " layers=" + std::to_string(p.layers);
}

inline GraphParams read_params(const std::map<std::string, std::string>& f) {
  GraphParams p;
  p.D = field_int(f, "D");
  p.r = field_int(f, "r");
  p.k = static_cast<int>(field_int(f, "k"));
  p.L = field_int(f, "L");
  p.layers = field_int(f, "layers");
  return p;
}
}  // namespace detail

// Header line, then one "u v" line per edge.
inline void write_graph(std::ostream& os, const LayeredGraph& g) {
  os << "graph family=" << g.tag() << " " << detail::params_fields(g.params()) << " n=" << g.vertex_count()
     << " m=" << g.edge_count() << "\n";
  g.for_each_edge([&](VertexId u, VertexId v) { os << u << " " << v << "\n"; });
}

/// Reads a graph file into an explicit graph. The edge set is taken as
/// written, so tampered files load and fail verification instead.
inline LayeredGraph read_graph(std::istream& is, std::uint64_t vertex_budget = kDefaultVertexBudget) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("graph file is empty");
  const auto f = detail::parse_header(line, "graph");
  auto fam = f.find("family");
  if (fam == f.end()) throw std::runtime_error("header is missing family");
  const auto [family, k] = parse_family_tag(fam->second);
  const GraphParams params = detail::read_params(f);
  if (params.k != k) throw std::runtime_error("family tag and k disagree");
  std::vector<std::pair<VertexId, VertexId>> edges;
  VertexId u, v;
  while (is >> u >> v) edges.emplace_back(u, v);
  if (!is.eof()) throw std::runtime_error("graph file has a malformed edge line");
  auto g = LayeredGraph::from_edges(family, params, edges, vertex_budget);
  if (static_cast<std::uint64_t>(detail::field_int(f, "n")) != g.vertex_count())
    throw std::runtime_error("header n does not match the vertex space");
  return g;
}

// "s t x1 .. xk g1x g1y .. " per critical pair, after a header line.
inline void write_pairs(std::ostream& os, const LayeredGraph& g) {
  os << "pairs family=" << g.tag() << " " << detail::params_fields(g.params()) << " count=" << g.pair_count() << "\n";
  for (PairId id = 0; id < g.pair_count(); ++id) {
    const auto p = g.pair(id);
    os << p.source << " " << p.target;
    for (auto x : p.base) os << " " << x;
    for (auto gi : p.generators) os << " " << g.hull()[gi][0] << " " << g.hull()[gi][1];
    os << "\n";
  }
}

struct PairRecord {
  VertexId source = 0;
  VertexId target = 0;
  std::vector<std::int64_t> base;
  std::vector<Vec2> generators;
};

inline std::vector<PairRecord> read_pairs(std::istream& is, const GraphParams& expected) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("pairs file is empty");
  const auto f = detail::parse_header(line, "pairs");
  if (!(detail::read_params(f) == expected)) throw std::runtime_error("pairs file parameters differ from the graph");
  std::vector<PairRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    PairRecord r;
    if (!(ls >> r.source >> r.target)) throw std::runtime_error("malformed pair line: " + line);
    r.base.resize(static_cast<std::size_t>(expected.k));
    for (auto& x : r.base)
      if (!(ls >> x)) throw std::runtime_error("pair line is missing base coordinates: " + line);
    r.generators.resize(static_cast<std::size_t>(expected.step_kinds()));
    for (auto& gv : r.generators)
      if (!(ls >> gv[0] >> gv[1])) throw std::runtime_error("pair line is missing generators: " + line);
    out.push_back(std::move(r));
  }
  return out;
}

// Obstacle graph: header, then "u v c" with c = 1 for clique edges.
inline void write_obstacle(std::ostream& os, const ObstacleGraph& o) {
  os << "obstacle family=GALT2 " << detail::params_fields(o.params()) << " n=" << o.vertex_count()
     << " m=" << o.edge_count() << "\n";
  for (const auto& e : o.graph().edges()) os << e.u << " " << e.v << " " << (e.clique ? 1 : 0) << "\n";
}

inline ObstacleGraph read_obstacle(std::istream& is, std::uint64_t vertex_budget = kDefaultVertexBudget) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("obstacle file is empty");
  const auto f = detail::parse_header(line, "obstacle");
  const GraphParams p = detail::read_params(f);
  if (!(GraphParams::make(3, p.D, p.r) == p)) throw std::runtime_error("obstacle header parameters are inconsistent");
  std::vector<UEdge> edges;
  VertexId u, v;
  int c;
  while (is >> u >> v >> c) {
    if (c != 0 && c != 1) throw std::runtime_error("clique flag must be 0 or 1");
    edges.push_back({u, v, c == 1});
  }
  if (!is.eof()) throw std::runtime_error("obstacle file has a malformed edge line");
  BuildOptions opts;
  opts.vertex_budget = vertex_budget;
  return ObstacleGraph::with_edges(p.D, p.r, std::move(edges), opts);
}

// Plain "u v" lines (shortcut sets, deletion plans); '#' starts a comment.
inline std::vector<std::pair<VertexId, VertexId>> read_vertex_pairs(std::istream& is) {
  std::vector<std::pair<VertexId, VertexId>> out;
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    VertexId u, v;
    if (!(ls >> u)) continue;
    if (!(ls >> v)) throw std::runtime_error("expected 'u v', got: " + line);
    out.emplace_back(u, v);
  }
  return out;
}

}  // namespace obstructor
