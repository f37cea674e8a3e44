#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "obstructor/alternation.hpp"
#include "obstructor/stretch.hpp"
#include "obstructor/undirected_graph.hpp"

namespace obstructor {

enum class ObsKind { boundary, clique, subdivision };

// Decoded obstacle vertex. For boundary and clique vertices `original` is
// the underlying alternation vertex; for subdivision vertices `edge` is the
// underlying edge (source id * h + hull index) and `position` is in 1..D-1.
struct ObsVertex {
  ObsKind kind = ObsKind::boundary;
  VertexId original = 0;
  int side = 0;  // 0 = left (predecessor ports), 1 = right (successor ports)
  std::size_t port = 0;
  std::uint64_t edge = 0;
  std::int64_t position = 0;
};

struct ObsCounts {
  boost::multiprecision::cpp_int n, m, clique_edges, pairs;
};

// Exact vertex, edge, clique-edge and pair counts of the obstacle product.
inline ObsCounts obstacle_counts(std::int64_t D, std::int64_t r) {
  using boost::multiprecision::cpp_int;
  const cpp_int L = 3 * D * r;
  const cpp_int L3 = L * L * L;
  const cpp_int h = positive_hull(r).size();
  ObsCounts c;
  c.n = 2 * L3 + (2 * D - 1) * L3 * 2 * h + 2 * D * L3 * h * (D - 1);
  c.clique_edges = (2 * D - 1) * L3 * h * h;
  c.m = 2 * D * L3 * h * D + c.clique_edges;
  c.pairs = L3 * h * h;
  return c;
}

/// The obstacle product of GALT2(D, r): every edge becomes a path of length D
/// and every interior vertex v becomes a complete bipartite K_v whose left
/// ports attach to incoming edge paths and right ports to outgoing ones.
/// Ports are numbered by the sorted original neighbor ids.
///
/// Vertex ids: boundary originals first (layer 0 then layer 2D), then clique
/// vertices, then subdivision vertices.
class ObstacleGraph {
 public:
  const LayeredGraph& base() const { return base_; }
  const UndirectedGraph& graph() const { return graph_; }
  const GraphParams& params() const { return base_.params(); }
  std::size_t hull_size() const { return base_.hull_size(); }
  std::int64_t D() const { return params().D; }
  std::uint64_t cube() const { return base_.layer_size(); }

  std::uint64_t vertex_count() const { return graph_.vertex_count(); }
  std::uint64_t edge_count() const { return graph_.edge_count(); }
  std::uint64_t pair_count() const { return base_.pair_count(); }

  VertexId boundary_id(VertexId original) const {
    const std::int64_t layer = base_.layer_of(original);
    if (layer == 0) return base_.coord_index(original);
    if (layer == base_.last_layer()) return cube() + base_.coord_index(original);
    throw std::invalid_argument("vertex is not on a boundary layer");
  }
  VertexId clique_id(VertexId original, int side, std::size_t port) const {
    const std::int64_t layer = base_.layer_of(original);
    if (layer <= 0 || layer >= base_.last_layer()) throw std::invalid_argument("vertex has no clique");
    const std::uint64_t slot = (static_cast<std::uint64_t>(layer - 1) * cube() + base_.coord_index(original)) * 2 + side;
    return 2 * cube() + slot * hull_size() + port;
  }
  VertexId subdivision_id(std::uint64_t edge, std::int64_t position) const {
    return subdivision_base() + edge * static_cast<std::uint64_t>(D() - 1) + static_cast<std::uint64_t>(position - 1);
  }

  ObsVertex decode(VertexId v) const {
    if (v >= vertex_count()) throw std::out_of_range("obstacle vertex id out of range");
    ObsVertex out;
    const std::uint64_t L3 = cube();
    if (v < 2 * L3) {
      out.kind = ObsKind::boundary;
      out.original = v < L3 ? v : static_cast<VertexId>(base_.last_layer()) * L3 + (v - L3);
      return out;
    }
    if (v < subdivision_base()) {
      out.kind = ObsKind::clique;
      const std::uint64_t rel = v - 2 * L3;
      out.port = rel % hull_size();
      const std::uint64_t slot = rel / hull_size();
      out.side = static_cast<int>(slot % 2);
      const std::uint64_t cell = slot / 2;
      out.original = (cell / L3 + 1) * L3 + cell % L3;
      return out;
    }
    out.kind = ObsKind::subdivision;
    const std::uint64_t rel = v - subdivision_base();
    out.edge = rel / static_cast<std::uint64_t>(D() - 1);
    out.position = static_cast<std::int64_t>(rel % static_cast<std::uint64_t>(D() - 1)) + 1;
    return out;
  }

  // Port of K_v serving neighbor w: left side for predecessors, right for
  // successors.
  std::size_t port_of(VertexId v, VertexId neighbor) const {
    const bool successor = base_.layer_of(neighbor) == base_.layer_of(v) + 1;
    const auto& list = successor ? out_sorted_[v] : in_sorted_[v];
    auto it = std::lower_bound(list.begin(), list.end(), neighbor);
    if (it == list.end() || *it != neighbor) throw std::invalid_argument("not a neighbor of the clique vertex");
    return static_cast<std::size_t>(it - list.begin());
  }

  // Attachment of original edge u -> v at its tail and head.
  VertexId tail_attachment(VertexId u, VertexId v) const {
    return base_.layer_of(u) == 0 ? boundary_id(u) : clique_id(u, 1, port_of(u, v));
  }
  VertexId head_attachment(VertexId u, VertexId v) const {
    return base_.layer_of(v) == base_.last_layer() ? boundary_id(v) : clique_id(v, 0, port_of(v, u));
  }

  std::uint64_t edge_index(VertexId u, VertexId v) const {
    for (std::size_t g = 0; g < hull_size(); ++g)
      if (base_.rule_successor(u, g) == v) return u * hull_size() + g;
    throw std::invalid_argument("not an edge of the alternation graph");
  }

  VertexPair pair(PairId id) const {
    return {boundary_id(base_.pair_source(id)), boundary_id(base_.pair_target(id))};
  }
  std::vector<VertexPair> pairs() const {
    std::vector<VertexPair> out(pair_count());
    for (PairId id = 0; id < pair_count(); ++id) out[id] = pair(id);
    return out;
  }

  static ObstacleGraph build(std::int64_t D, std::int64_t r, const BuildOptions& opts = {}) {
    ObstacleGraph o;
    BuildOptions inner = opts;
    inner.explicit_limit = 0;
    o.base_ = build_galt2(D, r, inner);
    const auto counts = obstacle_counts(D, r);
    if (counts.n > opts.vertex_budget)
      throw BudgetExceeded("obstacle product (D=" + std::to_string(D) + ", r=" + std::to_string(r) + ") needs " +
                           counts.n.str() + " vertices, budget is " + std::to_string(opts.vertex_budget));
    o.index_neighbors();
    const std::uint64_t n = counts.n.convert_to<std::uint64_t>();
    std::vector<UEdge> edges;
    edges.reserve(counts.m.convert_to<std::size_t>());
    o.base_.for_each_edge([&](VertexId u, VertexId v) {
      const std::uint64_t e = o.edge_index(u, v);
      VertexId prev = o.tail_attachment(u, v);
      for (std::int64_t t = 1; t < D; ++t) {
        const VertexId s = o.subdivision_id(e, t);
        edges.push_back({prev, s, false});
        prev = s;
      }
      edges.push_back({prev, o.head_attachment(u, v), false});
    });
    const std::size_t h = o.hull_size();
    for (VertexId v = o.cube(); v < static_cast<VertexId>(o.base_.last_layer()) * o.cube(); ++v)
      for (std::size_t a = 0; a < h; ++a)
        for (std::size_t b = 0; b < h; ++b) edges.push_back({o.clique_id(v, 0, a), o.clique_id(v, 1, b), true});
    o.graph_ = UndirectedGraph::from_edges(n, std::move(edges));
    return o;
  }

  // Rebuilds the structure for (D, r) and replaces its edge set, e.g. with a
  // tampered file; vertex ids keep their meaning.
  static ObstacleGraph with_edges(std::int64_t D, std::int64_t r, std::vector<UEdge> edges,
                                  const BuildOptions& opts = {}) {
    ObstacleGraph o;
    BuildOptions inner = opts;
    inner.explicit_limit = 0;
    o.base_ = build_galt2(D, r, inner);
    const auto counts = obstacle_counts(D, r);
    if (counts.n > opts.vertex_budget) throw BudgetExceeded("obstacle product exceeds the vertex budget");
    o.index_neighbors();
    o.graph_ = UndirectedGraph::from_edges(counts.n.convert_to<std::uint64_t>(), std::move(edges));
    return o;
  }

  /// Canonical path of a critical pair: the subdivided edges of its
  /// alternation path joined by one clique edge inside each interior clique.
  std::vector<VertexId> critical_path(PairId id) const {
    if (id >= pair_count()) throw std::out_of_range("unknown obstacle pair");
    std::vector<VertexId> orig;
    base_.path_vertices(id, orig);
    std::vector<VertexId> out;
    for (std::size_t i = 0; i + 1 < orig.size(); ++i) {
      const VertexId u = orig[i], v = orig[i + 1];
      out.push_back(tail_attachment(u, v));
      const std::uint64_t e = edge_index(u, v);
      for (std::int64_t t = 1; t < D(); ++t) out.push_back(subdivision_id(e, t));
      out.push_back(head_attachment(u, v));
    }
    return out;
  }

  std::int64_t canonical_length() const { return 2 * D() * D() + 2 * D() - 1; }

  // Edge ids along a vertex sequence; throws if a step is not an edge.
  std::vector<EdgeId> path_edges(const std::vector<VertexId>& path) const {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      auto e = graph_.find_edge(path[i], path[i + 1]);
      if (!e) throw std::runtime_error("path step " + std::to_string(path[i]) + "-" + std::to_string(path[i + 1]) + " is not an edge");
      out.push_back(*e);
    }
    return out;
  }

  std::vector<EdgeId> clique_edges_on(const std::vector<VertexId>& path) const {
    std::vector<EdgeId> out;
    for (auto e : path_edges(path))
      if (graph_.is_clique(e)) out.push_back(e);
    return out;
  }

 private:
  VertexId subdivision_base() const {
    return 2 * cube() + static_cast<std::uint64_t>(2 * D() - 1) * cube() * 2 * hull_size();
  }

  void index_neighbors() {
    const std::uint64_t n = base_.vertex_count();
    out_sorted_.assign(n, {});
    in_sorted_.assign(n, {});
    for (VertexId v = 0; v < n; ++v) {
      if (base_.layer_of(v) < base_.last_layer()) out_sorted_[v] = base_.out_neighbors(v);
      in_sorted_[v] = base_.rule_in_neighbors(v);
      std::sort(out_sorted_[v].begin(), out_sorted_[v].end());
      std::sort(in_sorted_[v].begin(), in_sorted_[v].end());
    }
  }

  LayeredGraph base_;
  UndirectedGraph graph_;
  std::vector<std::vector<VertexId>> out_sorted_, in_sorted_;
};

inline ObstacleGraph build_gobs(std::int64_t D, std::int64_t r, const BuildOptions& opts = {}) {
  return ObstacleGraph::build(D, r, opts);
}

inline std::vector<VertexId> gobs_critical_path(const ObstacleGraph& g, PairId id) { return g.critical_path(id); }

struct ObstacleCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Structural checks of an obstacle graph: exact counts, clique shape and
/// bipartiteness, port bijection, canonical path length and clique count,
/// and that every canonical path is a shortest path.
inline std::vector<ObstacleCheck> verify_obstacle(const ObstacleGraph& o) {
  std::vector<ObstacleCheck> out;
  const auto counts = obstacle_counts(o.D(), o.params().r);
  const auto& g = o.graph();
  const std::uint64_t L3 = o.cube();
  const std::size_t h = o.hull_size();

  ObstacleCheck cnt{"counts", true, ""};
  if (counts.n != g.vertex_count() || counts.m != g.edge_count() || counts.clique_edges != g.clique_edge_count()) {
    cnt.pass = false;
    cnt.detail = "n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) +
                 " clique=" + std::to_string(g.clique_edge_count()) + " expected n=" + counts.n.str() +
                 " m=" + counts.m.str() + " clique=" + counts.clique_edges.str();
  }
  out.push_back(cnt);

  ObstacleCheck clique{"clique_bipartite", true, ""};
  ObstacleCheck ports{"port_bijection", true, ""};
  for (EdgeId e = 0; e < g.edge_count() && clique.pass; ++e) {
    const auto a = o.decode(g.edge(e).u), b = o.decode(g.edge(e).v);
    const bool both_clique = a.kind == ObsKind::clique && b.kind == ObsKind::clique;
    const bool is_k = both_clique && a.original == b.original && a.side != b.side;
    if (g.is_clique(e) != is_k) {
      clique.pass = false;
      clique.detail = "edge " + std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v) +
                      (g.is_clique(e) ? " is flagged clique but is not a cross edge of one K_v" : " joins clique vertices outside a K_v");
    }
  }
  for (VertexId v = 2 * L3; v < 2 * L3 + (static_cast<std::uint64_t>(o.params().layers) - 2) * L3 * 2 * h && ports.pass &&
                            v < g.vertex_count();
       ++v) {
    std::size_t in_clique = 0, outside = 0;
    g.for_each_adjacent(v, [&](VertexId, EdgeId e) { (g.is_clique(e) ? in_clique : outside)++; });
    if (in_clique != h) {
      clique.pass = false;
      clique.detail = "clique vertex " + std::to_string(v) + " has " + std::to_string(in_clique) + " clique edges";
    }
    if (outside != 1) {
      ports.pass = false;
      ports.detail = "port " + std::to_string(v) + " has " + std::to_string(outside) + " non-clique edges";
    }
  }
  out.push_back(clique);
  if (ports.pass) {
    // Distinct incident original edges per side: the port map is a bijection.
    for (VertexId v = L3; v < static_cast<VertexId>(o.base().last_layer()) * L3 && ports.pass; ++v)
      for (int side = 0; side < 2 && ports.pass; ++side) {
        const auto nbrs = side == 0 ? o.base().rule_in_neighbors(v) : o.base().out_neighbors(v);
        std::vector<std::size_t> seen;
        for (auto w : nbrs) seen.push_back(o.port_of(v, w));
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() || seen.size() != h) {
          ports.pass = false;
          ports.detail = "clique of vertex " + std::to_string(v) + " reuses a port";
        }
      }
  }
  out.push_back(ports);

  ObstacleCheck path{"canonical_path_shape", true, ""};
  ObstacleCheck shortest{"canonical_path_shortest", true, ""};
  const auto pairs = o.pairs();
  std::vector<std::int64_t> canonical(pairs.size());
  for (PairId id = 0; id < pairs.size() && path.pass; ++id) {
    const auto p = o.critical_path(id);
    try {
      const auto ce = o.clique_edges_on(p);
      canonical[id] = static_cast<std::int64_t>(p.size()) - 1;
      if (canonical[id] != o.canonical_length() || static_cast<std::int64_t>(ce.size()) != 2 * o.D() - 1) {
        path.pass = false;
        path.detail = "pair " + std::to_string(id) + " has length " + std::to_string(canonical[id]) + " with " +
                      std::to_string(ce.size()) + " clique edges";
      }
    } catch (const std::exception& ex) {
      path.pass = false;
      path.detail = "pair " + std::to_string(id) + ": " + ex.what();
    }
  }
  out.push_back(path);
  if (path.pass) {
    const auto dist = pair_distances(g, pairs);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (dist[i] != canonical[i]) {
        shortest.pass = false;
        shortest.detail = "pair " + std::to_string(i) + " has distance " + std::to_string(dist[i]) + ", canonical " +
                          std::to_string(canonical[i]);
        break;
      }
  } else {
    shortest.pass = false;
    shortest.detail = "skipped: canonical paths are malformed";
  }
  out.push_back(shortest);
  return out;
}

}  // namespace obstructor
