#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "obstructor/base_graph.hpp"

namespace obstructor {

using EdgeId = std::uint64_t;

struct UEdge {
  VertexId u = 0;
  VertexId v = 0;
  bool clique = false;
};

/// Simple undirected graph in CSR form. Edge ids follow the order of the
/// edge list sorted by (min endpoint, max endpoint); adjacency lists are
/// sorted by neighbor id so every traversal is deterministic.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  static UndirectedGraph from_edges(std::uint64_t n, std::vector<UEdge> edges) {
    for (auto& e : edges) {
      if (e.u >= n || e.v >= n) throw std::out_of_range("edge endpoint outside the vertex range");
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const UEdge& a, const UEdge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges.size(); ++i)
      if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
        throw std::invalid_argument("duplicate edge " + std::to_string(edges[i].u) + " " + std::to_string(edges[i].v));
    UndirectedGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.offsets_.assign(n + 1, 0);
    for (const auto& e : g.edges_) {
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    for (std::uint64_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.adj_.resize(2 * g.edges_.size());
    std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
      g.adj_[fill[g.edges_[id].u]++] = {g.edges_[id].v, id};
      g.adj_[fill[g.edges_[id].v]++] = {g.edges_[id].u, id};
    }
    for (std::uint64_t v = 0; v < n; ++v)
      std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    return g;
  }

  std::uint64_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return edges_.size(); }
  const UEdge& edge(EdgeId id) const { return edges_[id]; }
  const std::vector<UEdge>& edges() const { return edges_; }
  bool is_clique(EdgeId id) const { return edges_[id].clique; }
  std::uint64_t clique_edge_count() const {
    return static_cast<std::uint64_t>(std::count_if(edges_.begin(), edges_.end(), [](const UEdge& e) { return e.clique; }));
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  template <class F>
  void for_each_adjacent(VertexId v, F&& f) const {
    for (auto i = offsets_[v]; i < offsets_[v + 1]; ++i) f(adj_[i].first, adj_[i].second);
  }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_) return std::nullopt;
    auto begin = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
    auto end = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
    auto it = std::lower_bound(begin, end, std::pair<VertexId, EdgeId>{v, 0});
    if (it != end && it->first == v) return it->second;
    return std::nullopt;
  }

 private:
  std::uint64_t n_ = 0;
  std::vector<UEdge> edges_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::pair<VertexId, EdgeId>> adj_;
};

// Per-edge keep flags; an empty mask keeps every edge.
using EdgeMask = std::vector<char>;

/// Unweighted single-source distances (-1 when unreachable). `parent`, when
/// given, receives the BFS tree with ties broken toward the smaller
/// neighbor id.
inline void bfs(const UndirectedGraph& g, VertexId s, std::vector<std::int32_t>& dist, const EdgeMask& keep = {},
                std::vector<VertexId>* parent = nullptr) {
  dist.assign(g.vertex_count(), -1);
  if (parent) parent->assign(g.vertex_count(), s);
  std::vector<VertexId> queue{s};
  dist[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    g.for_each_adjacent(v, [&](VertexId w, EdgeId e) {
      if (dist[w] >= 0 || (!keep.empty() && !keep[e])) return;
      dist[w] = dist[v] + 1;
      if (parent) (*parent)[w] = v;
      queue.push_back(w);
    });
  }
}

// Vertex sequence s..t from a BFS parent array.
inline std::vector<VertexId> trace_path(const std::vector<VertexId>& parent, VertexId s, VertexId t) {
  std::vector<VertexId> path{t};
  while (path.back() != s) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace obstructor
