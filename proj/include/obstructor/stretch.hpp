#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "obstructor/parallel.hpp"
#include "obstructor/undirected_graph.hpp"

namespace obstructor {

using VertexPair = std::pair<VertexId, VertexId>;

inline constexpr std::int64_t kUnreachable = -1;

struct WeightedEdge {
  VertexId u = 0;
  VertexId v = 0;
  std::int64_t w = 0;
};

/// Maximum additive stretch over a pair list. `beta` is meaningful only when
/// `unbounded` is false; histogram keys are per-pair stretch values.
struct StretchReport {
  bool unbounded = false;
  std::int64_t beta = 0;
  std::optional<std::size_t> argmax;  // index into the pair list
  std::uint64_t disconnected = 0;
  std::map<std::int64_t, std::uint64_t> histogram;

  std::string beta_string() const { return unbounded ? "inf" : std::to_string(beta); }
};

namespace detail {
// Pair indices grouped by source, sources ascending.
inline std::vector<std::pair<VertexId, std::vector<std::size_t>>> group_by_source(const std::vector<VertexPair>& pairs) {
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pairs[a].first < pairs[b].first; });
  std::vector<std::pair<VertexId, std::vector<std::size_t>>> groups;
  for (auto i : order) {
    if (groups.empty() || groups.back().first != pairs[i].first) groups.emplace_back(pairs[i].first, std::vector<std::size_t>{});
    groups.back().second.push_back(i);
  }
  return groups;
}

inline void check_pairs(std::uint64_t n, const std::vector<VertexPair>& pairs) {
  for (const auto& [s, t] : pairs)
    if (s >= n || t >= n) throw std::out_of_range("pair endpoint outside the vertex range");
}
}  // namespace detail

/// Distance of every pair in g restricted to the kept edges.
inline std::vector<std::int64_t> pair_distances(const UndirectedGraph& g, const std::vector<VertexPair>& pairs,
                                                const EdgeMask& keep = {}) {
  detail::check_pairs(g.vertex_count(), pairs);
  std::vector<std::int64_t> out(pairs.size(), kUnreachable);
  const auto groups = detail::group_by_source(pairs);
  parallel_for_chunks(groups.size(), [&](std::size_t b, std::size_t e) {
    std::vector<std::int32_t> dist;
    for (std::size_t i = b; i < e; ++i) {
      bfs(g, groups[i].first, dist, keep);
      for (auto p : groups[i].second) out[p] = dist[pairs[p].second];
    }
  });
  return out;
}

inline StretchReport stretch_from_distances(const std::vector<std::int64_t>& base,
                                            const std::vector<std::int64_t>& candidate) {
  if (base.size() != candidate.size()) throw std::invalid_argument("distance lists differ in length");
  StretchReport out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i] == kUnreachable) continue;  // not a pair of the base graph
    if (candidate[i] == kUnreachable) {
      ++out.disconnected;
      if (!out.unbounded) out.argmax = i;
      out.unbounded = true;
      continue;
    }
    const std::int64_t s = candidate[i] - base[i];
    ++out.histogram[s];
    if (!out.unbounded && (!out.argmax || s > out.beta)) {
      out.beta = s;
      out.argmax = i;
    }
  }
  if (out.unbounded) out.beta = std::numeric_limits<std::int64_t>::max();
  return out;
}

// Keep mask from an explicit edge list; rejects edges absent from g.
inline EdgeMask mask_from_edges(const UndirectedGraph& g, const std::vector<VertexPair>& edges) {
  EdgeMask keep(g.edge_count(), 0);
  for (const auto& [u, v] : edges) {
    auto id = g.find_edge(u, v);
    if (!id) throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is not in the base graph");
    keep[*id] = 1;
  }
  return keep;
}

inline StretchReport spanner_stretch(const UndirectedGraph& g, const EdgeMask& keep, const std::vector<VertexPair>& pairs) {
  if (!keep.empty() && keep.size() != g.edge_count()) throw std::invalid_argument("edge mask has the wrong size");
  return stretch_from_distances(pair_distances(g, pairs), pair_distances(g, pairs, keep));
}

inline StretchReport spanner_stretch(const UndirectedGraph& g, const std::vector<VertexPair>& subgraph_edges,
                                     const std::vector<VertexPair>& pairs) {
  return spanner_stretch(g, mask_from_edges(g, subgraph_edges), pairs);
}

/// Pair distances after deleting `deleted` edges, given base distances.
/// Only pairs with a shortest path through a deleted edge (a, b), i.e.
/// d(s,a) + 1 + d(b,t) = d(s,t) in either orientation, are recomputed.
inline std::vector<std::int64_t> pair_distances_after_deletion(const UndirectedGraph& g, const std::vector<VertexPair>& pairs,
                                                               const std::vector<std::int64_t>& base,
                                                               const std::vector<EdgeId>& deleted) {
  if (base.size() != pairs.size()) throw std::invalid_argument("base distances do not match the pair list");
  std::vector<VertexId> ends;
  for (auto e : deleted) {
    if (e >= g.edge_count()) throw std::out_of_range("deleted edge id out of range");
    ends.push_back(g.edge(e).u);
    ends.push_back(g.edge(e).v);
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::vector<std::vector<std::int32_t>> from(ends.size());
  parallel_for(ends.size(), [&](std::size_t i) { bfs(g, ends[i], from[i]); });
  auto dist_to = [&](VertexId end, VertexId x) -> std::int64_t {
    auto i = static_cast<std::size_t>(std::lower_bound(ends.begin(), ends.end(), end) - ends.begin());
    return from[i][x];
  };
  std::vector<char> affected(pairs.size(), 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (base[p] == kUnreachable) continue;
    const auto [s, t] = pairs[p];
    for (auto e : deleted) {
      const VertexId a = g.edge(e).u, b = g.edge(e).v;
      const std::int64_t sa = dist_to(a, s), sb = dist_to(b, s), ta = dist_to(a, t), tb = dist_to(b, t);
      if ((sa >= 0 && tb >= 0 && sa + 1 + tb == base[p]) || (sb >= 0 && ta >= 0 && sb + 1 + ta == base[p])) {
        affected[p] = 1;
        break;
      }
    }
  }
  std::vector<VertexPair> redo;
  std::vector<std::size_t> redo_index;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (affected[p]) {
      redo.push_back(pairs[p]);
      redo_index.push_back(p);
    }
  std::vector<std::int64_t> out = base;
  if (redo.empty()) return out;
  EdgeMask keep(g.edge_count(), 1);
  for (auto e : deleted) keep[e] = 0;
  const auto fresh = pair_distances(g, redo, keep);
  for (std::size_t i = 0; i < redo.size(); ++i) out[redo_index[i]] = fresh[i];
  return out;
}

/// Weighted graph over the base vertex ids (parallel edges allowed; the
/// lightest wins).
class WeightedGraph {
 public:
  WeightedGraph(std::uint64_t n, const std::vector<WeightedEdge>& edges) : n_(n), adj_(n) {
    for (const auto& e : edges) {
      if (e.w < 0) throw std::invalid_argument("negative emulator weight on (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
      if (e.u >= n || e.v >= n) throw std::out_of_range("emulator edge endpoint outside the base vertex set");
      adj_[e.u].push_back({e.v, e.w});
      adj_[e.v].push_back({e.u, e.w});
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }
  std::uint64_t vertex_count() const { return n_; }

  // Dijkstra; `parent` receives the predecessor with ties broken toward the
  // smaller vertex id.
  void shortest_paths(VertexId s, std::vector<std::int64_t>& dist, std::vector<VertexId>* parent = nullptr) const {
    dist.assign(n_, kUnreachable);
    if (parent) parent->assign(n_, s);
    using Item = std::pair<std::int64_t, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    std::vector<char> done(n_, 0);
    dist[s] = 0;
    heap.push({0, s});
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (done[v]) continue;
      done[v] = 1;
      for (const auto& [w, len] : adj_[v]) {
        const std::int64_t nd = d + len;
        if (dist[w] == kUnreachable || nd < dist[w]) {
          dist[w] = nd;
          if (parent) (*parent)[w] = v;
          heap.push({nd, w});
        } else if (parent && nd == dist[w] && !done[w] && v < (*parent)[w]) {
          (*parent)[w] = v;
        }
      }
    }
  }

 private:
  std::uint64_t n_;
  std::vector<std::vector<std::pair<VertexId, std::int64_t>>> adj_;
};

inline std::vector<std::int64_t> emulator_pair_distances(const WeightedGraph& h, const std::vector<VertexPair>& pairs) {
  detail::check_pairs(h.vertex_count(), pairs);
  std::vector<std::int64_t> out(pairs.size(), kUnreachable);
  const auto groups = detail::group_by_source(pairs);
  parallel_for_chunks(groups.size(), [&](std::size_t b, std::size_t e) {
    std::vector<std::int64_t> dist;
    for (std::size_t i = b; i < e; ++i) {
      h.shortest_paths(groups[i].first, dist);
      for (auto p : groups[i].second) out[p] = dist[pairs[p].second];
    }
  });
  return out;
}

inline StretchReport emulator_stretch(const UndirectedGraph& g, const std::vector<WeightedEdge>& emulator,
                                      const std::vector<VertexPair>& pairs) {
  const WeightedGraph h(g.vertex_count(), emulator);
  return stretch_from_distances(pair_distances(g, pairs), emulator_pair_distances(h, pairs));
}

}  // namespace obstructor
