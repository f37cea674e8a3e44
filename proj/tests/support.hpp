#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the graph accessors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "obstructor/obstructor.hpp"

namespace testing_support {

using obstructor::LayeredGraph;
using obstructor::Vec2;
using obstructor::VertexId;

inline std::vector<Vec2> disk_points(std::int64_t r) {
  std::vector<Vec2> pts;
  for (std::int64_t x = -r; x <= r; ++x)
    for (std::int64_t y = -r; y <= r; ++y)
      if (x * x + y * y <= r * r) pts.push_back({x, y});
  return pts;
}

inline std::int64_t orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

// p lies in the closed triangle abc (degenerate triangles included).
inline bool in_triangle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& p) {
  const auto d1 = orient(a, b, p), d2 = orient(b, c, p), d3 = orient(c, a, p);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  if (neg && pos) return false;
  if (orient(a, b, c) != 0) return true;
  // Degenerate: p must lie on one of the three segments.
  auto on_seg = [&](const Vec2& u, const Vec2& v) {
    return orient(u, v, p) == 0 && std::min(u[0], v[0]) <= p[0] && p[0] <= std::max(u[0], v[0]) &&
           std::min(u[1], v[1]) <= p[1] && p[1] <= std::max(u[1], v[1]);
  };
  return on_seg(a, b) || on_seg(b, c) || on_seg(a, c);
}

// Nonnegative-quadrant vertices of conv(disk), sorted by x: a point is a
// vertex iff no triangle of the other points contains it.
inline std::vector<Vec2> brute_force_hull(std::int64_t r) {
  const auto pts = disk_points(r);
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    if (p[0] < 0 || p[1] < 0) continue;
    std::vector<Vec2> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    bool covered = false;
    for (std::size_t a = 0; a < others.size() && !covered; ++a)
      for (std::size_t b = a + 1; b < others.size() && !covered; ++b)
        for (std::size_t c = b + 1; c < others.size() && !covered; ++c)
          covered = in_triangle(others[a], others[b], others[c], p);
    if (!covered) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Gift wrapping over the whole disk; returns strict vertices counter-clockwise.
inline std::vector<Vec2> jarvis_hull(const std::vector<Vec2>& pts) {
  std::size_t start = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i] < pts[start]) start = i;
  std::vector<Vec2> hull;
  std::size_t cur = start;
  do {
    hull.push_back(pts[cur]);
    std::size_t next = (cur + 1) % pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto o = orient(pts[cur], pts[next], pts[i]);
      const auto far = [&](const Vec2& a) {
        return (a[0] - pts[cur][0]) * (a[0] - pts[cur][0]) + (a[1] - pts[cur][1]) * (a[1] - pts[cur][1]);
      };
      if (o < 0 || (o == 0 && far(pts[i]) > far(pts[next]))) next = i;
    }
    cur = next;
  } while (cur != start);
  return hull;
}

inline std::vector<Vec2> quadrant_of(const std::vector<Vec2>& hull) {
  std::vector<Vec2> out;
  for (const auto& v : hull)
    if (v[0] >= 0 && v[1] >= 0) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

// Paths from s to t by plain recursion over out-neighbors.
inline std::uint64_t dfs_path_count(const LayeredGraph& g, VertexId s, VertexId t) {
  if (s == t) return 1;
  if (g.layer_of(s) >= g.layer_of(t)) return 0;
  std::uint64_t total = 0;
  for (auto w : g.out_neighbors(s)) total += dfs_path_count(g, w, t);
  return total;
}

// Edge set of the graph as an ordered set.
inline std::set<std::pair<VertexId, VertexId>> edge_set(const LayeredGraph& g) {
  std::set<std::pair<VertexId, VertexId>> out;
  g.for_each_edge([&](VertexId u, VertexId v) { out.emplace(u, v); });
  return out;
}

// Diameter by unpruned BFS from every vertex over an adjacency map.
inline std::int64_t naive_diameter(const LayeredGraph& g, const std::vector<std::pair<VertexId, VertexId>>& extra) {
  std::map<VertexId, std::vector<VertexId>> adj;
  g.for_each_edge([&](VertexId u, VertexId v) { adj[u].push_back(v); });
  for (auto [u, v] : extra) adj[u].push_back(v);
  std::int64_t best = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    std::map<VertexId, std::int64_t> dist{{s, 0}};
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      best = std::max(best, dist[v]);
      for (auto w : adj[v])
        if (!dist.count(w)) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
  }
  return best;
}

// Undirected BFS distances over an explicit edge list.
inline std::vector<std::int64_t> naive_bfs(std::uint64_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                                           VertexId s) {
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::int64_t> dist(n, -1);
  std::queue<VertexId> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace testing_support
