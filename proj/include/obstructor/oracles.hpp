#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "obstructor/base_graph.hpp"
#include "obstructor/parallel.hpp"
#include "obstructor/random.hpp"

namespace obstructor {

using BigCount = boost::multiprecision::cpp_int;
using Shortcut = std::pair<VertexId, VertexId>;

// ---------------------------------------------------------------------------
// Path counting

/// Number of directed paths from s to every vertex of `target_layer`
/// reachable from s, as (vertex, count) sorted by vertex. Counts are exact.
inline std::vector<std::pair<VertexId, BigCount>> count_paths_from(const LayeredGraph& g, VertexId s,
                                                                   std::int64_t target_layer) {
  std::vector<std::pair<VertexId, BigCount>> frontier;
  const std::int64_t start = g.layer_of(s);
  if (target_layer < start) return frontier;
  frontier.emplace_back(s, BigCount(1));
  std::vector<std::pair<VertexId, std::size_t>> edges;
  for (std::int64_t layer = start; layer < target_layer && !frontier.empty(); ++layer) {
    edges.clear();
    for (std::size_t i = 0; i < frontier.size(); ++i)
      g.for_each_out(frontier[i].first, [&](VertexId w) { edges.emplace_back(w, i); });
    std::sort(edges.begin(), edges.end());
    std::vector<std::pair<VertexId, BigCount>> next;
    for (const auto& [w, from] : edges) {
      if (next.empty() || next.back().first != w) next.emplace_back(w, BigCount(0));
      next.back().second += frontier[from].second;
    }
    frontier = std::move(next);
  }
  return frontier;
}

/// Exact number of directed s -> t paths; 1 when s == t, 0 when unreachable.
inline BigCount count_paths(const LayeredGraph& g, VertexId s, VertexId t) {
  if (s >= g.vertex_count() || t >= g.vertex_count()) throw std::out_of_range("count_paths: vertex id out of range");
  if (s == t) return 1;
  const auto counts = count_paths_from(g, s, g.layer_of(t));
  auto it = std::lower_bound(counts.begin(), counts.end(), t,
                             [](const auto& entry, VertexId v) { return entry.first < v; });
  return (it != counts.end() && it->first == t) ? it->second : BigCount(0);
}

// ---------------------------------------------------------------------------
// Reachability and distances in the layered DAG, optionally with shortcuts

// Sorted shortcut list with per-source lookup.
class ShortcutIndex {
 public:
  ShortcutIndex() = default;
  explicit ShortcutIndex(std::span<const Shortcut> edges) : edges_(edges.begin(), edges.end()) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }
  template <class F>
  void for_each_out(VertexId u, F&& f) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Shortcut{u, 0});
    for (; it != edges_.end() && it->first == u; ++it) f(it->second);
  }
  bool empty() const { return edges_.empty(); }
  std::size_t size() const { return edges_.size(); }

 private:
  std::vector<Shortcut> edges_;
};

/// Every vertex reachable from u within layers <= max_layer (u included),
/// sorted.
inline std::vector<VertexId> descendants(const LayeredGraph& g, VertexId u, std::int64_t max_layer) {
  std::vector<VertexId> all{u};
  std::vector<VertexId> frontier{u};
  for (std::int64_t layer = g.layer_of(u); layer < max_layer && !frontier.empty(); ++layer) {
    std::vector<VertexId> next;
    for (auto v : frontier) g.for_each_out(v, [&](VertexId w) { next.push_back(w); });
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

inline bool reachable(const LayeredGraph& g, VertexId u, VertexId v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) return false;
  if (g.layer_of(v) < g.layer_of(u)) return false;
  const auto d = descendants(g, u, g.layer_of(v));
  return std::binary_search(d.begin(), d.end(), v);
}

// BFS distance from s to t over graph edges plus shortcuts; -1 if unreachable.
inline std::int64_t layered_distance(const LayeredGraph& g, VertexId s, VertexId t,
                                     const ShortcutIndex& extra = {}) {
  if (s == t) return 0;
  const std::int64_t stop = g.layer_of(t);
  std::vector<VertexId> frontier{s};
  std::vector<VertexId> seen{s};
  for (std::int64_t d = 1; !frontier.empty(); ++d) {
    std::vector<VertexId> next;
    auto visit = [&](VertexId w) {
      if (g.layer_of(w) <= stop) next.push_back(w);
    };
    for (auto v : frontier) {
      g.for_each_out(v, visit);
      extra.for_each_out(v, visit);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<VertexId> fresh;
    std::set_difference(next.begin(), next.end(), seen.begin(), seen.end(), std::back_inserter(fresh));
    if (std::binary_search(fresh.begin(), fresh.end(), t)) return d;
    std::vector<VertexId> merged;
    std::merge(seen.begin(), seen.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
    seen = std::move(merged);
    frontier = std::move(fresh);
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Intersections of critical paths

struct IntersectionClass {
  enum class Tag { empty, single_vertex, single_edge, path2, longer, non_contiguous };
  Tag tag = Tag::empty;
  std::size_t shared_vertices = 0;
  bool self_comparison = false;

  // Edge length of the shared subpath (0 for a single vertex); -1 when empty.
  std::int64_t length() const { return static_cast<std::int64_t>(shared_vertices) - 1; }
  bool contiguous() const { return tag != Tag::non_contiguous; }

  std::string name() const {
    switch (tag) {
      case Tag::empty: return "Empty";
      case Tag::single_vertex: return "SingleVertex";
      case Tag::single_edge: return "SingleEdge";
      case Tag::path2: return "Path2";
      case Tag::longer: return "Longer(" + std::to_string(length()) + ")";
      case Tag::non_contiguous: return "NonContiguous";
    }
    return "?";
  }
  friend bool operator==(const IntersectionClass&, const IntersectionClass&) = default;
};

inline IntersectionClass classify_intersection(std::span<const VertexId> p1, std::span<const VertexId> p2) {
  IntersectionClass out;
  if (p1.size() == p2.size() && std::equal(p1.begin(), p1.end(), p2.begin())) {
    out.tag = IntersectionClass::Tag::longer;
    out.shared_vertices = p1.size();
    out.self_comparison = true;
    return out;
  }
  std::vector<std::pair<std::size_t, std::size_t>> shared;  // (index in p1, index in p2)
  for (std::size_t i = 0; i < p1.size(); ++i)
    for (std::size_t j = 0; j < p2.size(); ++j)
      if (p1[i] == p2[j]) shared.emplace_back(i, j);
  out.shared_vertices = shared.size();
  bool contiguous = true;
  for (std::size_t s = 1; s < shared.size(); ++s)
    if (shared[s].first != shared[s - 1].first + 1 || shared[s].second != shared[s - 1].second + 1) contiguous = false;
  using Tag = IntersectionClass::Tag;
  if (!contiguous) out.tag = Tag::non_contiguous;
  else if (shared.empty()) out.tag = Tag::empty;
  else if (shared.size() == 1) out.tag = Tag::single_vertex;
  else if (shared.size() == 2) out.tag = Tag::single_edge;
  else if (shared.size() == 3) out.tag = Tag::path2;
  else out.tag = Tag::longer;
  return out;
}

inline IntersectionClass classify_intersection(const CriticalPath& a, const CriticalPath& b) {
  return classify_intersection(std::span<const VertexId>(a.vertices), std::span<const VertexId>(b.vertices));
}

struct IntersectionSweep {
  std::string mode;  // "exhaustive" or "sampled"
  std::map<std::string, std::uint64_t> histogram;
  std::uint64_t compared = 0;
  std::uint64_t violations = 0;
  std::int64_t max_shared_length = -1;
  std::optional<std::pair<PairId, PairId>> witness;  // first violating pair
  std::optional<IntersectionClass> witness_class;
  bool pass() const { return violations == 0; }
};

namespace detail {
struct SweepChunk {
  std::map<std::string, std::uint64_t> histogram;
  std::uint64_t compared = 0;
  std::uint64_t violations = 0;
  std::int64_t max_len = -1;
  std::optional<std::pair<PairId, PairId>> witness;
  std::optional<IntersectionClass> witness_class;
};

inline void merge_chunk(IntersectionSweep& out, SweepChunk& c) {
  for (auto& [k, v] : c.histogram) out.histogram[k] += v;
  out.compared += c.compared;
  out.violations += c.violations;
  out.max_shared_length = std::max(out.max_shared_length, c.max_len);
  if (c.witness && (!out.witness || *c.witness < *out.witness)) {
    out.witness = c.witness;
    out.witness_class = c.witness_class;
  }
}
}  // namespace detail

/// Exhaustive over all intersecting pairs: every pair is classified once, at
/// the first vertex it shares. Non-intersecting pairs are counted as Empty.
/// A pair is allowed when it is contiguous with at most `max_shared_edges`.
inline IntersectionSweep intersection_sweep_incidence(const LayeredGraph& g, std::int64_t max_shared_edges) {
  const std::uint64_t tuples = g.tuples_per_source();
  const std::uint64_t n = g.vertex_count();
  const std::size_t layers = static_cast<std::size_t>(g.params().layers);
  // Fixed chunking independent of worker count; results merge by min/sum.
  const std::size_t chunks = std::min<std::size_t>(n, 256);
  std::vector<detail::SweepChunk> parts(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    auto& part = parts[c];
    const VertexId begin = n * c / chunks, end = n * (c + 1) / chunks;
    std::vector<PairId> ids(tuples);
    std::vector<VertexId> paths(tuples * layers);
    std::vector<VertexId> scratch;
    for (VertexId v = begin; v < end; ++v) {
      const std::size_t layer = static_cast<std::size_t>(g.layer_of(v));
      for (std::uint64_t t = 0; t < tuples; ++t) {
        ids[t] = g.pair_through(v, t);
        g.path_vertices(ids[t], scratch);
        std::copy(scratch.begin(), scratch.end(), paths.begin() + static_cast<std::ptrdiff_t>(t * layers));
      }
      for (std::uint64_t a = 0; a < tuples; ++a)
        for (std::uint64_t b = a + 1; b < tuples; ++b) {
          const VertexId* pa = &paths[a * layers];
          const VertexId* pb = &paths[b * layers];
          bool earlier = false;
          for (std::size_t i = 0; i < layer && !earlier; ++i) earlier = pa[i] == pb[i];
          if (earlier) continue;
          auto cls = classify_intersection(std::span<const VertexId>(pa, layers), std::span<const VertexId>(pb, layers));
          ++part.compared;
          ++part.histogram[cls.name()];
          part.max_len = std::max(part.max_len, cls.length());
          if (!cls.contiguous() || cls.length() > max_shared_edges) {
            ++part.violations;
            const std::pair<PairId, PairId> w{std::min(ids[a], ids[b]), std::max(ids[a], ids[b])};
            if (!part.witness || w < *part.witness) {
              part.witness = w;
              part.witness_class = cls;
            }
          }
        }
    }
  });
  IntersectionSweep out;
  out.mode = "exhaustive";
  for (auto& p : parts) detail::merge_chunk(out, p);
  const std::uint64_t P = g.pair_count();
  const std::uint64_t total = P % 2 == 0 ? (P / 2) * (P - 1) : P * ((P - 1) / 2);
  out.histogram["Empty"] += total - out.compared;
  return out;
}

// Work estimate for intersection_sweep_incidence.
inline std::uint64_t incidence_workload(const LayeredGraph& g) {
  const std::uint64_t t = g.tuples_per_source();
  return mul_sat(g.vertex_count(), t * (t - 1) / 2);
}

/// Direct pairwise comparison: every unordered pair when C(|P|,2) <= cap,
/// otherwise `sample_size` seeded random pairs.
inline IntersectionSweep intersection_sweep_pairwise(const LayeredGraph& g, std::int64_t max_shared_edges,
                                                     std::uint64_t comparison_cap, std::uint64_t sample_size,
                                                     std::uint64_t seed) {
  const std::uint64_t P = g.pair_count();
  const std::uint64_t total = P < 2 ? 0 : mul_sat(P, P - 1) / 2;
  std::vector<std::pair<PairId, PairId>> work;
  IntersectionSweep out;
  if (total <= comparison_cap) {
    out.mode = "exhaustive";
    work.reserve(total);
    for (PairId a = 0; a < P; ++a)
      for (PairId b = a + 1; b < P; ++b) work.emplace_back(a, b);
  } else {
    out.mode = "sampled";
    Rng rng = make_rng(seed, 0x1f7e);
    work.reserve(sample_size);
    while (work.size() < sample_size) {
      PairId a = uniform_below(rng, P), b = uniform_below(rng, P);
      if (a != b) work.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  const std::size_t chunks = std::min<std::size_t>(std::max<std::size_t>(work.size(), 1), 256);
  std::vector<detail::SweepChunk> parts(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    auto& part = parts[c];
    std::vector<VertexId> pa, pb;
    for (std::size_t i = work.size() * c / chunks; i < work.size() * (c + 1) / chunks; ++i) {
      g.path_vertices(work[i].first, pa);
      g.path_vertices(work[i].second, pb);
      auto cls = classify_intersection(std::span<const VertexId>(pa), std::span<const VertexId>(pb));
      ++part.compared;
      ++part.histogram[cls.name()];
      part.max_len = std::max(part.max_len, cls.length());
      if (!cls.contiguous() || cls.length() > max_shared_edges) {
        ++part.violations;
        if (!part.witness || work[i] < *part.witness) {
          part.witness = work[i];
          part.witness_class = cls;
        }
      }
    }
  });
  for (auto& p : parts) detail::merge_chunk(out, p);
  return out;
}

// ---------------------------------------------------------------------------
// Structural sweeps over the critical pair set

struct UniquePathSweep {
  std::string mode;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::optional<PairId> witness;
  BigCount witness_count = 0;
  bool pass() const { return failures == 0; }
};

/// Path count of every critical pair (one DP per source), or of a seeded
/// sample of at least `sample_size` pairs when `sampled` is set.
inline UniquePathSweep unique_path_sweep(const LayeredGraph& g, bool sampled = false,
                                         std::uint64_t sample_size = 1000, std::uint64_t seed = kDefaultSeed) {
  const std::uint64_t tuples = g.tuples_per_source();
  std::vector<std::vector<PairId>> groups;  // pair ids grouped by source
  UniquePathSweep out;
  if (!sampled) {
    out.mode = "exhaustive";
  } else {
    out.mode = "sampled";
    Rng rng = make_rng(seed, 0x9a7b);
    auto ids = sample_indices(g.pair_count(), sample_size, rng);
    std::sort(ids.begin(), ids.end());
    for (auto id : ids) {
      if (groups.empty() || groups.back().front() / tuples != id / tuples) groups.emplace_back();
      groups.back().push_back(id);
    }
  }
  const std::uint64_t sources = sampled ? groups.size() : g.layer_size();
  struct Local {
    std::uint64_t checked = 0, failures = 0;
    std::optional<PairId> witness;
    BigCount count = 0;
  };
  std::vector<Local> results(sources);
  parallel_for(sources, [&](std::size_t i) {
    auto& res = results[i];
    const VertexId s = sampled ? g.pair_source(groups[i].front()) : static_cast<VertexId>(i);
    const auto counts = count_paths_from(g, s, g.last_layer());
    auto check = [&](PairId id) {
      const VertexId t = g.pair_target(id);
      auto it = std::lower_bound(counts.begin(), counts.end(), t,
                                 [](const auto& e, VertexId v) { return e.first < v; });
      BigCount c = (it != counts.end() && it->first == t) ? it->second : BigCount(0);
      ++res.checked;
      if (c != 1) {
        ++res.failures;
        if (!res.witness) {
          res.witness = id;
          res.count = c;
        }
      }
    };
    if (sampled)
      for (auto id : groups[i]) check(id);
    else
      for (std::uint64_t t = 0; t < tuples; ++t) check(s * tuples + t);
  });
  for (auto& r : results) {
    out.checked += r.checked;
    out.failures += r.failures;
    if (r.witness && !out.witness) {
      out.witness = r.witness;
      out.witness_count = r.count;
    }
  }
  return out;
}

struct CoverageSweep {
  std::uint64_t edges = 0;
  std::uint64_t expected_multiplicity = 0;
  std::uint64_t bad_edges = 0;        // edges not on exactly expected_multiplicity paths
  std::uint64_t missing_path_edges = 0;  // critical path steps absent from the graph
  std::optional<Shortcut> witness_edge;
  std::uint64_t witness_multiplicity = 0;
  std::optional<PairId> witness_pair;
  bool pass() const { return bad_edges == 0 && missing_path_edges == 0; }
};

/// Every edge lies on exactly h^(k-2) critical paths (exactly one for G0) and
/// every step of every critical path is an edge, so the edge set is exactly
/// the union of the critical paths.
inline CoverageSweep coverage_sweep(const LayeredGraph& g) {
  CoverageSweep out;
  out.expected_multiplicity = pow_sat(g.hull_size(), g.params().k - 2);
  const std::uint64_t tuples = g.tuples_per_source();
  std::uint64_t bad = 0;
  g.for_each_edge([&](VertexId u, VertexId v) {
    ++out.edges;
    const std::int64_t next = g.layer_of(u) + 1;
    std::uint64_t mult = 0;
    for (std::uint64_t t = 0; t < tuples; ++t)
      if (g.path_vertex(g.pair_through(u, t), next) == v) ++mult;
    if (mult != out.expected_multiplicity) {
      ++bad;
      if (!out.witness_edge) {
        out.witness_edge = Shortcut{u, v};
        out.witness_multiplicity = mult;
      }
    }
  });
  out.bad_edges = bad;
  std::vector<VertexId> path;
  for (PairId id = 0; id < g.pair_count(); ++id) {
    g.path_vertices(id, path);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!g.has_edge(path[i], path[i + 1])) {
        ++out.missing_path_edges;
        if (!out.witness_pair) out.witness_pair = id;
        break;
      }
  }
  return out;
}

struct DegreeSweep {
  std::uint64_t violations = 0;
  std::optional<VertexId> witness;
  std::size_t witness_degree = 0;
  bool pass() const { return violations == 0; }
};

// Out-degree |hull| on every non-final layer, 0 on the last.
inline DegreeSweep degree_sweep(const LayeredGraph& g) {
  DegreeSweep out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t expected = g.layer_of(v) == g.last_layer() ? 0 : g.hull_size();
    const std::size_t d = g.out_degree(v);
    if (d != expected) {
      ++out.violations;
      if (!out.witness) {
        out.witness = v;
        out.witness_degree = d;
      }
    }
  }
  return out;
}

struct EndpointSweep {
  std::uint64_t pairs = 0;
  std::uint64_t collisions = 0;
  std::optional<std::pair<PairId, PairId>> witness;
  bool pass() const { return collisions == 0; }
};

// Distinct generators must give distinct (source, target) pairs.
inline EndpointSweep endpoint_sweep(const LayeredGraph& g) {
  EndpointSweep out;
  std::vector<std::tuple<VertexId, VertexId, PairId>> ends;
  ends.reserve(g.pair_count());
  for (PairId id = 0; id < g.pair_count(); ++id) ends.emplace_back(g.pair_source(id), g.pair_target(id), id);
  std::sort(ends.begin(), ends.end());
  out.pairs = ends.size();
  for (std::size_t i = 1; i < ends.size(); ++i)
    if (std::get<0>(ends[i]) == std::get<0>(ends[i - 1]) && std::get<1>(ends[i]) == std::get<1>(ends[i - 1])) {
      ++out.collisions;
      if (!out.witness) out.witness = std::make_pair(std::get<2>(ends[i - 1]), std::get<2>(ends[i]));
    }
  return out;
}

struct SubpathMultiplicity {
  std::size_t length = 0;
  std::uint64_t distinct_subpaths = 0;
  std::uint64_t max_count = 0;
  std::vector<VertexId> witness;
};

/// Maximum number of critical paths sharing one subpath of `length` edges,
/// counted by listing every such window of every critical path.
inline SubpathMultiplicity max_subpath_multiplicity(const LayeredGraph& g, std::size_t length) {
  const std::size_t layers = static_cast<std::size_t>(g.params().layers);
  SubpathMultiplicity out;
  out.length = length;
  if (length + 1 > layers) return out;
  const std::size_t w = length + 1;
  std::vector<VertexId> windows;
  windows.reserve(g.pair_count() * (layers - length) * w);
  std::vector<VertexId> path;
  for (PairId id = 0; id < g.pair_count(); ++id) {
    g.path_vertices(id, path);
    for (std::size_t i = 0; i + length < layers; ++i) windows.insert(windows.end(), path.begin() + i, path.begin() + i + w);
  }
  const std::size_t count = windows.size() / w;
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(windows.begin() + a * w, windows.begin() + (a + 1) * w, windows.begin() + b * w,
                                        windows.begin() + (b + 1) * w);
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 0; i < count;) {
    std::size_t j = i + 1;
    while (j < count && !less(order[i], order[j])) ++j;
    ++out.distinct_subpaths;
    if (j - i > out.max_count) {
      out.max_count = j - i;
      out.witness.assign(windows.begin() + order[i] * w, windows.begin() + (order[i] + 1) * w);
    }
    i = j;
  }
  return out;
}

/// For four or more coordinates: most critical paths through one 2-edge path.
inline SubpathMultiplicity max_length2_multiplicity(const LayeredGraph& g) {
  if (g.params().k < 4)
    throw std::invalid_argument("max_length2_multiplicity: 2-edge sharing cannot occur with fewer than 4 coordinates; "
                                "use max_subpath_multiplicity(g, 1) for the edge analogue");
  return max_subpath_multiplicity(g, 2);
}

// ---------------------------------------------------------------------------
// Shortcuts

// Pairs whose critical path visits both u and v; no precondition checks.
inline std::vector<PairId> shortcut_damage_unchecked(const LayeredGraph& g, VertexId u, VertexId v) {
  std::vector<PairId> out;
  const std::int64_t lv = g.layer_of(v);
  for (std::uint64_t t = 0; t < g.tuples_per_source(); ++t) {
    const PairId id = g.pair_through(u, t);
    if (g.path_vertex(id, lv) == v) out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Critical pairs whose unique path contains both u and v: the only pairs a
/// shortcut (u, v) can bring closer.
inline std::vector<PairId> shortcut_damage(const LayeredGraph& g, VertexId u, VertexId v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw std::out_of_range("shortcut endpoint out of range");
  if (g.layer_of(v) - g.layer_of(u) < 2) throw std::invalid_argument("shortcut_damage: layer gap must be >= 2");
  if (!reachable(g, u, v)) throw std::invalid_argument("shortcut_damage: v is not reachable from u");
  return shortcut_damage_unchecked(g, u, v);
}

// Damage bound by layer gap: one pair beyond the widest sharable subpath,
// h^(k-1-gap) below it (free generators).
inline std::uint64_t damage_bound(const LayeredGraph& g, std::int64_t gap) {
  const std::int64_t free = g.params().k - 1 - gap;
  return free <= 0 ? 1 : pow_sat(g.hull_size(), static_cast<int>(free));
}

struct DamageSweep {
  std::uint64_t shortcuts = 0;  // on-path (u, v) occurrences examined
  std::map<std::int64_t, std::uint64_t> max_by_gap;
  std::uint64_t violations = 0;
  std::optional<Shortcut> witness;
  std::uint64_t decrease_checked = 0;  // (shortcut, affected pair) recomputations
  std::uint64_t decrease_failures = 0;
  std::optional<std::pair<Shortcut, PairId>> decrease_witness;
  bool pass() const { return violations == 0 && decrease_failures == 0; }
};

/// Every (u, v) with layer gap >= 2 on every critical path: damage against
/// damage_bound(gap). When `check_gap2_decrease` is set, each distinct gap-2
/// shortcut is added alone and each affected pair's distance is recomputed;
/// it must drop by exactly 1.
inline DamageSweep damage_sweep(const LayeredGraph& g, bool check_gap2_decrease) {
  const std::size_t layers = static_cast<std::size_t>(g.params().layers);
  const std::uint64_t P = g.pair_count();
  const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(P, 256));
  std::vector<DamageSweep> parts(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    auto& part = parts[c];
    std::vector<VertexId> path;
    for (PairId id = P * c / chunks; id < P * (c + 1) / chunks; ++id) {
      g.path_vertices(id, path);
      for (std::size_t i = 0; i < layers; ++i)
        for (std::size_t j = i + 2; j < layers; ++j) {
          const auto gap = static_cast<std::int64_t>(j - i);
          const auto damaged = shortcut_damage_unchecked(g, path[i], path[j]);
          ++part.shortcuts;
          auto& mx = part.max_by_gap[gap];
          mx = std::max<std::uint64_t>(mx, damaged.size());
          if (damaged.size() > damage_bound(g, gap) || !std::binary_search(damaged.begin(), damaged.end(), id)) {
            ++part.violations;
            if (!part.witness) part.witness = Shortcut{path[i], path[j]};
          }
          if (check_gap2_decrease && gap == 2 && damaged.front() == id) {
            const Shortcut sc{path[i], path[j]};
            const ShortcutIndex extra(std::span<const Shortcut>(&sc, 1));
            for (auto q : damaged) {
              const VertexId s = g.pair_source(q), t = g.pair_target(q);
              const std::int64_t before = g.layer_of(t) - g.layer_of(s);
              const std::int64_t after = layered_distance(g, s, t, extra);
              ++part.decrease_checked;
              if (before - after != 1) {
                ++part.decrease_failures;
                if (!part.decrease_witness) part.decrease_witness = std::make_pair(sc, q);
              }
            }
          }
        }
    }
  });
  DamageSweep out;
  for (auto& p : parts) {
    out.shortcuts += p.shortcuts;
    for (auto [gap, m] : p.max_by_gap) out.max_by_gap[gap] = std::max(out.max_by_gap[gap], m);
    out.violations += p.violations;
    if (!out.witness) out.witness = p.witness;
    out.decrease_checked += p.decrease_checked;
    out.decrease_failures += p.decrease_failures;
    if (!out.decrease_witness) out.decrease_witness = p.decrease_witness;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Diameter

struct DiameterReport {
  std::int64_t diameter = 0;
  Shortcut witness{0, 0};
  std::string mode = "exhaustive";
  std::uint64_t sources_scanned = 0;
};

struct DiameterOptions {
  std::uint64_t source_budget = 0;  // 0: no cap
  std::uint64_t seed = kDefaultSeed;
};

/// Maximum shortest-path length over reachable ordered pairs of G plus the
/// shortcuts. Every shortcut must join a reachable pair of G. Sources are
/// scanned layer by layer and the scan stops once no later layer can beat
/// the current maximum; the witness is the lexicographically smallest pair
/// attaining it.
inline DiameterReport diameter(const LayeredGraph& g, std::span<const Shortcut> extra = {},
                               const DiameterOptions& opts = {}) {
  for (const auto& [u, v] : extra) {
    if (u == v) throw std::invalid_argument("shortcut is a self-loop");
    if (!reachable(g, u, v))
      throw std::invalid_argument("shortcut (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") is not in the transitive closure");
  }
  const ShortcutIndex index(extra);
  const std::uint64_t n = g.vertex_count();
  DiameterReport out;

  struct SourceResult {
    std::int64_t best = -1;
    VertexId target = 0;
  };
  auto scan = [&](VertexId s, std::vector<std::int32_t>& dist, std::vector<VertexId>& touched) {
    SourceResult res{0, s};
    std::vector<VertexId> queue{s};
    dist[s] = 0;
    touched.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId v = queue[head];
      const std::int32_t dv = dist[v];
      if (dv > res.best || (dv == res.best && v < res.target)) {
        res.best = dv;
        res.target = v;
      }
      auto relax = [&](VertexId w) {
        if (dist[w] < 0) {
          dist[w] = dv + 1;
          touched.push_back(w);
          queue.push_back(w);
        }
      };
      g.for_each_out(v, relax);
      index.for_each_out(v, relax);
    }
    for (auto t : touched) dist[t] = -1;
    touched.clear();
    return res;
  };
  auto run = [&](const std::vector<VertexId>& sources) {
    std::vector<SourceResult> res(sources.size());
    parallel_for_chunks(sources.size(), [&](std::size_t b, std::size_t e) {
      std::vector<std::int32_t> dist(n, -1);
      std::vector<VertexId> touched;
      for (std::size_t i = b; i < e; ++i) res[i] = scan(sources[i], dist, touched);
    });
    for (std::size_t i = 0; i < sources.size(); ++i) {
      // Sources arrive in ascending order, so strict improvement keeps the
      // lexicographically smallest witness.
      if (out.sources_scanned == 0 || res[i].best > out.diameter) {
        out.diameter = res[i].best;
        out.witness = {sources[i], res[i].target};
      }
      ++out.sources_scanned;
    }
  };

  if (opts.source_budget > 0 && n > opts.source_budget) {
    out.mode = "sampled";
    Rng rng = make_rng(opts.seed, 0xd1a);
    auto picked = sample_indices(n, opts.source_budget, rng);
    std::sort(picked.begin(), picked.end());
    run(std::vector<VertexId>(picked.begin(), picked.end()));
    return out;
  }
  for (std::int64_t layer = 0; layer < g.params().layers; ++layer) {
    if (out.sources_scanned > 0 && out.diameter >= g.last_layer() - layer) break;
    std::vector<VertexId> sources(g.layer_size());
    for (std::uint64_t i = 0; i < g.layer_size(); ++i) sources[i] = static_cast<VertexId>(layer) * g.layer_size() + i;
    run(sources);
  }
  return out;
}

}  // namespace obstructor
