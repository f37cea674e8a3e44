#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "obstructor/alternation.hpp"
#include "obstructor/obstacle.hpp"
#include "obstructor/oracles.hpp"
#include "obstructor/random.hpp"
#include "obstructor/stretch.hpp"

namespace obstructor {

// ---------------------------------------------------------------------------
// Shortcut sets

struct ShortcutSet {
  std::vector<Shortcut> edges;
  std::string provenance;  // folklore | random | greedy | gap2 | file

  std::size_t size() const { return edges.size(); }
};

struct ShortcutAudit {
  std::uint64_t useful = 0;
  std::uint64_t useless = 0;  // layer gap 1: already an edge of the graph
};

// Throws on self-loops and pairs outside the transitive closure.
inline ShortcutAudit audit_shortcuts(const LayeredGraph& g, const ShortcutSet& set) {
  ShortcutAudit a;
  for (const auto& [u, v] : set.edges) {
    if (u == v) throw std::invalid_argument("shortcut is a self-loop at " + std::to_string(u));
    if (!reachable(g, u, v))
      throw std::invalid_argument("shortcut (" + std::to_string(u) + "," + std::to_string(v) + ") is not in the transitive closure");
    (g.layer_of(v) - g.layer_of(u) >= 2 ? a.useful : a.useless)++;
  }
  return a;
}

namespace detail {
// Folklore shortcuts over vertices taken in `order`: every reachable ordered
// pair among the first vertices, stopping once `cap` shortcuts exist.
inline std::vector<Shortcut> folklore_pairs(const LayeredGraph& g, const std::vector<VertexId>& order, std::uint64_t cap) {
  std::vector<Shortcut> out;
  std::vector<VertexId> chosen;
  std::vector<std::vector<VertexId>> below;  // descendants of each chosen vertex
  for (auto x : order) {
    if (out.size() >= cap) break;
    auto dx = descendants(g, x, g.last_layer());
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      const VertexId y = chosen[i];
      if (std::binary_search(dx.begin(), dx.end(), y)) out.emplace_back(x, y);
      if (std::binary_search(below[i].begin(), below[i].end(), x)) out.emplace_back(y, x);
    }
    chosen.push_back(x);
    below.push_back(std::move(dx));
  }
  if (out.size() > cap) out.resize(cap);
  return out;
}
}  // namespace detail

/// Picks `sample_size` vertices at random and adds a shortcut between every
/// ordered pair of them with the second reachable from the first.
inline ShortcutSet folklore_shortcut_set(const LayeredGraph& g, std::uint64_t sample_size, std::uint64_t seed) {
  if (sample_size > g.vertex_count()) throw std::invalid_argument("folklore sample exceeds the vertex count");
  Rng rng = make_rng(seed, 0xf01c);
  auto picked = sample_indices(g.vertex_count(), sample_size, rng);
  std::sort(picked.begin(), picked.end());
  ShortcutSet set{{}, "folklore"};
  set.edges = detail::folklore_pairs(g, std::vector<VertexId>(picked.begin(), picked.end()),
                                     std::numeric_limits<std::uint64_t>::max());
  std::sort(set.edges.begin(), set.edges.end());
  return set;
}

/// Uniform sample of `count` distinct closure pairs with layer gap >= 2.
inline ShortcutSet random_shortcut_set(const LayeredGraph& g, std::uint64_t count, Rng& rng) {
  const std::uint64_t n = g.vertex_count();
  std::vector<std::uint64_t> weight(n, 0);  // useful descendants per vertex
  std::uint64_t total = 0;
  for (VertexId u = 0; u < n; ++u) {
    if (g.layer_of(u) + 2 > g.last_layer()) continue;
    const auto d = descendants(g, u, g.last_layer());
    for (auto v : d)
      if (g.layer_of(v) >= g.layer_of(u) + 2) ++weight[u];
    total += weight[u];
  }
  ShortcutSet set{{}, "random"};
  count = std::min(count, total);
  std::set<Shortcut> taken;
  std::vector<std::uint64_t> prefix(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) prefix[u + 1] = prefix[u] + weight[u];
  while (taken.size() < count) {
    const std::uint64_t pick = uniform_below(rng, total);
    const VertexId u = static_cast<VertexId>(std::upper_bound(prefix.begin(), prefix.end(), pick) - prefix.begin() - 1);
    std::uint64_t rank = pick - prefix[u];
    for (auto v : descendants(g, u, g.last_layer()))
      if (g.layer_of(v) >= g.layer_of(u) + 2 && rank-- == 0) {
        taken.insert({u, v});
        break;
      }
  }
  set.edges.assign(taken.begin(), taken.end());
  return set;
}

/// On-path shortcuts by descending layer gap, ties by (u, v); a candidate is
/// taken only if it shortens some critical pair not already shortened.
inline ShortcutSet greedy_shortcut_set(const LayeredGraph& g, std::uint64_t budget) {
  std::vector<std::tuple<std::int64_t, VertexId, VertexId>> cand;
  std::vector<VertexId> path;
  const std::size_t layers = static_cast<std::size_t>(g.params().layers);
  for (PairId id = 0; id < g.pair_count(); ++id) {
    g.path_vertices(id, path);
    for (std::size_t i = 0; i < layers; ++i)
      for (std::size_t j = i + 2; j < layers; ++j) cand.emplace_back(-static_cast<std::int64_t>(j - i), path[i], path[j]);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<char> damaged(g.pair_count(), 0);
  ShortcutSet set{{}, "greedy"};
  for (const auto& [neg_gap, u, v] : cand) {
    if (set.edges.size() >= budget) break;
    bool fresh = false;
    const auto hit = shortcut_damage_unchecked(g, u, v);
    for (auto p : hit) fresh = fresh || !damaged[p];
    if (!fresh) continue;
    for (auto p : hit) damaged[p] = 1;
    set.edges.emplace_back(u, v);
  }
  return set;
}

// Random gap-2 shortcuts lying on critical paths.
inline ShortcutSet gap2_shortcut_set(const LayeredGraph& g, std::uint64_t budget, Rng& rng) {
  const auto positions = static_cast<std::uint64_t>(g.params().layers - 2);
  ShortcutSet set{{}, "gap2"};
  std::set<Shortcut> taken;
  std::uint64_t misses = 0;
  // Stops early once repeated draws suggest the on-path gap-2 pool is used up.
  while (taken.size() < budget && misses < 64 * (budget + 1)) {
    const PairId id = uniform_below(rng, g.pair_count());
    const auto i = static_cast<std::int64_t>(uniform_below(rng, positions));
    if (!taken.insert({g.path_vertex(id, i), g.path_vertex(id, i + 2)}).second) ++misses;
  }
  set.edges.assign(taken.begin(), taken.end());
  return set;
}

// ---------------------------------------------------------------------------
// Shortcut budget evaluation

struct ShortcutTrial {
  std::string strategy;
  std::uint64_t trial = 0;
  std::uint64_t shortcuts = 0;
  std::int64_t diameter = 0;
  Shortcut witness{0, 0};
  bool pass = true;
};

struct ShortcutEvalReport {
  std::int64_t baseline = 0;
  std::string expectation;  // "equal", "at_least" or "report_only"
  std::int64_t bound = 0;
  std::uint64_t budget = 0;
  std::vector<ShortcutTrial> trials;
  bool pass() const {
    return std::all_of(trials.begin(), trials.end(), [](const ShortcutTrial& t) { return t.pass; });
  }
};

struct ShortcutEvalOptions {
  std::vector<std::string> strategies{"random", "greedy", "folklore"};
  std::uint64_t trials = 20;
  std::uint64_t seed = kDefaultSeed;
};

inline ShortcutSet make_strategy_set(const LayeredGraph& g, const std::string& strategy, std::uint64_t budget,
                                     std::uint64_t seed, std::uint64_t trial) {
  const std::vector<std::string> known{"random", "greedy", "folklore", "gap2"};
  const auto stream = static_cast<std::uint64_t>(std::find(known.begin(), known.end(), strategy) - known.begin());
  Rng rng = make_rng(seed, trial * 16 + stream);
  if (strategy == "random") return random_shortcut_set(g, budget, rng);
  if (strategy == "greedy") return greedy_shortcut_set(g, budget);
  if (strategy == "folklore") {
    std::vector<VertexId> order(g.vertex_count());
    for (VertexId v = 0; v < order.size(); ++v) order[v] = v;
    shuffle_in_place(order, rng);
    ShortcutSet set{detail::folklore_pairs(g, order, budget), "folklore"};
    return set;
  }
  if (strategy == "gap2") {
    if (g.params().k < 4) throw std::invalid_argument("gap2 strategy needs at least 4 coordinates");
    return gap2_shortcut_set(g, budget, rng);
  }
  throw std::invalid_argument("unknown shortcut strategy: " + strategy);
}

/// Adds budget-limited shortcut sets from each strategy and measures the
/// diameter. With at most two coordinates per step kind overlap (k <= 3) a
/// shortcut shortens at most one critical pair, so fewer than |P| shortcuts
/// leave the diameter at (k-1)D; for k = 4 a gap-2 shortcut shortens at most
/// h pairs by one, giving diameter >= 3D - h.
inline ShortcutEvalReport eval_shortcut_budget(const LayeredGraph& g, std::uint64_t budget,
                                               const ShortcutEvalOptions& opts = {}) {
  if (budget >= g.pair_count())
    throw std::invalid_argument("budget " + std::to_string(budget) + " must be below |P| = " + std::to_string(g.pair_count()));
  ShortcutEvalReport rep;
  rep.budget = budget;
  rep.baseline = g.last_layer();
  const int k = g.params().k;
  if (k <= 3) {
    rep.expectation = "equal";
    rep.bound = rep.baseline;
  } else if (k == 4) {
    rep.expectation = "at_least";
    rep.bound = rep.baseline - static_cast<std::int64_t>(g.hull_size());
  } else {
    rep.expectation = "report_only";
    rep.bound = 0;
  }
  for (const auto& strategy : opts.strategies)
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
      const auto set = make_strategy_set(g, strategy, budget, opts.seed, t);
      if (set.size() > budget) throw std::logic_error("strategy exceeded the budget");
      const auto d = diameter(g, set.edges);
      ShortcutTrial row{strategy, t, set.size(), d.diameter, d.witness, true};
      if (rep.expectation == "equal") row.pass = d.diameter == rep.bound;
      else if (rep.expectation == "at_least") row.pass = d.diameter >= rep.bound;
      rep.trials.push_back(row);
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Spanner adversary

struct SpannerTrial {
  std::uint64_t trial = 0;
  std::string plan;
  std::optional<PairId> designated;
  std::uint64_t deleted = 0;
  std::uint64_t max_lost_on_a_path = 0;  // most clique edges any critical path lost
  std::optional<PairId> pigeonhole_pair;  // a path that lost >= D clique edges
  StretchReport stretch;
  std::int64_t designated_stretch = 0;
  std::string detour;  // same_route | rerouted | disconnected | none
  bool pass = true;
};

struct SpannerAdversaryOptions {
  std::string plan = "per-path";  // per-path | random | none | file
  std::uint64_t trials = 1;
  std::uint64_t seed = kDefaultSeed;
  std::vector<VertexPair> deletions;  // plan "file"
  bool clique_only = true;
};

namespace detail {
// Alternation vertices touched by an obstacle vertex.
inline void originals_of(const ObstacleGraph& o, VertexId v, std::vector<VertexId>& out) {
  const auto d = o.decode(v);
  if (d.kind != ObsKind::subdivision) {
    out.push_back(d.original);
    return;
  }
  const VertexId u = d.edge / o.hull_size();
  out.push_back(u);
  out.push_back(o.base().rule_successor(u, d.edge % o.hull_size()));
}

inline std::string detour_class(const ObstacleGraph& o, PairId id, const EdgeMask& keep) {
  const auto [s, t] = o.pair(id);
  std::vector<std::int32_t> dist;
  std::vector<VertexId> parent;
  bfs(o.graph(), s, dist, keep, &parent);
  if (dist[t] < 0) return "disconnected";
  std::vector<VertexId> route;
  o.base().path_vertices(id, route);
  std::sort(route.begin(), route.end());
  std::vector<VertexId> seen;
  for (auto v : trace_path(parent, s, t)) originals_of(o, v, seen);
  for (auto v : seen)
    if (!std::binary_search(route.begin(), route.end(), v)) return "rerouted";
  return "same_route";
}

inline std::vector<std::uint64_t> lost_per_path(const ObstacleGraph& o, const EdgeMask& keep) {
  std::vector<std::uint64_t> lost(o.pair_count(), 0);
  for (PairId id = 0; id < o.pair_count(); ++id)
    for (auto e : o.clique_edges_on(o.critical_path(id)))
      if (!keep[e]) ++lost[id];
  return lost;
}
}  // namespace detail

/// Deletes clique edges of G_obs per the plan and measures additive stretch
/// over P_obs. When some critical path loses at least D clique edges its
/// pair must end up at stretch >= 2D, either through D clique detours or by
/// leaving the original route.
inline std::vector<SpannerTrial> spanner_adversary(const ObstacleGraph& o, const SpannerAdversaryOptions& opts) {
  const auto& g = o.graph();
  const auto pairs = o.pairs();
  const auto base = pair_distances(g, pairs);
  const std::int64_t D = o.D();
  std::vector<EdgeId> clique_ids;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.is_clique(e)) clique_ids.push_back(e);

  std::vector<SpannerTrial> out;
  const std::uint64_t trials = (opts.plan == "none" || opts.plan == "file") ? 1 : opts.trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = make_rng(opts.seed, t);
    SpannerTrial row;
    row.trial = t;
    row.plan = opts.plan;
    EdgeMask keep(g.edge_count(), 1);
    std::vector<EdgeId> deleted;
    if (opts.plan == "per-path") {
      const PairId id = uniform_below(rng, o.pair_count());
      row.designated = id;
      const auto on_path = o.clique_edges_on(o.critical_path(id));
      for (auto i : sample_indices(on_path.size(), static_cast<std::uint64_t>(D), rng)) deleted.push_back(on_path[i]);
    } else if (opts.plan == "random") {
      const std::uint64_t keep_count = static_cast<std::uint64_t>(D) * o.pair_count() - 1;
      std::vector<char> kept(clique_ids.size(), 0);
      for (auto i : sample_indices(clique_ids.size(), keep_count, rng)) kept[i] = 1;
      for (std::size_t i = 0; i < clique_ids.size(); ++i)
        if (!kept[i]) deleted.push_back(clique_ids[i]);
    } else if (opts.plan == "file") {
      for (const auto& [u, v] : opts.deletions) {
        auto e = g.find_edge(u, v);
        if (!e) throw std::invalid_argument("deletion (" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
        if (opts.clique_only && !g.is_clique(*e))
          throw std::invalid_argument("deletion (" + std::to_string(u) + "," + std::to_string(v) + ") is not a clique edge");
        deleted.push_back(*e);
      }
    } else if (opts.plan != "none") {
      throw std::invalid_argument("unknown deletion plan: " + opts.plan);
    }
    std::sort(deleted.begin(), deleted.end());
    deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
    for (auto e : deleted) keep[e] = 0;
    row.deleted = deleted.size();

    const auto lost = detail::lost_per_path(o, keep);
    for (PairId id = 0; id < lost.size(); ++id) {
      row.max_lost_on_a_path = std::max(row.max_lost_on_a_path, lost[id]);
      if (!row.pigeonhole_pair && lost[id] >= static_cast<std::uint64_t>(D)) row.pigeonhole_pair = id;
    }
    // A few deletions: recompute only pairs whose shortest paths they touch.
    const auto after = deleted.size() <= 64 ? pair_distances_after_deletion(g, pairs, base, deleted)
                                            : pair_distances(g, pairs, keep);
    row.stretch = stretch_from_distances(base, after);
    const std::optional<PairId> focus = row.designated ? row.designated : row.pigeonhole_pair;
    if (focus) {
      row.designated_stretch = after[*focus] == kUnreachable ? std::numeric_limits<std::int64_t>::max()
                                                             : after[*focus] - base[*focus];
      row.detour = detail::detour_class(o, *focus, keep);
    } else {
      row.detour = "none";
    }
    if (opts.plan == "per-path") row.pass = row.designated_stretch >= 2 * D;
    else if (opts.plan == "random") row.pass = row.pigeonhole_pair.has_value() && row.designated_stretch >= 2 * D;
    else if (opts.plan == "none") row.pass = !row.stretch.unbounded && row.stretch.beta == 0;
    else row.pass = !row.pigeonhole_pair || row.designated_stretch >= 2 * D;
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Emulators

/// Random emulator in the normalized regime: every critical path is cut at
/// random points and consecutive cut points are joined with their distance
/// as weight; `noise` extra vertex pairs get their exact distance.
inline std::vector<WeightedEdge> random_emulator(const ObstacleGraph& o, std::uint64_t noise, std::uint64_t seed) {
  Rng rng = make_rng(seed, 0xe4);
  std::vector<WeightedEdge> edges;
  for (PairId id = 0; id < o.pair_count(); ++id) {
    const auto path = o.critical_path(id);
    std::size_t last = 0;
    for (std::size_t i = 1; i < path.size(); ++i)
      if (i + 1 == path.size() || uniform_below(rng, 4) == 0) {
        edges.push_back({path[last], path[i], static_cast<std::int64_t>(i - last)});
        last = i;
      }
  }
  const auto& g = o.graph();
  std::vector<std::int32_t> dist;
  for (std::uint64_t i = 0; i < noise; ++i) {
    const VertexId u = uniform_below(rng, g.vertex_count());
    const VertexId v = uniform_below(rng, g.vertex_count());
    if (u == v) continue;
    bfs(g, u, dist);
    if (dist[v] > 0) edges.push_back({u, v, dist[v]});
  }
  return edges;
}

struct EmulatorReduction {
  EdgeMask keep;
  std::uint64_t emulator_edges = 0;
  std::uint64_t normalized = 0;  // weights lowered to the true distance
  std::uint64_t expanded_hops = 0;
  std::uint64_t clique_edges = 0;
  std::uint64_t max_clique_per_hop = 0;
  std::uint64_t clique_bound = 0;  // 2D per emulator edge
  std::uint64_t hop_bound = 0;     // 2D
  std::vector<std::int64_t> emulator_distance;
  std::vector<std::int64_t> spanner_distance;
  std::uint64_t mismatches = 0;
  std::optional<PairId> mismatch_witness;
  bool pass() const { return mismatches == 0 && clique_edges <= clique_bound && max_clique_per_hop <= hop_bound; }
};

/// Turns an emulator of G_obs into a subgraph: each critical pair's shortest
/// emulator path is expanded hop by hop into G_obs shortest paths.
inline EmulatorReduction emulator_to_spanner(const ObstacleGraph& o, std::vector<WeightedEdge> emulator) {
  const auto& g = o.graph();
  const std::int64_t D = o.D();
  EmulatorReduction red;
  // Normalize: weight must be at least the true distance and is lowered to it.
  {
    std::vector<std::size_t> order(emulator.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return emulator[a].u < emulator[b].u; });
    std::vector<std::int32_t> dist;
    VertexId current = std::numeric_limits<VertexId>::max();
    for (auto i : order) {
      auto& e = emulator[i];
      if (e.u >= g.vertex_count() || e.v >= g.vertex_count()) throw std::out_of_range("emulator edge endpoint out of range");
      if (e.w < 0) throw std::invalid_argument("negative emulator weight");
      if (e.u != current) {
        bfs(g, e.u, dist);
        current = e.u;
      }
      if (dist[e.v] < 0) throw std::invalid_argument("emulator edge joins disconnected vertices");
      if (e.w < dist[e.v])
        throw std::invalid_argument("emulator edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") weight " +
                                    std::to_string(e.w) + " is below the distance " + std::to_string(dist[e.v]));
      if (e.w > dist[e.v]) {
        e.w = dist[e.v];
        ++red.normalized;
      }
    }
  }
  red.emulator_edges = emulator.size();
  red.clique_bound = 2 * static_cast<std::uint64_t>(D) * emulator.size();
  red.hop_bound = 2 * static_cast<std::uint64_t>(D);
  red.keep.assign(g.edge_count(), 0);

  const WeightedGraph h(g.vertex_count(), emulator);
  const auto pairs = o.pairs();
  red.emulator_distance.assign(pairs.size(), kUnreachable);
  std::vector<std::int64_t> dist;
  std::vector<VertexId> parent;
  std::vector<std::pair<VertexId, VertexId>> hops;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [s, t] = pairs[i];
    if (i == 0 || pairs[i - 1].first != s) h.shortest_paths(s, dist, &parent);
    red.emulator_distance[i] = dist[t];
    if (dist[t] == kUnreachable) continue;
    const auto route = trace_path(parent, s, t);
    for (std::size_t j = 0; j + 1 < route.size(); ++j) hops.emplace_back(route[j], route[j + 1]);
  }
  std::sort(hops.begin(), hops.end());
  hops.erase(std::unique(hops.begin(), hops.end()), hops.end());
  red.expanded_hops = hops.size();
  std::vector<std::int32_t> bdist;
  std::vector<VertexId> bparent;
  for (std::size_t i = 0; i < hops.size(); ++i) {
    if (i == 0 || hops[i - 1].first != hops[i].first) bfs(g, hops[i].first, bdist, {}, &bparent);
    const auto path = trace_path(bparent, hops[i].first, hops[i].second);
    std::uint64_t cliques = 0;
    for (auto e : o.path_edges(path)) {
      red.keep[e] = 1;
      if (g.is_clique(e)) ++cliques;
    }
    red.max_clique_per_hop = std::max(red.max_clique_per_hop, cliques);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (red.keep[e] && g.is_clique(e)) ++red.clique_edges;
  red.spanner_distance = pair_distances(g, pairs, red.keep);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (red.spanner_distance[i] != red.emulator_distance[i]) {
      ++red.mismatches;
      if (!red.mismatch_witness) red.mismatch_witness = i;
    }
  return red;
}

// ---------------------------------------------------------------------------
// Parameter balancing

using Exponent = boost::rational<std::int64_t>;

struct ParamSuggestion {
  std::string application;
  std::int64_t D = 0;
  std::int64_t r = 0;
  boost::multiprecision::cpp_int predicted_n;
  std::int64_t lower_bound = 0;  // diameter or stretch forced at these parameters
  Exponent exponent;             // stated: quantity = Omega(n^exponent)
  Exponent derived_exponent;     // from balancing the Theta counts exactly
};

inline const std::vector<std::string>& applications() {
  static const std::vector<std::string> apps{"shortcut-galt2", "shortcut-galt3", "spanner", "emulator"};
  return apps;
}

/// r per application: round(D^{3/2}), round(D^{3/4}), round(D^{3/2}), D^3,
/// floored at 1. n comes from the exact count formulas.
inline ParamSuggestion suggest_params(const std::string& application, std::int64_t D) {
  if (D < 1) throw std::invalid_argument("D must be >= 1");
  using boost::multiprecision::cpp_int;
  ParamSuggestion s;
  s.application = application;
  s.D = D;
  auto round_pow = [&](double e) { return std::max<std::int64_t>(1, std::llround(std::pow(static_cast<double>(D), e))); };
  // n = Theta(D^(a + b*rho)) with r = D^rho; the forced quantity is Theta(D).
  Exponent rho, a, b;
  if (application == "shortcut-galt2") {
    s.r = round_pow(1.5);
    const cpp_int l = 3 * D * s.r;
    s.predicted_n = (2 * D + 1) * l * l * l;
    s.lower_bound = 2 * D;
    s.exponent = Exponent(2, 17);
    rho = Exponent(3, 2), a = 4, b = 3;
  } else if (application == "shortcut-galt3") {
    s.r = round_pow(0.75);
    const cpp_int l = 3 * D * s.r;
    s.predicted_n = (3 * D + 1) * l * l * l * l;
    s.lower_bound = 3 * D - static_cast<std::int64_t>(positive_hull(s.r).size());
    s.exponent = Exponent(1, 8);
    rho = Exponent(3, 4), a = 5, b = 4;
  } else if (application == "spanner" || application == "emulator") {
    const bool spanner = application == "spanner";
    s.r = spanner ? round_pow(1.5) : D * D * D;
    s.predicted_n = obstacle_counts(D, s.r).n;
    s.lower_bound = 2 * D;
    s.exponent = spanner ? Exponent(2, 21) : Exponent(2, 29);
    rho = spanner ? Exponent(3, 2) : Exponent(3);
    a = 5, b = Exponent(11, 3);
  } else {
    throw std::invalid_argument("unknown application: " + application);
  }
  s.derived_exponent = Exponent(1) / (a + b * rho);
  return s;
}

inline std::string to_string(const Exponent& e) {
  return std::to_string(e.numerator()) + "/" + std::to_string(e.denominator());
}

}  // namespace obstructor
