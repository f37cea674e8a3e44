#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "obstructor/lattice_hull.hpp"

namespace obstructor {

using VertexId = std::uint64_t;
using PairId = std::uint64_t;

inline constexpr int kMaxCoordinates = 12;
inline constexpr std::uint64_t kDefaultVertexBudget = 2'000'000;
inline constexpr std::uint64_t kExplicitAdjacencyLimit = 1'000'000;

using Coords = std::array<std::int64_t, kMaxCoordinates>;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { g0, galt2, galt3, galt_general };

inline std::string family_tag(Family f, int k) {
  switch (f) {
    case Family::g0: return "G0";
    case Family::galt2: return "GALT2";
    case Family::galt3: return "GALT3";
    case Family::galt_general: return "GALTGEN(" + std::to_string(k) + ")";
  }
  return "?";
}

// Inverse of family_tag; returns the family and its coordinate count.
inline std::pair<Family, int> parse_family_tag(const std::string& tag) {
  if (tag == "G0") return {Family::g0, 2};
  if (tag == "GALT2") return {Family::galt2, 3};
  if (tag == "GALT3") return {Family::galt3, 4};
  if (tag.rfind("GALTGEN(", 0) == 0 && tag.back() == ')') {
    int k = std::stoi(tag.substr(8, tag.size() - 9));
    return {Family::galt_general, k};
  }
  throw std::invalid_argument("unknown family tag: " + tag);
}

/// Shape of a layered family. Vertices of each layer are the points of
/// (Z/LZ)^k with L = 3*D*r; there are (k-1)*D + 1 layers.
struct GraphParams {
  std::int64_t D = 0;
  std::int64_t r = 0;
  int k = 0;
  std::int64_t L = 0;
  std::int64_t layers = 0;

  static GraphParams make(int k, std::int64_t D, std::int64_t r) {
    if (D < 1) throw std::invalid_argument("D must be >= 1");
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (k < 2 || k > kMaxCoordinates)
      throw std::invalid_argument("coordinate count k must be in [2, " + std::to_string(kMaxCoordinates) + "]");
    return GraphParams{D, r, k, 3 * D * r, static_cast<std::int64_t>(k - 1) * D + 1};
  }
  int step_kinds() const { return k - 1; }
  friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

// Multiplication that saturates at uint64 max.
inline std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t pow_sat(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = mul_sat(out, base);
  return out;
}

struct CriticalPair {
  VertexId source = 0;
  VertexId target = 0;
  PairId id = 0;
  std::vector<std::int64_t> base;     // x in (Z/LZ)^k
  std::vector<std::size_t> generators;  // hull indices, one per step kind
};

struct CriticalPath {
  CriticalPair pair;
  std::vector<VertexId> vertices;  // one per layer
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

struct BuildOptions {
  std::uint64_t vertex_budget = kDefaultVertexBudget;
  std::uint64_t explicit_limit = kExplicitAdjacencyLimit;
};

/// A strictly layered digraph over (Z/LZ)^k. Step i (from layer i to i+1)
/// has kind p = i mod (k-1) and adds a hull vector to coordinates (p, p+1).
/// Critical pair ids are x * h^(k-1) + t where x is the layer-0 index of the
/// source and t packs the generator tuple in base h (kind 0 least significant).
///
/// Vertex id codec: id = layer * L^k + sum_j x_j * L^j.
class LayeredGraph {
 public:
  LayeredGraph() = default;

  static LayeredGraph build(Family family, int k, std::int64_t D, std::int64_t r,
                            const BuildOptions& opts = {}) {
    LayeredGraph g(family, GraphParams::make(k, D, r), positive_hull(r), opts.vertex_budget);
    if (g.vertex_count() <= opts.explicit_limit) g.materialize();
    return g;
  }

  // Graph with an arbitrary explicit edge set over the family's vertex space
  // (used for files, possibly tampered).
  static LayeredGraph from_edges(Family family, const GraphParams& params,
                                 const std::vector<std::pair<VertexId, VertexId>>& edges,
                                 std::uint64_t vertex_budget = kDefaultVertexBudget) {
    LayeredGraph g(family, GraphParams::make(params.k, params.D, params.r), positive_hull(params.r), vertex_budget);
    if (!(g.params_ == params)) throw std::invalid_argument("graph params are inconsistent (L or layers)");
    const std::uint64_t n = g.vertex_count();
    std::vector<std::uint64_t> degree(n + 1, 0);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw std::out_of_range("edge endpoint outside the vertex range");
      if (g.layer_of(v) != g.layer_of(u) + 1) throw std::invalid_argument("edge does not join adjacent layers");
      ++degree[u + 1];
    }
    for (std::uint64_t i = 0; i < n; ++i) degree[i + 1] += degree[i];
    g.offsets_ = degree;
    g.targets_.assign(edges.size(), 0);
    std::vector<std::uint64_t> fill(degree.begin(), degree.end() - 1);
    for (auto [u, v] : edges) g.targets_[fill[u]++] = v;
    for (std::uint64_t u = 0; u < n; ++u) std::sort(g.targets_.begin() + g.offsets_[u], g.targets_.begin() + g.offsets_[u + 1]);
    g.explicit_ = true;
    return g;
  }

  Family family() const { return family_; }
  std::string tag() const { return family_tag(family_, params_.k); }
  const GraphParams& params() const { return params_; }
  const HullSet& hull() const { return hull_; }
  std::size_t hull_size() const { return hull_.size(); }
  bool is_explicit() const { return explicit_; }

  std::uint64_t layer_size() const { return layer_size_; }
  std::uint64_t vertex_count() const { return static_cast<std::uint64_t>(params_.layers) * layer_size_; }
  std::uint64_t edge_count() const {
    if (explicit_) return targets_.size();
    return static_cast<std::uint64_t>(params_.layers - 1) * layer_size_ * hull_.size();
  }
  std::uint64_t tuples_per_source() const { return tuples_; }
  std::uint64_t pair_count() const { return layer_size_ * tuples_; }
  std::int64_t last_layer() const { return params_.layers - 1; }

  std::int64_t layer_of(VertexId v) const { return static_cast<std::int64_t>(v / layer_size_); }
  std::uint64_t coord_index(VertexId v) const { return v % layer_size_; }

  VertexId vertex_id(std::int64_t layer, const Coords& x) const {
    std::uint64_t idx = 0;
    for (int j = params_.k - 1; j >= 0; --j) idx = idx * static_cast<std::uint64_t>(params_.L) + static_cast<std::uint64_t>(x[j]);
    return static_cast<VertexId>(layer) * layer_size_ + idx;
  }
  Coords coords_of(VertexId v) const {
    Coords x{};
    std::uint64_t idx = coord_index(v);
    for (int j = 0; j < params_.k; ++j) {
      x[j] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(params_.L));
      idx /= static_cast<std::uint64_t>(params_.L);
    }
    return x;
  }

  int step_kind(std::int64_t layer) const { return static_cast<int>(layer % params_.step_kinds()); }

  // Target of the rule-generated edge leaving v with hull vector index g.
  VertexId rule_successor(VertexId v, std::size_t g) const {
    const std::int64_t layer = layer_of(v);
    Coords x = coords_of(v);
    const int p = step_kind(layer);
    x[p] = mod(x[p] + hull_[g][0]);
    x[p + 1] = mod(x[p + 1] + hull_[g][1]);
    return vertex_id(layer + 1, x);
  }
  VertexId rule_predecessor(VertexId v, std::size_t g) const {
    const std::int64_t layer = layer_of(v);
    Coords x = coords_of(v);
    const int p = step_kind(layer - 1);
    x[p] = mod(x[p] - hull_[g][0]);
    x[p + 1] = mod(x[p + 1] - hull_[g][1]);
    return vertex_id(layer - 1, x);
  }

  template <class F>
  void for_each_out(VertexId v, F&& f) const {
    if (explicit_) {
      for (auto i = offsets_[v]; i < offsets_[v + 1]; ++i) f(targets_[i]);
      return;
    }
    if (layer_of(v) >= last_layer()) return;
    for (std::size_t g = 0; g < hull_.size(); ++g) f(rule_successor(v, g));
  }

  std::vector<VertexId> out_neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for_each_out(v, [&](VertexId w) { out.push_back(w); });
    return out;
  }

  // Rule-based predecessors; only meaningful for built (untampered) graphs.
  std::vector<VertexId> rule_in_neighbors(VertexId v) const {
    std::vector<VertexId> out;
    if (layer_of(v) == 0) return out;
    for (std::size_t g = 0; g < hull_.size(); ++g) out.push_back(rule_predecessor(v, g));
    return out;
  }

  std::size_t out_degree(VertexId v) const {
    if (explicit_) return offsets_[v + 1] - offsets_[v];
    return layer_of(v) >= last_layer() ? 0 : hull_.size();
  }

  bool has_edge(VertexId u, VertexId v) const {
    if (u >= vertex_count() || v >= vertex_count()) return false;
    if (explicit_) return std::binary_search(targets_.begin() + offsets_[u], targets_.begin() + offsets_[u + 1], v);
    if (layer_of(v) != layer_of(u) + 1 || layer_of(u) >= last_layer()) return false;
    for (std::size_t g = 0; g < hull_.size(); ++g)
      if (rule_successor(u, g) == v) return true;
    return false;
  }

  // Edges by ascending source; explicit lists are sorted by target, generated
  // ones follow hull order.
  template <class F>
  void for_each_edge(F&& f) const {
    for (VertexId u = 0; u < vertex_count(); ++u) for_each_out(u, [&](VertexId v) { f(u, v); });
  }

  // --- critical pairs ---------------------------------------------------

  std::vector<std::size_t> generators_of(std::uint64_t tuple) const {
    std::vector<std::size_t> g(static_cast<std::size_t>(params_.step_kinds()));
    for (auto& c : g) {
      c = static_cast<std::size_t>(tuple % hull_.size());
      tuple /= hull_.size();
    }
    return g;
  }
  std::uint64_t tuple_of(std::span<const std::size_t> generators) const {
    std::uint64_t t = 0;
    for (auto it = generators.rbegin(); it != generators.rend(); ++it) t = t * hull_.size() + *it;
    return t;
  }

  // Vertex at `layer` on the critical path that starts at base index x with
  // generator tuple t.
  VertexId path_vertex(std::uint64_t base_index, std::uint64_t tuple, std::int64_t layer) const {
    Coords x = coords_of(base_index);
    add_steps(x, tuple, layer, +1);
    return vertex_id(layer, x);
  }
  VertexId path_vertex(PairId pair, std::int64_t layer) const {
    return path_vertex(pair / tuples_, pair % tuples_, layer);
  }

  void path_vertices(PairId pair, std::vector<VertexId>& out) const {
    out.resize(static_cast<std::size_t>(params_.layers));
    const std::uint64_t base = pair / tuples_;
    const auto gens = generators_of(pair % tuples_);
    Coords x = coords_of(base);
    out[0] = vertex_id(0, x);
    for (std::int64_t i = 0; i + 1 < params_.layers; ++i) {
      const int p = step_kind(i);
      const auto& g = hull_[gens[p]];
      x[p] = mod(x[p] + g[0]);
      x[p + 1] = mod(x[p + 1] + g[1]);
      out[static_cast<std::size_t>(i + 1)] = vertex_id(i + 1, x);
    }
  }

  // Id of the critical path with generator tuple t passing through v.
  PairId pair_through(VertexId v, std::uint64_t tuple) const {
    Coords x = coords_of(v);
    add_steps(x, tuple, layer_of(v), -1);
    return vertex_id(0, x) * tuples_ + tuple;
  }

  // Closed-form endpoint: y_i = x_i + D*g^(i-1)_2 + D*g^(i)_1.
  VertexId pair_target(PairId pair) const { return path_vertex(pair, last_layer()); }
  VertexId pair_source(PairId pair) const { return pair / tuples_; }

  CriticalPair pair(PairId id) const {
    if (id >= pair_count()) throw std::out_of_range("critical pair id out of range");
    CriticalPair cp;
    cp.id = id;
    cp.source = pair_source(id);
    cp.target = pair_target(id);
    Coords x = coords_of(cp.source);
    cp.base.assign(x.begin(), x.begin() + params_.k);
    cp.generators = generators_of(id % tuples_);
    return cp;
  }

  // Locates the pair with the given base point and generator vectors.
  PairId pair_id(std::span<const std::int64_t> base, std::span<const Vec2> generators) const {
    if (static_cast<int>(base.size()) != params_.k || static_cast<int>(generators.size()) != params_.step_kinds())
      throw std::invalid_argument("generator shape does not match the family");
    std::vector<std::size_t> idx;
    for (const auto& g : generators) {
      auto i = hull_.index_of(g);
      if (i == hull_.size()) throw std::invalid_argument("generator " + format_vec(g) + " is not in the hull set");
      idx.push_back(i);
    }
    Coords x{};
    for (int j = 0; j < params_.k; ++j) {
      if (base[j] < 0 || base[j] >= params_.L) throw std::invalid_argument("base point coordinate out of range");
      x[j] = base[j];
    }
    return vertex_id(0, x) * tuples_ + tuple_of(idx);
  }

  CriticalPath critical_path(PairId id) const {
    CriticalPath path;
    path.pair = pair(id);
    path_vertices(id, path.vertices);
    return path;
  }

  // Number of steps of kind p taken before reaching `layer`.
  std::int64_t steps_before(int p, std::int64_t layer) const {
    if (layer <= p) return 0;
    return (layer - 1 - p) / params_.step_kinds() + 1;
  }

 private:
  LayeredGraph(Family family, GraphParams params, HullSet hull, std::uint64_t vertex_budget)
      : family_(family), params_(params), hull_(std::move(hull)) {
    layer_size_ = pow_sat(static_cast<std::uint64_t>(params_.L), params_.k);
    const std::uint64_t n = mul_sat(static_cast<std::uint64_t>(params_.layers), layer_size_);
    if (n > vertex_budget)
      throw BudgetExceeded(family_tag(family, params_.k) + "(D=" + std::to_string(params_.D) + ", r=" +
                           std::to_string(params_.r) + ") needs " +
                           (n == std::numeric_limits<std::uint64_t>::max() ? std::string("overflowing") : std::to_string(n)) +
                           " vertices, budget is " + std::to_string(vertex_budget));
    tuples_ = pow_sat(hull_.size(), params_.step_kinds());
  }

  std::int64_t mod(std::int64_t a) const {
    a %= params_.L;
    return a < 0 ? a + params_.L : a;
  }

  void add_steps(Coords& x, std::uint64_t tuple, std::int64_t layer, int sign) const {
    for (int p = 0; p < params_.step_kinds(); ++p) {
      const auto& g = hull_[tuple % hull_.size()];
      tuple /= hull_.size();
      const std::int64_t n = steps_before(p, layer) * sign;
      x[p] = mod(x[p] + n * g[0]);
      x[p + 1] = mod(x[p + 1] + n * g[1]);
    }
  }

  void materialize() {
    const std::uint64_t n = vertex_count();
    offsets_.assign(n + 1, 0);
    targets_.clear();
    targets_.reserve(static_cast<std::size_t>(edge_count()));
    for (VertexId u = 0; u < n; ++u) {
      offsets_[u] = targets_.size();
      if (layer_of(u) < last_layer())
        for (std::size_t g = 0; g < hull_.size(); ++g) targets_.push_back(rule_successor(u, g));
    }
    offsets_[n] = targets_.size();
    for (VertexId u = 0; u < n; ++u) std::sort(targets_.begin() + offsets_[u], targets_.begin() + offsets_[u + 1]);
    explicit_ = true;
  }

  Family family_ = Family::g0;
  GraphParams params_;
  HullSet hull_;
  std::uint64_t layer_size_ = 0;
  std::uint64_t tuples_ = 0;
  bool explicit_ = false;
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> targets_;
};

/// G0(D, r): D+1 layers over (Z/3DrZ)^2, one edge per hull vector.
inline LayeredGraph build_g0(std::int64_t D, std::int64_t r, const BuildOptions& opts = {}) {
  return LayeredGraph::build(Family::g0, 2, D, r, opts);
}

// Critical path of a G0 pair given as (base point, generator vector).
inline CriticalPath g0_critical_path(const LayeredGraph& g, std::span<const std::int64_t> base, const Vec2& gamma) {
  if (g.params().k != 2) throw std::invalid_argument("g0_critical_path expects a G0 graph");
  const Vec2 gens[1] = {gamma};
  return g.critical_path(g.pair_id(base, gens));
}

}  // namespace obstructor
