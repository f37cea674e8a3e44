#include <gtest/gtest.h>

#include <set>

#include "obstructor/obstructor.hpp"
#include "support.hpp"

using namespace obstructor;
namespace ts = testing_support;

namespace {

VertexId encode(const LayeredGraph& g, std::int64_t layer, const std::vector<std::int64_t>& x) {
  const std::int64_t L = g.params().L;
  VertexId id = 0, place = 1;
  for (auto c : x) {
    id += static_cast<VertexId>(((c % L) + L) % L) * place;
    place *= static_cast<VertexId>(L);
  }
  return static_cast<VertexId>(layer) * place + id;
}

// Edges straight from the rule: step i moves coordinates (p, p+1) with p = i mod (k-1).
std::set<std::pair<VertexId, VertexId>> rule_edges(const LayeredGraph& g) {
  const auto& p = g.params();
  std::set<std::pair<VertexId, VertexId>> out;
  std::vector<std::int64_t> x(p.k, 0);
  for (std::int64_t layer = 0; layer + 1 < p.layers; ++layer) {
    const int kind = p.k == 2 ? 0 : static_cast<int>(layer % (p.k - 1));
    std::fill(x.begin(), x.end(), 0);
    while (true) {
      for (const auto& gamma : g.hull().vectors) {
        auto y = x;
        y[kind] += gamma[0];
        y[kind + 1] += gamma[1];
        out.emplace(encode(g, layer, x), encode(g, layer + 1, y));
      }
      int pos = 0;
      while (pos < p.k && ++x[pos] == p.L) x[pos++] = 0;
      if (pos == p.k) break;
    }
  }
  return out;
}

// y_i = x_i + D*gamma^{i-1}_2 + D*gamma^i_1 with gamma^0 = gamma^k = 0.
VertexId closed_form_target(const LayeredGraph& g, const std::vector<std::int64_t>& x, const std::vector<Vec2>& gens) {
  const int k = g.params().k;
  const std::int64_t D = g.params().D;
  std::vector<std::int64_t> y = x;
  for (int i = 0; i < k; ++i) {
    if (i >= 1) y[i] += D * gens[i - 1][1];
    if (i < k - 1) y[i] += D * gens[i][0];
  }
  return encode(g, g.last_layer(), y);
}

}  // namespace

TEST(GraphParams, Shape) {
  const auto p = GraphParams::make(3, 2, 5);
  EXPECT_EQ(p.L, 30);
  EXPECT_EQ(p.layers, 5);
  EXPECT_THROW(GraphParams::make(3, 0, 1), std::invalid_argument);
  EXPECT_THROW(GraphParams::make(3, 1, 0), std::invalid_argument);
  EXPECT_THROW(GraphParams::make(1, 1, 1), std::invalid_argument);
}

TEST(BaseGraph, G0Counts) {
  auto g = build_g0(1, 1);
  EXPECT_EQ(g.vertex_count(), 18u);
  EXPECT_EQ(g.edge_count(), 18u);
  EXPECT_EQ(g.pair_count(), 18u);
  g = build_g0(2, 1);
  EXPECT_EQ(g.vertex_count(), 108u);
  EXPECT_EQ(g.edge_count(), 144u);
  EXPECT_EQ(g.pair_count(), 72u);
  EXPECT_EQ(g.tag(), "G0");
}

TEST(BaseGraph, G0PathExample) {
  const auto g = build_g0(2, 1);
  const std::int64_t x[2] = {0, 0};
  const auto path = g0_critical_path(g, x, Vec2{1, 0});
  ASSERT_EQ(path.vertices.size(), 3u);
  EXPECT_EQ(path.vertices[0], encode(g, 0, {0, 0}));
  EXPECT_EQ(path.vertices[1], encode(g, 1, {1, 0}));
  EXPECT_EQ(path.vertices[2], encode(g, 2, {2, 0}));
  EXPECT_EQ(count_paths(g, path.vertices.front(), path.vertices.back()), 1);

  const auto one = build_g0(1, 1);
  const auto short_path = g0_critical_path(one, x, Vec2{0, 1});
  EXPECT_EQ(short_path.vertices.size(), 2u);
}

TEST(BaseGraph, RejectsGeneratorsOutsideHull) {
  const auto g = build_g0(2, 2);
  const std::int64_t x[2] = {0, 0};
  EXPECT_THROW(g0_critical_path(g, x, Vec2{1, 1}), std::invalid_argument);
  const auto galt = build_galt2(1, 1);
  EXPECT_THROW(g0_critical_path(galt, x, Vec2{1, 0}), std::invalid_argument);
}

TEST(BaseGraph, VertexCodecRoundTrip) {
  const auto g = build_galt3(1, 2);
  for (VertexId v = 0; v < g.vertex_count(); v += 97) {
    const auto c = g.coords_of(v);
    EXPECT_EQ(g.vertex_id(g.layer_of(v), c), v);
    std::vector<std::int64_t> x(c.begin(), c.begin() + 4);
    EXPECT_EQ(encode(g, g.layer_of(v), x), v);
  }
}

TEST(BaseGraph, EdgesMatchRule) {
  for (const auto& g : {build_g0(2, 2), build_g0(3, 1), build_galt2(1, 1), build_galt2(2, 1), build_galt2(1, 2),
                        build_galt3(1, 1), build_galt_general(5, 1, 1)})
    EXPECT_EQ(ts::edge_set(g), rule_edges(g)) << g.tag();
}

TEST(BaseGraph, ImplicitAdjacencyMatchesExplicit) {
  BuildOptions lazy;
  lazy.explicit_limit = 0;
  const auto a = build_galt2(2, 2), b = build_galt2(2, 2, lazy);
  EXPECT_TRUE(a.is_explicit());
  EXPECT_FALSE(b.is_explicit());
  EXPECT_EQ(ts::edge_set(a), ts::edge_set(b));
}

TEST(BaseGraph, BudgetRejection) {
  BuildOptions tight;
  tight.vertex_budget = 1000;
  EXPECT_THROW(build_galt2(2, 1, tight), BudgetExceeded);
  EXPECT_NO_THROW(build_galt2(1, 1, tight));
  EXPECT_THROW(build_galt3(40, 40), BudgetExceeded);
}

TEST(BaseGraph, FromEdgesValidates) {
  const auto p = GraphParams::make(2, 1, 1);
  EXPECT_THROW(LayeredGraph::from_edges(Family::g0, p, {{0, 100}}), std::out_of_range);
  EXPECT_THROW(LayeredGraph::from_edges(Family::g0, p, {{0, 1}}), std::invalid_argument);
  auto bad = p;
  bad.L = 4;
  EXPECT_THROW(LayeredGraph::from_edges(Family::g0, bad, {}), std::invalid_argument);
}

TEST(BaseGraph, FamilyTags) {
  EXPECT_EQ(parse_family_tag("GALT3").second, 4);
  EXPECT_EQ(parse_family_tag("GALTGEN(7)").second, 7);
  EXPECT_EQ(build_galt_general(6, 1, 1).tag(), "GALTGEN(6)");
  EXPECT_THROW(parse_family_tag("G9"), std::invalid_argument);
}

TEST(Alternation, Counts) {
  auto g = build_galt2(1, 1);
  EXPECT_EQ(g.vertex_count(), 81u);
  EXPECT_EQ(g.edge_count(), 108u);
  EXPECT_EQ(g.pair_count(), 108u);
  g = build_galt3(1, 1);
  EXPECT_EQ(g.vertex_count(), 324u);
  EXPECT_EQ(g.edge_count(), 486u);
  EXPECT_EQ(g.pair_count(), 648u);
  g = build_galt_general(5, 1, 1);
  EXPECT_EQ(g.vertex_count(), 1215u);
  EXPECT_EQ(g.pair_count(), 3888u);
}

TEST(Alternation, GeneralReproducesNamedFamilies) {
  EXPECT_EQ(ts::edge_set(build_galt_general(3, 2, 1)), ts::edge_set(build_galt2(2, 1)));
  EXPECT_EQ(ts::edge_set(build_galt_general(3, 1, 3)), ts::edge_set(build_galt2(1, 3)));
  EXPECT_EQ(ts::edge_set(build_galt_general(4, 1, 2)), ts::edge_set(build_galt3(1, 2)));
  const auto a = build_galt_general(4, 2, 1), b = build_galt3(2, 1);
  ASSERT_EQ(a.pair_count(), b.pair_count());
  for (PairId id = 0; id < a.pair_count(); id += 7) {
    EXPECT_EQ(a.pair_source(id), b.pair_source(id));
    EXPECT_EQ(a.pair_target(id), b.pair_target(id));
  }
  EXPECT_THROW(build_galt_general(2, 1, 1), std::invalid_argument);
}

TEST(Alternation, EndpointsFollowClosedForm) {
  for (const auto& g : {build_g0(3, 2), build_galt2(2, 2), build_galt3(1, 2), build_galt_general(5, 1, 2)}) {
    std::set<std::pair<VertexId, VertexId>> endpoints;
    for (PairId id = 0; id < g.pair_count(); ++id) {
      const auto p = g.pair(id);
      std::vector<Vec2> gens;
      for (auto gi : p.generators) gens.push_back(g.hull()[gi]);
      ASSERT_EQ(p.source, encode(g, 0, p.base));
      ASSERT_EQ(p.target, closed_form_target(g, p.base, gens)) << g.tag() << " pair " << id;
      ASSERT_EQ(g.pair_id(p.base, gens), id);
      endpoints.emplace(p.source, p.target);
    }
    EXPECT_EQ(endpoints.size(), g.pair_count()) << g.tag();
  }
}

TEST(Alternation, PathsAreUniqueByDfs) {
  for (const auto& g : {build_g0(2, 1), build_g0(3, 2), build_galt2(1, 1), build_galt2(2, 1), build_galt3(1, 1),
                        build_galt_general(5, 1, 1)}) {
    for (PairId id = 0; id < g.pair_count(); ++id) {
      const auto path = critical_path_of(g, g.pair(id));
      ASSERT_EQ(path.length(), static_cast<std::size_t>(g.last_layer()));
      for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) ASSERT_TRUE(g.has_edge(path.vertices[i], path.vertices[i + 1]));
      ASSERT_EQ(ts::dfs_path_count(g, path.vertices.front(), path.vertices.back()), 1u) << g.tag() << " " << id;
    }
  }
}

TEST(Alternation, CriticalPathOfRejectsForeignPairs) {
  const auto g = build_galt2(1, 2);
  auto p = g.pair(3);
  p.generators.push_back(0);
  EXPECT_THROW(critical_path_of(g, p), std::invalid_argument);
  p = g.pair(3);
  p.generators[0] = 99;
  EXPECT_THROW(critical_path_of(g, p), std::invalid_argument);
  p = g.pair(3);
  p.target += 1;
  EXPECT_THROW(critical_path_of(g, p), std::invalid_argument);
  const Vec2 off[2] = {{1, 1}, {0, 2}};
  const std::int64_t x[3] = {0, 0, 0};
  EXPECT_THROW(g.pair_id(x, off), std::invalid_argument);
}

TEST(Alternation, ExponentFunction) {
  EXPECT_EQ(exponent_f(3), Rational(17, 2));
  EXPECT_EQ(exponent_f(4), Rational(8));
  EXPECT_EQ(exponent_f(5), Rational(51, 6));
  EXPECT_EQ(exponent_f_argmin(3, 12), 4);
  EXPECT_NEAR(exponent_f_real_minimizer(), 3.7320508, 1e-6);
  for (std::int64_t k = 3; k <= 40; ++k)
    EXPECT_EQ(exponent_f(k), Rational(2 * k * k + k - 4, 2 * (k - 2))) << k;
  EXPECT_THROW(exponent_f(2), std::invalid_argument);
  EXPECT_THROW(exponent_f(0), std::invalid_argument);
}
