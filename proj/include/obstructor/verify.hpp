#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "obstructor/alternation.hpp"
#include "obstructor/io.hpp"
#include "obstructor/obstacle.hpp"
#include "obstructor/oracles.hpp"

namespace obstructor {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;
inline constexpr std::uint64_t kDefaultComparisonCap = 10'000'000;
inline constexpr std::uint64_t kDefaultIntersectionSample = 100'000;
inline constexpr std::uint64_t kIncidenceWorkCap = 200'000'000;
inline constexpr std::uint64_t kExhaustiveSourceCap = 100'000;

inline Json params_json(const GraphParams& p) {
  return Json{{"D", p.D}, {"r", p.r}, {"k", p.k}, {"L", p.L}, {"layers", p.layers}};
}

inline Json make_record(const std::string& check, const std::string& family, const GraphParams& p,
                        const std::string& mode, std::uint64_t seed, bool pass, Json result, Json witness = nullptr) {
  result["pass"] = pass;
  return Json{{"schema", kReportSchema}, {"check", check},   {"family", family}, {"params", params_json(p)},
              {"mode", mode},            {"seed", seed},     {"result", std::move(result)},
              {"witness", std::move(witness)}};
}

inline bool record_passed(const Json& rec) { return rec.at("result").at("pass").get<bool>(); }

inline std::string big_string(const BigCount& c) { return c.str(); }

struct VerifyOptions {
  std::string mode = "auto";  // auto | exhaustive | sampled
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t comparison_cap = kDefaultComparisonCap;
  std::uint64_t intersection_sample = kDefaultIntersectionSample;
  std::uint64_t unique_sample = 1000;
};

inline Json pair_witness(const LayeredGraph& g, PairId id) {
  const auto p = g.pair(id);
  Json gens = Json::array();
  for (auto gi : p.generators) gens.push_back({g.hull()[gi][0], g.hull()[gi][1]});
  return Json{{"pair", id}, {"source", p.source}, {"target", p.target}, {"base", p.base}, {"generators", gens}};
}

/// Structural checks of a layered family instance, one record each: exact
/// counts, degree regularity, endpoint bijectivity, unique critical paths,
/// edge coverage, pairwise intersections and subpath multiplicity.
inline std::vector<Json> verify_layered(const LayeredGraph& g, const VerifyOptions& opts = {}) {
  std::vector<Json> out;
  const auto& p = g.params();
  const std::string fam = g.tag();
  const std::uint64_t h = g.hull_size();
  const int k = p.k;

  {
    const BigCount L = p.L;
    BigCount layer = 1;
    for (int i = 0; i < k; ++i) layer *= L;
    const BigCount n = layer * p.layers;
    const BigCount m = layer * (p.layers - 1) * h;
    BigCount pairs = layer;
    for (int i = 0; i < k - 1; ++i) pairs *= h;
    const bool pass = n == g.vertex_count() && m == g.edge_count() && pairs == g.pair_count();
    out.push_back(make_record("counts", fam, p, "exhaustive", opts.seed, pass,
                              Json{{"n", g.vertex_count()},
                                   {"m", g.edge_count()},
                                   {"pairs", g.pair_count()},
                                   {"hull_size", h},
                                   {"expected_n", big_string(n)},
                                   {"expected_m", big_string(m)},
                                   {"expected_pairs", big_string(pairs)}}));
  }
  {
    const auto d = degree_sweep(g);
    Json w = nullptr;
    if (d.witness) w = Json{{"vertex", *d.witness}, {"out_degree", d.witness_degree}};
    out.push_back(make_record("degree", fam, p, "exhaustive", opts.seed, d.pass(),
                              Json{{"expected_out_degree", h}, {"violations", d.violations}}, w));
  }
  {
    const auto e = endpoint_sweep(g);
    Json w = nullptr;
    if (e.witness) w = Json{{"pair_a", e.witness->first}, {"pair_b", e.witness->second}};
    out.push_back(make_record("endpoints", fam, p, "exhaustive", opts.seed, e.pass(),
                              Json{{"pairs", e.pairs}, {"collisions", e.collisions}}, w));
  }
  {
    const bool sampled = opts.mode == "sampled" || (opts.mode == "auto" && g.layer_size() > kExhaustiveSourceCap);
    const auto u = unique_path_sweep(g, sampled, opts.unique_sample, opts.seed);
    Json w = nullptr;
    if (u.witness) {
      w = pair_witness(g, *u.witness);
      w["path_count"] = big_string(u.witness_count);
    }
    out.push_back(make_record("unique_path", fam, p, u.mode, opts.seed, u.pass(),
                              Json{{"checked", u.checked}, {"failures", u.failures}}, w));
  }
  {
    const auto c = coverage_sweep(g);
    Json w = nullptr;
    if (c.witness_edge)
      w = Json{{"edge", {c.witness_edge->first, c.witness_edge->second}}, {"multiplicity", c.witness_multiplicity}};
    else if (c.witness_pair)
      w = pair_witness(g, *c.witness_pair);
    out.push_back(make_record("coverage", fam, p, "exhaustive", opts.seed, c.pass(),
                              Json{{"edges", c.edges},
                                   {"expected_multiplicity", c.expected_multiplicity},
                                   {"bad_edges", c.bad_edges},
                                   {"paths_with_missing_edges", c.missing_path_edges}},
                              w));
  }
  {
    const std::int64_t allowed = k - 2;
    IntersectionSweep s;
    const bool incidence = opts.mode != "sampled" && incidence_workload(g) <= kIncidenceWorkCap;
    if (incidence)
      s = intersection_sweep_incidence(g, allowed);
    else
      s = intersection_sweep_pairwise(g, allowed, opts.mode == "sampled" ? 0 : opts.comparison_cap,
                                      opts.intersection_sample, opts.seed);
    Json hist = Json::object();
    for (const auto& [name, count] : s.histogram) hist[name] = count;
    Json w = nullptr;
    if (s.witness) w = Json{{"pair_a", s.witness->first}, {"pair_b", s.witness->second}, {"class", s.witness_class->name()}};
    out.push_back(make_record("intersection", fam, p, s.mode, opts.seed, s.pass(),
                              Json{{"max_shared_edges_allowed", allowed},
                                   {"max_shared_edges", s.max_shared_length},
                                   {"compared", s.compared},
                                   {"violations", s.violations},
                                   {"histogram", hist}},
                              w));
  }
  {
    // Two-edge sharing for k >= 4; below that the one-edge analogue, which
    // is exactly the coverage multiplicity.
    const std::size_t len = k >= 4 ? 2 : 1;
    const std::uint64_t bound = k >= 4 ? pow_sat(h, k - 3) : pow_sat(h, k - 2);
    const auto m = max_subpath_multiplicity(g, len);
    const bool pass = m.max_count <= bound;
    Json w = nullptr;
    if (!pass) w = Json{{"subpath", m.witness}, {"count", m.max_count}};
    out.push_back(make_record(k >= 4 ? "multiplicity_length2" : "multiplicity_length1", fam, p, "exhaustive", opts.seed,
                              pass,
                              Json{{"subpath_length", len},
                                   {"bound", bound},
                                   {"max_count", m.max_count},
                                   {"distinct_subpaths", m.distinct_subpaths}},
                              w));
  }
  return out;
}

/// Checks that listed pairs agree with the graph's own pair set.
inline Json verify_pair_records(const LayeredGraph& g, const std::vector<PairRecord>& records, std::uint64_t seed) {
  std::uint64_t bad = 0;
  Json w = nullptr;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    bool ok = true;
    try {
      const PairId id = g.pair_id(r.base, r.generators);
      ok = g.pair_source(id) == r.source && g.pair_target(id) == r.target;
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) {
      ++bad;
      if (w.is_null()) w = Json{{"line", i + 2}, {"source", r.source}, {"target", r.target}};
    }
  }
  const bool pass = bad == 0 && records.size() == g.pair_count();
  return make_record("pairs_file", g.tag(), g.params(), "exhaustive", seed, pass,
                     Json{{"records", records.size()}, {"expected", g.pair_count()}, {"inconsistent", bad}}, w);
}

inline std::vector<Json> verify_obstacle_records(const ObstacleGraph& o, std::uint64_t seed) {
  std::vector<Json> out;
  for (const auto& c : verify_obstacle(o)) {
    Json w = nullptr;
    if (!c.pass) w = Json{{"detail", c.detail}};
    out.push_back(make_record(c.name, "GOBS", o.params(), "exhaustive", seed, c.pass,
                              Json{{"n", o.vertex_count()}, {"m", o.edge_count()}, {"pairs", o.pair_count()}}, w));
  }
  return out;
}

}  // namespace obstructor
