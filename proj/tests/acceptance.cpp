#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "obstructor/obstructor.hpp"
#include "support.hpp"

using namespace obstructor;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Notes {
  Outcome out;
  void fail(const std::string& why) {
    if (out.pass) out.detail.clear();
    out.pass = false;
    out.detail += (out.detail.empty() ? "" : "; ") + why;
  }
  void note(const std::string& s) {
    if (out.pass) out.detail += (out.detail.empty() ? "" : "; ") + s;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << v;
  return os.str();
}

std::string instance(const std::string& fam, std::int64_t D, std::int64_t r) {
  return fam + "(" + std::to_string(D) + "," + std::to_string(r) + ")";
}

VerifyOptions exhaustive() {
  VerifyOptions vo;
  vo.mode = "exhaustive";
  return vo;
}

const Json* find_check(const std::vector<Json>& recs, const std::string& name) {
  for (const auto& r : recs)
    if (r.at("check") == name) return &r;
  return nullptr;
}

// All records pass; returns the failing check names otherwise.
std::string failed_checks(const std::vector<Json>& recs) {
  std::string out;
  for (const auto& r : recs)
    if (!record_passed(r)) out += (out.empty() ? "" : ",") + r.at("check").get<std::string>();
  return out;
}

bool histogram_within(const Json& rec, const std::vector<std::string>& allowed) {
  for (const auto& [name, count] : rec.at("result").at("histogram").items())
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end() && count.get<std::uint64_t>() > 0) return false;
  return true;
}

Outcome hull_law() {
  Notes n;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::int64_t> radii;
  for (std::int64_t r = 64; r <= 4096; r *= 2) radii.push_back(r);
  const double slope = hull_growth_exponent(radii);
  if (slope < 0.55 || slope > 0.78) n.fail("slope " + fmt(slope) + " outside [0.55, 0.78]");
  for (std::int64_t r = 1; r <= 3; ++r) {
    const auto h = positive_hull(r);
    if (h.vectors != testing_support::brute_force_hull(r)) n.fail("r=" + std::to_string(r) + " differs from the oracle");
    if (!verify_hull_properties(h).all_pass()) n.fail("r=" + std::to_string(r) + " fails its property checks");
  }
  const double secs = seconds_since(t0);
  if (secs >= 30) n.fail("took " + fmt(secs) + " s");
  n.note("slope=" + fmt(slope) + " over r=64..4096, r=1..3 match the brute-force hull, " + fmt(secs) + " s");
  return n.out;
}

Outcome g0_suite() {
  Notes n;
  double worst = 0;
  for (std::int64_t D = 1; D <= 4; ++D)
    for (std::int64_t r = 1; r <= 4; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto g = build_g0(D, r);
      const auto recs = verify_layered(g, exhaustive());
      const auto* inter = find_check(recs, "intersection");
      const auto* uniq = find_check(recs, "unique_path");
      const std::string id = instance("G0", D, r);
      if (auto f = failed_checks(recs); !f.empty()) n.fail(id + " failed " + f);
      if (inter->at("mode") != "exhaustive" || uniq->at("mode") != "exhaustive") n.fail(id + " was sampled");
      if (!histogram_within(*inter, {"Empty", "SingleVertex"})) n.fail(id + " has a path intersection above one vertex");
      const auto* cov = find_check(recs, "coverage");
      if (cov->at("result").at("expected_multiplicity") != 1) n.fail(id + " coverage multiplicity is not 1");
      const double secs = seconds_since(t0);
      worst = std::max(worst, secs);
      if (secs >= 120) n.fail(id + " took " + fmt(secs) + " s");
    }
  n.note("16 instances, unique paths, exact edge cover, intersections <= 1 vertex, slowest " + fmt(worst) + " s");
  return n.out;
}

Outcome galt2_suite() {
  Notes n;
  std::uint64_t sampled = 0;
  for (std::int64_t D = 1; D <= 3; ++D)
    for (std::int64_t r = 1; r <= 3; ++r) {
      const auto g = build_galt2(D, r);
      const auto recs = verify_layered(g, exhaustive());
      const std::string id = instance("GALT2", D, r);
      if (auto f = failed_checks(recs); !f.empty()) n.fail(id + " failed " + f);
      const auto* inter = find_check(recs, "intersection");
      if (inter->at("mode") != "exhaustive") {
        ++sampled;
        if (inter->at("result").at("compared").get<std::uint64_t>() < 100'000) n.fail(id + " sample below 1e5");
      }
      if (!histogram_within(*inter, {"Empty", "SingleVertex", "SingleEdge"})) n.fail(id + " has an intersection above one edge");
      const std::uint64_t L = g.params().L, h = g.hull_size();
      if (g.vertex_count() != static_cast<std::uint64_t>(2 * D + 1) * L * L * L ||
          g.edge_count() != static_cast<std::uint64_t>(2 * D) * L * L * L * h || g.pair_count() != L * L * L * h * h)
        n.fail(id + " counts differ from the closed forms");
      if (find_check(recs, "endpoints")->at("result").at("collisions") != 0) n.fail(id + " has endpoint collisions");
    }
  n.note("9 instances, unique paths, intersections in {Empty, SingleVertex, SingleEdge}, exact counts, " +
         std::to_string(9 - sampled) + " exhaustive");
  return n.out;
}

Outcome galt3_suite() {
  Notes n;
  std::uint64_t decreases = 0, shortcuts = 0;
  for (std::int64_t D = 1; D <= 2; ++D)
    for (std::int64_t r = 1; r <= 2; ++r) {
      const auto g = build_galt3(D, r);
      const std::string id = instance("GALT3", D, r);
      const auto recs = verify_layered(g, exhaustive());
      if (auto f = failed_checks(recs); !f.empty()) n.fail(id + " failed " + f);
      const auto* inter = find_check(recs, "intersection");
      if (inter->at("mode") != "exhaustive") n.fail(id + " intersections were sampled");
      if (!histogram_within(*inter, {"Empty", "SingleVertex", "SingleEdge", "Path2"}))
        n.fail(id + " has an intersection above Path2");
      const auto m2 = max_length2_multiplicity(g);
      if (m2.max_count > g.hull_size()) n.fail(id + " 2-edge multiplicity " + std::to_string(m2.max_count));
      const auto dmg = damage_sweep(g, true);
      for (auto [gap, mx] : dmg.max_by_gap) {
        const std::uint64_t bound = gap >= 3 ? 1 : g.hull_size();
        if (mx > bound) n.fail(id + " gap " + std::to_string(gap) + " damage " + std::to_string(mx));
      }
      if (!dmg.pass()) n.fail(id + " damage sweep reported violations");
      if (dmg.decrease_checked == 0) n.fail(id + " checked no gap-2 decreases");
      decreases += dmg.decrease_checked;
      shortcuts += dmg.shortcuts;
    }
  n.note("4 instances, intersections <= Path2, 2-edge multiplicity <= h, " + std::to_string(shortcuts) +
         " on-path shortcuts within damage bounds, " + std::to_string(decreases) + " gap-2 decreases of exactly 1");
  return n.out;
}

Outcome general_suite() {
  Notes n;
  std::string longest;
  for (std::int64_t r = 1; r <= 2; ++r) {
    const auto g = build_galt_general(5, 1, r);
    const std::string id = instance("GALTGEN(5)", 1, r);
    const auto recs = verify_layered(g, exhaustive());
    if (auto f = failed_checks(recs); !f.empty()) n.fail(id + " failed " + f);
    const auto* inter = find_check(recs, "intersection");
    if (inter->at("mode") != "exhaustive") n.fail(id + " intersections were sampled");
    if (inter->at("result").at("histogram").contains("NonContiguous")) n.fail(id + " has a non-contiguous intersection");
    if (inter->at("result").at("max_shared_edges").get<std::int64_t>() > 3) n.fail(id + " shares more than 3 edges");
    const std::uint64_t L = g.params().L, h = g.hull_size();
    if (g.pair_count() != L * L * L * L * L * h * h * h * h) n.fail(id + " |P| differs from L^5 h^4");
    longest += (longest.empty() ? "" : ", ") + id + " max shared " + inter->at("result").at("max_shared_edges").dump();
  }
  n.note(longest + "; no guarantee is claimed for k >= 5, reported only");
  return n.out;
}

Outcome shortcut_lemmas() {
  Notes n;
  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t trials = 0;
  for (std::int64_t r : {1, 2}) {
    const auto g = build_galt2(2, r);
    const auto rep = eval_shortcut_budget(g, g.pair_count() - 1);
    trials += rep.trials.size();
    for (const auto& t : rep.trials)
      if (t.diameter != 4) n.fail(instance("GALT2", 2, r) + " " + t.strategy + " trial " + std::to_string(t.trial) +
                                  " diameter " + std::to_string(t.diameter));
  }
  std::string galt3;
  for (std::int64_t D : {1, 2}) {
    const auto g = build_galt3(D, 1);
    ShortcutEvalOptions eo;
    eo.strategies = {"random", "greedy", "folklore", "gap2"};
    const auto rep = eval_shortcut_budget(g, g.pair_count() - 1, eo);
    trials += rep.trials.size();
    std::int64_t lowest = rep.baseline;
    for (const auto& t : rep.trials) lowest = std::min(lowest, t.diameter);
    if (!rep.pass() || lowest < 3 * D - static_cast<std::int64_t>(g.hull_size()))
      n.fail(instance("GALT3", D, 1) + " reached diameter " + std::to_string(lowest));
    galt3 += (galt3.empty() ? "" : ", ") + instance("GALT3", D, 1) + " min " + std::to_string(lowest) +
             " >= " + std::to_string(rep.bound);
  }
  const double secs = seconds_since(t0);
  if (secs >= 300) n.fail("took " + fmt(secs) + " s");
  n.note(std::to_string(trials) + " trials at budget |P|-1; GALT2 diameter 2D in all; " + galt3 + "; " + fmt(secs) + " s");
  return n.out;
}

Outcome obstacle_suite() {
  Notes n;
  std::uint64_t trials = 0;
  std::int64_t min_stretch = -1;
  for (std::int64_t D = 1; D <= 2; ++D)
    for (std::int64_t r = 1; r <= 2; ++r) {
      const auto o = build_gobs(D, r);
      const std::string id = instance("GOBS", D, r);
      for (const auto& c : verify_obstacle(o))
        if (!c.pass) n.fail(id + " " + c.name + ": " + c.detail);
      const auto counts = obstacle_counts(D, r);
      if (counts.n != o.vertex_count() || counts.m != o.edge_count()) n.fail(id + " n/m differ from the formulas");
      // Independent BFS over the raw edge list for a spread of pairs.
      std::vector<std::pair<VertexId, VertexId>> raw;
      for (const auto& e : o.graph().edges()) raw.emplace_back(e.u, e.v);
      const std::int64_t want = 2 * D * D + 2 * D - 1;
      for (PairId id2 = 0; id2 < o.pair_count(); id2 += std::max<std::uint64_t>(1, o.pair_count() / 16)) {
        const auto path = o.critical_path(id2);
        const auto dist = testing_support::naive_bfs(o.vertex_count(), raw, path.front());
        if (static_cast<std::int64_t>(path.size()) - 1 != want || dist[path.back()] != want)
          n.fail(id + " pair " + std::to_string(id2) + " is not at distance " + std::to_string(want));
        if (o.clique_edges_on(path).size() != static_cast<std::size_t>(2 * D - 1))
          n.fail(id + " pair " + std::to_string(id2) + " clique count");
      }
      SpannerAdversaryOptions so;
      so.plan = "per-path";
      so.trials = 50;
      for (const auto& t : spanner_adversary(o, so)) {
        ++trials;
        if (!t.pass || t.designated_stretch < 2 * D)
          n.fail(id + " trial " + std::to_string(t.trial) + " stretch " + std::to_string(t.designated_stretch));
        const std::int64_t rel = t.designated_stretch - 2 * D;
        if (min_stretch < 0 || rel < min_stretch) min_stretch = rel;
      }
    }
  n.note("4 instances, canonical length 2D^2+2D-1 equals BFS distance, 2D-1 clique edges per path, " +
         std::to_string(trials) + " per-path deletion trials with stretch >= 2D (min excess " +
         std::to_string(min_stretch) + ")");
  return n.out;
}

Outcome emulator_reduction() {
  Notes n;
  const auto o = build_gobs(1, 1);
  const auto trials = run_emulator_trials(o, 20, 20, kDefaultSeed);
  std::uint64_t edges = 0, cliques = 0;
  for (const auto& [t, red] : trials) {
    if (red.mismatches != 0) n.fail("trial " + std::to_string(t) + " changed " + std::to_string(red.mismatches) + " distances");
    if (red.clique_edges > 2 * o.D() * red.emulator_edges) n.fail("trial " + std::to_string(t) + " clique edges over 2D|E'|");
    if (!red.pass()) n.fail("trial " + std::to_string(t) + " failed");
    edges += red.emulator_edges;
    cliques += red.clique_edges;
  }
  n.note("20 emulators (" + std::to_string(edges) + " edges total) reduced to spanners with exact critical distances, " +
         std::to_string(cliques) + " clique edges total");
  return n.out;
}

Outcome exponents() {
  Notes n;
  if (exponent_f(3) != Rational(17, 2)) n.fail("f(3)=" + to_string(exponent_f(3)));
  if (exponent_f(4) != Rational(8)) n.fail("f(4)=" + to_string(exponent_f(4)));
  if (exponent_f_argmin(3, 12) != 4) n.fail("argmin " + std::to_string(exponent_f_argmin(3, 12)));
  if (Rational(1) / exponent_f(3) != Rational(2, 17) || Rational(1) / exponent_f(4) != Rational(1, 8))
    n.fail("1/f(k) does not give 2/17 and 1/8");
  const double real = exponent_f_real_minimizer();
  if (!(real > 3.7 && real < 3.8)) n.fail("real minimizer " + fmt(real));
  const std::vector<std::pair<std::string, Exponent>> want{
      {"shortcut-galt2", {2, 17}}, {"shortcut-galt3", {1, 8}}, {"spanner", {2, 21}}, {"emulator", {2, 29}}};
  std::string derived;
  for (const auto& [app, e] : want) {
    const auto s = suggest_params(app, 2);
    if (s.exponent != e) n.fail(app + " exponent " + to_string(s.exponent));
    if (s.derived_exponent != s.exponent) derived += (derived.empty() ? "" : ", ") + app + " balances to " + to_string(s.derived_exponent);
  }
  n.note("f(3)=17/2, f(4)=8, argmin 4, real minimizer " + fmt(real) + "; exponents 2/17, 1/8, 2/21, 2/29" +
         (derived.empty() ? "" : " (" + derived + ")"));
  return n.out;
}

// Serialized outputs of the seeded checks at the current worker count.
std::string seeded_outputs() {
  std::string out;
  {
    VerifyOptions vo;
    for (const auto& g : {build_galt2(2, 2), build_galt3(1, 2)})
      for (const auto& r : verify_layered(g, vo)) out += r.dump() + "\n";
    vo.mode = "sampled";
    vo.intersection_sample = 20'000;
    for (const auto& r : verify_layered(build_galt2(3, 2), vo)) out += r.dump() + "\n";
  }
  {
    const auto g = build_galt2(2, 1);
    const auto rep = eval_shortcut_budget(g, g.pair_count() - 1);
    out += shortcut_eval_json(g, rep, kDefaultSeed).dump(2) + "\n" + csv_text(shortcut_eval_rows(rep));
    const auto g3 = build_galt3(1, 1);
    ShortcutEvalOptions eo;
    eo.strategies = {"random", "greedy", "folklore", "gap2"};
    const auto rep3 = eval_shortcut_budget(g3, g3.pair_count() - 1, eo);
    out += shortcut_eval_json(g3, rep3, kDefaultSeed).dump(2) + "\n" + csv_text(shortcut_eval_rows(rep3));
  }
  {
    const auto o = build_gobs(1, 1);
    for (const std::string plan : {"per-path", "random"}) {
      SpannerAdversaryOptions so;
      so.plan = plan;
      so.trials = plan == "random" ? 5 : 50;
      const auto trials = spanner_adversary(o, so);
      out += spanner_eval_json(o, plan, trials, kDefaultSeed).dump(2) + "\n" + csv_text(spanner_eval_rows(plan, trials));
    }
    const auto em = run_emulator_trials(o, 20, 20, kDefaultSeed);
    out += emulator_eval_json(o, em, kDefaultSeed).dump(2) + "\n" + csv_text(emulator_eval_rows(em));
  }
  return out;
}

Outcome determinism() {
  Notes n;
  set_worker_count(1);
  const auto one = seeded_outputs();
  set_worker_count(8);
  const auto eight = seeded_outputs();
  set_worker_count(0);
  if (one != eight) {
    std::size_t i = 0;
    while (i < one.size() && i < eight.size() && one[i] == eight[i]) ++i;
    n.fail("outputs differ at byte " + std::to_string(i));
  }
  n.note(std::to_string(one.size()) + " bytes of JSON/CSV identical with 1 and 8 workers");
  return n.out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"hull law", hull_law},
      {"G0 suite", g0_suite},
      {"GALT2 suite", galt2_suite},
      {"GALT3 suite", galt3_suite},
      {"generalized k=5", general_suite},
      {"shortcut lemmas", shortcut_lemmas},
      {"obstacle suite", obstacle_suite},
      {"emulator reduction", emulator_reduction},
      {"exponent table", exponents},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " [" << fmt(seconds_since(t0), 1)
              << " s]: " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
