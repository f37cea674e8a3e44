#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "obstructor/obstructor.hpp"

using namespace obstructor;

namespace {

struct FamilyArgs {
  std::string family = "galt2";
  std::int64_t D = 1;
  std::int64_t r = 1;
  int k = 0;
  std::uint64_t vertex_budget = kDefaultVertexBudget;
};

void add_family_options(CLI::App* cmd, FamilyArgs& a, bool with_family = true) {
  if (with_family)
    cmd->add_option("--family", a.family, "g0 | galt2 | galt3 | galt (needs --k)")
        ->check(CLI::IsMember({"g0", "galt2", "galt3", "galt", "G0", "GALT2", "GALT3"}));
  cmd->add_option("--D", a.D, "layer depth parameter")->check(CLI::PositiveNumber);
  cmd->add_option("--r", a.r, "hull radius")->check(CLI::PositiveNumber);
  cmd->add_option("--k", a.k, "coordinate count for --family galt")->check(CLI::Range(3, kMaxCoordinates));
  cmd->add_option("--vertex-budget", a.vertex_budget, "refuse graphs with more vertices");
}

LayeredGraph build_family(const FamilyArgs& a) {
  BuildOptions opts;
  opts.vertex_budget = a.vertex_budget;
  if (a.family == "g0" || a.family == "G0") return build_g0(a.D, a.r, opts);
  if (a.family == "galt2" || a.family == "GALT2") return build_galt2(a.D, a.r, opts);
  if (a.family == "galt3" || a.family == "GALT3") return build_galt3(a.D, a.r, opts);
  if (a.k == 0) throw CLI::ValidationError("--k", "--family galt needs --k");
  return build_galt_general(a.k, a.D, a.r, opts);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  return is;
}

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) std::cout << text;
  else write_file(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Builds lattice-hull layered graphs, alternation and obstacle products, and checks their properties."};
  app.require_subcommand(1);
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  app.add_option("--seed", seed, "master seed")->capture_default_str();
  app.add_option("--threads", threads, "worker cap (overrides OBSTRUCTOR_THREADS)");

  // gen
  auto* gen = app.add_subcommand("gen", "write graph and pair files");
  FamilyArgs gen_args;
  std::string gen_out = "graph";
  bool gen_obs = false;
  add_family_options(gen, gen_args);
  gen->add_flag("--obstacle", gen_obs, "write the obstacle product of GALT2(D, r) instead");
  gen->add_option("--out", gen_out, "output prefix: <out>.graph (or <out>.obs) and <out>.pairs");

  // verify
  auto* verify = app.add_subcommand("verify", "run structural checks and print JSON records");
  FamilyArgs ver_args;
  std::string ver_graph, ver_pairs, ver_obs, ver_out, ver_mode = "auto";
  bool ver_obstacle = false;
  std::uint64_t ver_cap = kDefaultComparisonCap;
  add_family_options(verify, ver_args);
  verify->add_option("--graph", ver_graph, "load the graph from a file instead of building it");
  verify->add_option("--pairs", ver_pairs, "pairs file to check against the graph");
  verify->add_option("--obs", ver_obs, "load an obstacle graph file");
  verify->add_flag("--obstacle", ver_obstacle, "build and check the obstacle product of GALT2(D, r)");
  verify->add_option("--mode", ver_mode)->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  verify->add_option("--budget", ver_cap, "pair-pair comparison cap before sampling");
  verify->add_option("--out", ver_out, "write JSON here instead of stdout");

  // eval
  auto* eval = app.add_subcommand("eval", "adversary evaluations");
  eval->require_subcommand(1);
  eval->fallthrough();
  std::string eval_out, eval_csv;
  eval->add_option("--out", eval_out, "write JSON here instead of stdout");
  eval->add_option("--csv", eval_csv, "also write param,trial,value rows here");

  auto* ev_short = eval->add_subcommand("shortcut", "diameter under budget-limited shortcut sets");
  ev_short->fallthrough();
  FamilyArgs sh_args;
  std::string sh_budget = "max-1", sh_shortcuts;
  std::vector<std::string> sh_strategies{"random", "greedy", "folklore"};
  std::uint64_t sh_trials = 20;
  add_family_options(ev_short, sh_args);
  ev_short->add_option("--budget", sh_budget, "shortcut count or max-1 (= |P| - 1)");
  ev_short->add_option("--strategies", sh_strategies, "random greedy folklore gap2")->delimiter(',');
  ev_short->add_option("--trials", sh_trials);
  ev_short->add_option("--shortcuts", sh_shortcuts, "evaluate a 'u v' shortcut file instead");

  auto* ev_span = eval->add_subcommand("spanner", "stretch after clique-edge deletions in the obstacle graph");
  ev_span->fallthrough();
  FamilyArgs sp_args;
  std::string sp_plan = "per-path", sp_deletions;
  std::uint64_t sp_trials = 1;
  bool sp_any_edge = false;
  add_family_options(ev_span, sp_args, false);
  ev_span->add_option("--plan", sp_plan)->check(CLI::IsMember({"per-path", "random", "none", "file"}));
  ev_span->add_option("--deletions", sp_deletions, "'u v' edges to delete (plan file)");
  ev_span->add_option("--trials", sp_trials);
  ev_span->add_flag("--any-edge", sp_any_edge, "allow deleting non-clique edges with plan file");

  auto* ev_emu = eval->add_subcommand("emulator", "reduce random emulators of the obstacle graph to spanners");
  ev_emu->fallthrough();
  FamilyArgs em_args;
  std::uint64_t em_trials = 1, em_noise = 0;
  add_family_options(ev_emu, em_args, false);
  ev_emu->add_option("--trials", em_trials);
  ev_emu->add_option("--noise", em_noise, "extra random exact-weight edges per emulator");

  auto* ev_sug = eval->add_subcommand("suggest", "balanced parameters for an application");
  ev_sug->fallthrough();
  std::string sug_app = "shortcut-galt2";
  std::int64_t sug_D = 1;
  ev_sug->add_option("--app", sug_app)->check(CLI::IsMember(applications()));
  ev_sug->add_option("--D", sug_D)->check(CLI::PositiveNumber);

  // hull
  auto* hull = app.add_subcommand("hull", "print or check a positive hull set");
  std::int64_t hull_r = 1;
  std::string hull_out, hull_in;
  hull->add_option("--r", hull_r)->check(CLI::PositiveNumber);
  hull->add_option("--out", hull_out, "write the hull file here");
  hull->add_option("--in", hull_in, "verify a hull file instead");

  // fk
  auto* fk = app.add_subcommand("fk", "table of the exponent function f(k)");
  std::int64_t fk_lo = 3, fk_hi = 12;
  fk->add_option("--lo", fk_lo)->check(CLI::Range(3, 1000));
  fk->add_option("--hi", fk_hi)->check(CLI::Range(3, 1000));

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) set_worker_count(threads);

  try {
    if (*gen) {
      if (gen_obs) {
        BuildOptions opts;
        opts.vertex_budget = gen_args.vertex_budget;
        const auto o = build_gobs(gen_args.D, gen_args.r, opts);
        std::ostringstream g, p;
        write_obstacle(g, o);
        write_pairs(p, o.base());
        write_file(gen_out + ".obs", g.str());
        write_file(gen_out + ".pairs", p.str());
        emit(Json{{"family", "GOBS"}, {"params", params_json(o.params())}, {"n", o.vertex_count()},
                  {"m", o.edge_count()}, {"clique_edges", o.graph().clique_edge_count()}, {"pairs", o.pair_count()}},
             "");
        return 0;
      }
      const auto g = build_family(gen_args);
      std::ostringstream gs, ps;
      write_graph(gs, g);
      write_pairs(ps, g);
      write_file(gen_out + ".graph", gs.str());
      write_file(gen_out + ".pairs", ps.str());
      emit(Json{{"family", g.tag()}, {"params", params_json(g.params())}, {"n", g.vertex_count()},
                {"m", g.edge_count()}, {"pairs", g.pair_count()}},
           "");
      return 0;
    }

    if (*verify) {
      std::vector<Json> records;
      if (!ver_obs.empty() || ver_obstacle) {
        BuildOptions opts;
        opts.vertex_budget = ver_args.vertex_budget;
        std::optional<ObstacleGraph> o;
        if (!ver_obs.empty()) {
          auto is = open_input(ver_obs);
          o = read_obstacle(is, ver_args.vertex_budget);
        } else {
          o = build_gobs(ver_args.D, ver_args.r, opts);
        }
        records = verify_obstacle_records(*o, seed);
      } else {
        std::optional<LayeredGraph> g;
        if (!ver_graph.empty()) {
          auto is = open_input(ver_graph);
          g = read_graph(is, ver_args.vertex_budget);
        } else {
          g = build_family(ver_args);
        }
        VerifyOptions vo;
        vo.mode = ver_mode;
        vo.seed = seed;
        vo.comparison_cap = ver_cap;
        records = verify_layered(*g, vo);
        if (!ver_pairs.empty()) {
          auto is = open_input(ver_pairs);
          records.push_back(verify_pair_records(*g, read_pairs(is, g->params()), seed));
        }
      }
      bool ok = true;
      Json all = Json::array();
      for (auto& r : records) {
        ok = ok && record_passed(r);
        all.push_back(std::move(r));
      }
      emit(all, ver_out);
      return ok ? 0 : 1;
    }

    if (*ev_short) {
      const auto g = build_family(sh_args);
      if (!sh_shortcuts.empty()) {
        auto is = open_input(sh_shortcuts);
        ShortcutSet set{read_vertex_pairs(is), "file"};
        const auto audit = audit_shortcuts(g, set);
        const auto d = diameter(g, set.edges);
        emit(eval_record("eval_shortcut", g.tag(), g.params(), seed,
                         Json{{"shortcuts", set.size()},
                              {"useful", audit.useful},
                              {"useless", audit.useless},
                              {"baseline", g.last_layer()},
                              {"diameter", d.diameter},
                              {"witness", {d.witness.first, d.witness.second}},
                              {"pass", true}}),
             eval_out);
        if (!eval_csv.empty()) write_file(eval_csv, csv_text({{"file", 0, std::to_string(d.diameter)}}));
        return 0;
      }
      const std::uint64_t budget = sh_budget == "max-1" ? g.pair_count() - 1 : std::stoull(sh_budget);
      ShortcutEvalOptions eo;
      eo.strategies = sh_strategies;
      eo.trials = sh_trials;
      eo.seed = seed;
      const auto rep = eval_shortcut_budget(g, budget, eo);
      emit(shortcut_eval_json(g, rep, seed), eval_out);
      if (!eval_csv.empty()) write_file(eval_csv, csv_text(shortcut_eval_rows(rep)));
      return rep.pass() ? 0 : 1;
    }

    if (*ev_span) {
      BuildOptions bo;
      bo.vertex_budget = sp_args.vertex_budget;
      const auto o = build_gobs(sp_args.D, sp_args.r, bo);
      SpannerAdversaryOptions so;
      so.plan = sp_plan;
      so.trials = sp_trials;
      so.seed = seed;
      so.clique_only = !sp_any_edge;
      if (sp_plan == "file") {
        if (sp_deletions.empty()) throw CLI::ValidationError("--deletions", "plan file needs --deletions");
        auto is = open_input(sp_deletions);
        so.deletions = read_vertex_pairs(is);
      }
      const auto trials = spanner_adversary(o, so);
      emit(spanner_eval_json(o, sp_plan, trials, seed), eval_out);
      if (!eval_csv.empty()) write_file(eval_csv, csv_text(spanner_eval_rows(sp_plan, trials)));
      return spanner_trials_pass(trials) ? 0 : 1;
    }

    if (*ev_emu) {
      BuildOptions bo;
      bo.vertex_budget = em_args.vertex_budget;
      const auto o = build_gobs(em_args.D, em_args.r, bo);
      const auto trials = run_emulator_trials(o, em_trials, em_noise, seed);
      const auto rec = emulator_eval_json(o, trials, seed);
      emit(rec, eval_out);
      if (!eval_csv.empty()) write_file(eval_csv, csv_text(emulator_eval_rows(trials)));
      return record_passed(rec) ? 0 : 1;
    }

    if (*ev_sug) {
      const auto s = suggest_params(sug_app, sug_D);
      emit(suggest_json(s), eval_out);
      if (!eval_csv.empty()) write_file(eval_csv, csv_text({{"r", 0, std::to_string(s.r)}}));
      return 0;
    }

    if (*hull) {
      if (!hull_in.empty()) {
        auto is = open_input(hull_in);
        const auto h = read_hull(is);
        const auto v = verify_hull_properties(h);
        Json checks = Json::array();
        for (const auto& c : v.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        emit(Json{{"radius", h.radius}, {"size", h.size()}, {"checks", checks}, {"pass", v.all_pass()}}, "");
        return v.all_pass() ? 0 : 1;
      }
      const auto h = positive_hull(hull_r);
      std::ostringstream os;
      write_hull(os, h);
      if (hull_out.empty()) std::cout << os.str();
      else write_file(hull_out, os.str());
      return 0;
    }

    if (*fk) {
      if (fk_hi < fk_lo) throw CLI::ValidationError("--hi", "must be >= --lo");
      std::cout << "k,f(k),decimal\n";
      for (std::int64_t k = fk_lo; k <= fk_hi; ++k) {
        const auto f = exponent_f(k);
        std::ostringstream dec;
        dec.precision(6);
        dec << std::fixed << boost::rational_cast<double>(f);
        std::cout << k << "," << to_string(f) << "," << dec.str() << "\n";
      }
      std::cout << "argmin," << exponent_f_argmin(fk_lo, fk_hi) << ",real minimizer " << exponent_f_real_minimizer() << "\n";
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
