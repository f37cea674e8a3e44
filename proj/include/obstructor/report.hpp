#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "obstructor/adversary_eval.hpp"
#include "obstructor/verify.hpp"

namespace obstructor {

using CsvRow = std::tuple<std::string, std::uint64_t, std::string>;

// Frozen header: param,trial,value.
inline std::string csv_text(const std::vector<CsvRow>& rows) {
  std::ostringstream os;
  os << "param,trial,value\n";
  for (const auto& [param, trial, value] : rows) os << param << "," << trial << "," << value << "\n";
  return os.str();
}

inline Json big_json(const boost::multiprecision::cpp_int& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

inline Json stretch_json(const StretchReport& s) {
  Json hist = Json::object();
  for (const auto& [k, v] : s.histogram) hist[std::to_string(k)] = v;
  return Json{{"beta", s.beta_string()},
              {"unbounded", s.unbounded},
              {"argmax", s.argmax ? Json(*s.argmax) : Json(nullptr)},
              {"disconnected", s.disconnected},
              {"histogram", hist}};
}

inline Json eval_record(const std::string& check, const std::string& family, const GraphParams& p, std::uint64_t seed,
                        Json result) {
  return Json{{"schema", kReportSchema}, {"check", check}, {"family", family}, {"params", params_json(p)},
              {"mode", "exhaustive"},    {"seed", seed},   {"result", std::move(result)}, {"witness", nullptr}};
}

inline Json shortcut_eval_json(const LayeredGraph& g, const ShortcutEvalReport& rep, std::uint64_t seed) {
  Json trials = Json::array();
  for (const auto& t : rep.trials)
    trials.push_back(Json{{"strategy", t.strategy}, {"trial", t.trial}, {"shortcuts", t.shortcuts},
                          {"diameter", t.diameter}, {"witness", {t.witness.first, t.witness.second}}, {"pass", t.pass}});
  return eval_record("eval_shortcut", g.tag(), g.params(), seed,
                     Json{{"budget", rep.budget},
                          {"pairs", g.pair_count()},
                          {"baseline", rep.baseline},
                          {"expectation", rep.expectation},
                          {"bound", rep.bound},
                          {"trials", trials},
                          {"pass", rep.pass()}});
}

inline std::vector<CsvRow> shortcut_eval_rows(const ShortcutEvalReport& rep) {
  std::vector<CsvRow> rows;
  for (const auto& t : rep.trials) rows.emplace_back(t.strategy, t.trial, std::to_string(t.diameter));
  return rows;
}

inline bool spanner_trials_pass(const std::vector<SpannerTrial>& trials) {
  for (const auto& t : trials)
    if (!t.pass) return false;
  return true;
}

inline Json spanner_eval_json(const ObstacleGraph& o, const std::string& plan, const std::vector<SpannerTrial>& trials,
                              std::uint64_t seed) {
  Json arr = Json::array();
  for (const auto& t : trials)
    arr.push_back(Json{{"trial", t.trial},
                       {"designated", t.designated ? Json(*t.designated) : Json(nullptr)},
                       {"deleted", t.deleted},
                       {"max_lost_on_a_path", t.max_lost_on_a_path},
                       {"pigeonhole_pair", t.pigeonhole_pair ? Json(*t.pigeonhole_pair) : Json(nullptr)},
                       {"designated_stretch", t.designated_stretch},
                       {"detour", t.detour},
                       {"stretch", stretch_json(t.stretch)},
                       {"pass", t.pass}});
  return eval_record("eval_spanner", "GOBS", o.params(), seed,
                     Json{{"plan", plan}, {"required_stretch", 2 * o.D()}, {"trials", arr}, {"pass", spanner_trials_pass(trials)}});
}

inline std::vector<CsvRow> spanner_eval_rows(const std::string& plan, const std::vector<SpannerTrial>& trials) {
  std::vector<CsvRow> rows;
  for (const auto& t : trials) rows.emplace_back(plan, t.trial, t.stretch.beta_string());
  return rows;
}

struct EmulatorTrial {
  std::uint64_t trial = 0;
  EmulatorReduction reduction;
};

inline std::vector<EmulatorTrial> run_emulator_trials(const ObstacleGraph& o, std::uint64_t trials, std::uint64_t noise,
                                                      std::uint64_t seed) {
  std::vector<EmulatorTrial> out;
  for (std::uint64_t t = 0; t < trials; ++t)
    out.push_back({t, emulator_to_spanner(o, random_emulator(o, noise, derive_seed(seed, t)))});
  return out;
}

inline Json emulator_eval_json(const ObstacleGraph& o, const std::vector<EmulatorTrial>& trials, std::uint64_t seed) {
  Json arr = Json::array();
  bool ok = true;
  for (const auto& [t, red] : trials) {
    ok = ok && red.pass();
    arr.push_back(Json{{"trial", t},
                       {"emulator_edges", red.emulator_edges},
                       {"normalized", red.normalized},
                       {"expanded_hops", red.expanded_hops},
                       {"clique_edges", red.clique_edges},
                       {"clique_bound", red.clique_bound},
                       {"max_clique_per_hop", red.max_clique_per_hop},
                       {"mismatches", red.mismatches},
                       {"pass", red.pass()}});
  }
  return eval_record("eval_emulator", "GOBS", o.params(), seed, Json{{"trials", arr}, {"pass", ok}});
}

inline std::vector<CsvRow> emulator_eval_rows(const std::vector<EmulatorTrial>& trials) {
  std::vector<CsvRow> rows;
  for (const auto& [t, red] : trials) {
    rows.emplace_back("mismatches", t, std::to_string(red.mismatches));
    rows.emplace_back("clique_edges", t, std::to_string(red.clique_edges));
  }
  return rows;
}

inline Json suggest_json(const ParamSuggestion& s) {
  return Json{{"schema", kReportSchema},
              {"check", "suggest"},
              {"application", s.application},
              {"D", s.D},
              {"r", s.r},
              {"predicted_n", big_json(s.predicted_n)},
              {"lower_bound", s.lower_bound},
              {"exponent", to_string(s.exponent)},
              {"derived_exponent", to_string(s.derived_exponent)}};
}

}  // namespace obstructor
