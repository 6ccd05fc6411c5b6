// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// transit: command-line front end. Every verb prints one JSON report on
// stdout (or CSV with --format csv where a flat view exists) and exits with
// 0 when all asserted inequalities hold, 1 when one fails, 2+ on errors.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "transit/congestion.h"
#include "transit/coordination.h"
#include "transit/decomposition.h"
#include "transit/efficiency.h"
#include "transit/errors.h"
#include "transit/fixture.h"
#include "transit/game.h"
#include "transit/io.h"
#include "transit/polymatrix.h"
#include "transit/routing.h"
#include "transit/saturation.h"
#include "transit/transition.h"

#ifndef TRANSIT_FIXTURE_DIR
#define TRANSIT_FIXTURE_DIR "fixtures"
#endif

namespace transit {
namespace {

struct Options {
  std::string input;
  std::string second;
  bool ne = false;
  std::optional<std::string> eps;
  std::optional<std::string> solutions;
  std::optional<int> m;
  std::string stable = "strict";
  std::string format = "json";
  double tol = 1e-8;
  // degree
  std::optional<std::uint64_t> profile;
  bool saturate = false;
  bool greedy = false;
  // routing generate
  std::string family;
  int n = 3;
  double delta = 0.1;
  // graph
  std::string coloring;
  std::string topology;
  std::string theorem;
  std::string dir = TRANSIT_FIXTURE_DIR;
  bool check = false;
  bool smoothness = false;
};

struct Report {
  Json result = Json::object();
  bool assertion_failed = false;
  std::string csv;
};

StableVariant ParseVariant(const std::string& s) {
  if (s == "strict") return StableVariant::kStrict;
  if (s == "weak") return StableVariant::kWeak;
  throw BadParams("--stable must be strict or weak");
}

Json Provenance(const std::string& command, const std::string& path, const Json& doc) {
  Json p{{"tool", "transit"}, {"command", command}, {"input", path}};
  if (doc.is_object() && doc.contains("name")) p["fixture"] = doc.at("name");
  if (doc.is_object() && doc.contains("anchor")) p["anchor"] = doc.at("anchor");
  return p;
}

SolutionSet ResolveSolutions(const Options& o, const Json& doc, const Game<Rational>& game) {
  int chosen = o.ne + o.eps.has_value() + o.solutions.has_value();
  if (chosen > 1) throw BadParams("use at most one of --ne, --eps, --solutions");
  if (o.ne) return EnumeratePureNe(game);
  if (o.eps) return EnumeratePureNe(game, ParseRational(*o.eps));
  if (o.solutions) {
    Json s = LoadJsonFile(*o.solutions);
    return SolutionSetFromJson(s, game.shape());
  }
  return DefaultSolutions(doc, game);
}

// Second positional argument of `degree`: a file or the word "ne".
SolutionSet SolutionsArgument(const std::string& arg, const Json& doc,
                              const Game<Rational>& game) {
  if (arg.empty()) return DefaultSolutions(doc, game);
  if (arg == "ne") return EnumeratePureNe(game);
  return SolutionSetFromJson(LoadJsonFile(arg), game.shape());
}

std::string PricesCsv(const PriceReport<Rational>& p) {
  std::string out = "measure,m,exact,decimal\n";
  auto line = [&](const std::string& name, const std::string& m, const Measure<Rational>& v) {
    out += name + "," + m + ",";
    out += v.defined ? ToString(v.value) + "," + ToString(ToDouble(v.value)) : ",";
    out += "\n";
  };
  line("poa", "", p.poa);
  line("pos", "", p.pos);
  line("pota", "", p.pota);
  line("pots", "", p.pots);
  line("posta", "", p.posta);
  line("posts", "", p.posts);
  for (size_t k = 0; k < p.m_pota.size(); ++k) {
    std::string m = std::to_string(k + 1);
    line("m_pota", m, p.m_pota[k]);
    line("m_pots", m, p.m_pots[k]);
    line("m_posta", m, p.m_posta[k]);
    line("m_posts", m, p.m_posts[k]);
  }
  return out;
}

Report RunPrices(const Options& o, const Json& doc) {
  GameInput in = LoadGameInput(doc);
  SolutionSet d = ResolveSolutions(o, doc, in.game);
  PriceReport<Rational> p = ComputePrices(in.game, d, ParseVariant(o.stable));
  Report r;
  r.result = PriceReportToJson(p);
  r.result["solutions"] = SolutionSetToJson(d);
  if (o.m) {
    if (*o.m < 1 || *o.m > in.game.num_players()) throw BadParams("--m must be in 1..n");
    r.result["m"] = *o.m;
  }
  r.csv = PricesCsv(p);
  return r;
}

Report RunBounds(const Options& o, const Json& doc) {
  GameInput in = LoadGameInput(doc);
  SolutionSet d = ResolveSolutions(o, doc, in.game);
  BoundReport<Rational> b = CheckBoundObservations(in.game, d, ParseVariant(o.stable));
  Report r;
  r.result["prices"] = PriceReportToJson(b.prices);
  r.result["rows"] = BoundRowsToJson(b.rows);
  r.assertion_failed = !b.AllHold();
  if (in.game.num_players() == 2) {
    TwoPlayerReport<Rational> t = CheckTwoPlayerPots(in.game);
    Json two{{"condition", t.condition}, {"asserted", t.asserted}, {"holds", t.holds}};
    if (!t.witness.empty()) two["witness"] = t.witness;
    r.result["two_player_pots"] = two;
    if (t.asserted && !t.holds) r.assertion_failed = true;
  }
  if (HasIdenticalUtilities(in.game)) {
    IdenticalUtilityReport<Rational> id = VerifyIdenticalUtility(in.game);
    r.result["identical_utility"] = {{"holds", id.holds},
                                     {"pos", MeasureToJson(id.prices.pos)},
                                     {"pots", MeasureToJson(id.prices.pots)}};
    if (!id.holds) r.assertion_failed = true;
  }
  if (o.smoothness) {
    SmoothnessReport<Rational> s = ExtensiveSmoothness(in.game);
    r.result["smoothness"] = {{"alpha", NumberToJson(s.alpha)},   {"beta", NumberToJson(s.beta)},
                              {"lambda", NumberToJson(s.lambda)}, {"mu", NumberToJson(s.mu)},
                              {"bound", NumberToJson(s.bound)},   {"pota", NumberToJson(s.pota)},
                              {"holds", s.holds}};
    if (!s.holds) r.assertion_failed = true;
  }
  r.csv = BoundRowsToCsv(b.rows);
  return r;
}

Json WitnessToJson(const DegreeWitness& w) {
  return Json{{"profile", ProfileToJson(w.profile)},
              {"degree", w.degree},
              {"witnesses", w.witnesses},
              {"exact", w.exact}};
}

Report RunDegree(const Options& o, const Json& doc) {
  if (o.profile && o.saturate) throw BadParams("--profile and --saturate are exclusive");
  GameInput in = LoadGameInput(doc);
  SolutionSet d = SolutionsArgument(o.second, doc, in.game);
  d.RequireNonEmpty();
  DegreeMode mode = o.greedy ? DegreeMode::kGreedy : DegreeMode::kExact;
  Report r;
  r.result["solutions"] = SolutionSetToJson(d);
  if (o.profile) {
    if (*o.profile >= in.game.num_profiles()) throw BadParams("--profile index out of range");
    r.result["transition"] = WitnessToJson(TransitionDegree(d, in.game.ProfileAt(*o.profile), mode));
    return r;
  }
  if (o.saturate) {
    SaturationResult s = SaturationDegree(d);
    int minimum = MinimumSaturationDegree(d);
    r.result["saturation"] = {{"m", s.m},
                              {"basis", s.basis},
                              {"minimum_m", minimum},
                              {"agrees", s.m == minimum}};
    return r;
  }
  Json rows = Json::array();
  std::vector<std::uint64_t> histogram(in.game.num_players() + 1, 0);
  int worst = 0;
  TransitionSet(d).ForEach([&](const Profile& s) {
    DegreeWitness w = TransitionDegree(d, s, mode);
    ++histogram[w.degree];
    worst = std::max(worst, w.degree);
    rows.push_back(WitnessToJson(w));
  });
  r.result["transitions"] = rows;
  r.result["histogram"] = histogram;
  r.result["max_degree"] = worst;
  return r;
}

Report RunRoutingAnalyze(const Options& o, const Json& doc) {
  RoutingInstance inst = NetworkFromJson(doc);
  SolverOptions opt;
  opt.tol = o.tol;
  TransitionCosts t = AnalyzeTransitions(inst, opt);
  StretchReport s = StretchBound(inst, opt);
  Report r;
  auto list = [](const std::vector<double>& v) {
    Json out = Json::array();
    for (double x : v) out.push_back(NumberToJson(x));
    return out;
  };
  r.result["equilibrium"] = FlowToJson(inst, t.equilibrium);
  r.result["worst_transition"] = FlowToJson(inst, t.worst);
  r.result["best_transition"] = FlowToJson(inst, t.best);
  r.result["optimum"] = FlowToJson(inst, t.optimum);
  r.result["costs"] = {{"equilibrium", NumberToJson(t.equilibrium_cost)},
                       {"worst_transition", NumberToJson(t.worst_cost)},
                       {"best_transition", NumberToJson(t.best_cost)},
                       {"optimum", NumberToJson(t.optimum_cost)}};
  r.result["poa"] = NumberToJson(t.poa);
  r.result["pota"] = NumberToJson(t.pota);
  r.result["pots"] = NumberToJson(t.pots);
  r.result["worst_exact"] = t.worst_exact;
  r.result["wardrop_violation"] = NumberToJson(WardropViolation(inst, t.equilibrium));
  Json stretch{{"general", list(s.general)},
               {"max_general", NumberToJson(s.max_general)},
               {"degenerate", s.degenerate},
               {"holds", s.holds}};
  if (s.all_linear) {
    stretch["linear"] = list(s.linear);
    stretch["non_intersecting"] = list(s.non_intersecting);
  }
  if (s.holds_non_intersecting) stretch["holds_non_intersecting"] = *s.holds_non_intersecting;
  r.result["stretch"] = stretch;
  r.assertion_failed = !s.holds || (s.holds_non_intersecting && !*s.holds_non_intersecting);
  if (o.m) {
    r.result["m"] = *o.m;
    r.result["worst_is_m_transition"] = IsTransitionFlow(inst, t.worst, *o.m);
  }
  return r;
}

Coloring ParseColoring(const std::string& text) {
  Coloring col;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      col.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad colour '" + item + "'");
    }
  }
  return col;
}

Topology DetectTopology(const Options& o, const Graph& g) {
  if (!o.topology.empty()) {
    std::optional<Topology> t = ParseTopology(o.topology);
    if (!t) throw BadParams("--topology must be cycle, clique or forest");
    return *t;
  }
  if (g.IsCycle()) return Topology::kCycle;
  if (g.IsClique()) return Topology::kClique;
  if (g.IsForest()) return Topology::kForest;
  throw TopologyMismatch("graph is not a cycle, clique or forest");
}

Report RunGraphConstruct(const Options& o, const GraphColoringInstance& inst) {
  Topology topology = DetectTopology(o, inst.graph);
  std::optional<Coloring> col = ConstructStNotNe(inst, topology);
  Report r;
  static const char* kNames[] = {"cycle", "clique", "forest"};
  r.result["topology"] = kNames[static_cast<int>(topology)];
  r.result["constructed"] = col.has_value();
  if (col) {
    bool stable = CheckStableTransitionExact(inst, *col);
    bool nash = inst.IsNashEquilibrium(*col);
    r.result["coloring"] = *col;
    r.result["stable_transition"] = stable;
    r.result["nash"] = nash;
    r.result["welfare"] = inst.SocialWelfare(*col);
    r.assertion_failed = !stable || nash;
  }
  if (inst.num_nodes() <= 16) {
    // Exhaustive ST(NE) \ NE over all colourings.
    Game<Rational> game = CoordinationToGame(inst);
    SolutionSet ne = EnumeratePureNe(game);
    std::uint64_t count = 0;
    if (!ne.empty()) {
      for (const Profile& s : StableTransitionSet(game, ne)) count += !ne.Contains(s);
    }
    r.result["stable_not_nash_count"] = count;
    if (!col && count > 0) r.result["note"] = "construction declined but such colourings exist";
  }
  return r;
}

Report RunGraph(const std::string& action, const Options& o) {
  GraphColoringInstance inst = LoadGraph(o.input);
  Report r;
  if (action == "check") {
    Coloring col = ParseColoring(o.coloring);
    StableVariant variant = ParseVariant(o.stable);
    r.result["coloring"] = col;
    r.result["stable_transition"] = CheckStableTransitionExact(inst, col, variant);
    if (inst.TwoColour()) r.result["fast_check"] = CheckStableTransitionFast(inst, col);
    r.result["nash"] = inst.IsNashEquilibrium(col);
    r.result["welfare"] = inst.SocialWelfare(col);
    return r;
  }
  if (action == "construct") return RunGraphConstruct(o, inst);
  CoordinationBoundsReport b = EfficiencyBounds(inst);
  r.result = CoordinationBoundsToJson(b);
  r.assertion_failed = !b.AllHold();
  return r;
}

Report RunTheorem(const Options& o, const Json& doc) {
  Report r;
  const std::string& t = o.theorem;
  if (t == "1") {
    PolymatrixGame<Rational> pg = PolymatrixFromJson<Rational>(doc);
    Game<Rational> game = PolymatrixToGame(pg);
    SolutionSet d = ResolveSolutions(o, doc, game);
    Json rows = Json::array();
    for (int m = 1; m <= pg.num_players(); ++m) {
      if (o.m && m != *o.m) continue;
      Theorem1Report<Rational> t1 = VerifyTheorem1(pg, d, m, ParseVariant(o.stable));
      rows.push_back({{"m", m},
                      {"m_posta", MeasureToJson(t1.m_posta)},
                      {"poa", MeasureToJson(t1.poa)},
                      {"bound", NumberToJson(t1.bound)},
                      {"vacuous", t1.vacuous},
                      {"holds", t1.holds}});
      if (!t1.holds) r.assertion_failed = true;
    }
    r.result["rows"] = rows;
  } else if (t == "2") {
    CongestionGame<Rational> cg = CongestionFromJson<Rational>(doc);
    Json rows = Json::array();
    for (int m = 1; m <= cg.num_players(); ++m) {
      if (o.m && m != *o.m) continue;
      Theorem2Report<Rational> t2 = VerifyTheorem2(cg, m);
      Json row{{"m", m},
               {"m_pota", MeasureToJson(t2.m_pota)},
               {"poa", MeasureToJson(t2.poa)},
               {"bound", NumberToJson(t2.bound)},
               {"holds", t2.holds}};
      if (t2.parallel_links) {
        row["closed_form"] = NumberToJson(t2.expected);
        row["matches_closed_form"] = t2.matches_formula;
      }
      rows.push_back(row);
      if (!t2.holds || !t2.matches_formula) r.assertion_failed = true;
    }
    r.result["rows"] = rows;
  } else if (t == "3") {
    Report a = RunRoutingAnalyze(o, doc);
    r.result["stretch"] = a.result["stretch"];
    r.result["poa"] = a.result["poa"];
    r.result["pota"] = a.result["pota"];
    r.assertion_failed = a.assertion_failed;
  } else if (t == "4") {
    return RunGraph("bounds", o);
  } else if (t == "5") {
    return RunGraph("construct", o);
  } else {
    throw BadParams("theorem must be 1, 2, 3, 4 or 5");
  }
  return r;
}

Report RunOracle(const Options& o, const Json& doc) {
  Report r;
  r.result = OracleFixture(doc);
  return r;
}

Report RunFixtures(const Options& o) {
  Report r;
  Json list = Json::array();
  for (const ManifestEntry& e : LoadManifest(o.dir)) {
    Json entry{{"name", e.name}, {"kind", e.kind}, {"file", e.file}, {"anchor", e.anchor}};
    if (o.check) {
      std::filesystem::path base(o.dir);
      Json doc = LoadJsonFile((base / e.file).string());
      Json expected = LoadJsonFile((base / (e.name + ".expected.json")).string());
      std::vector<std::string> diffs = CompareExpectations(expected, AnalyzeFixture(doc));
      entry["matches"] = diffs.empty();
      if (!diffs.empty()) {
        entry["mismatches"] = diffs;
        r.assertion_failed = true;
      }
    }
    list.push_back(entry);
  }
  r.result["fixtures"] = list;
  r.result["count"] = list.size();
  return r;
}

// Graph inputs may be edge lists; only JSON ones carry fixture metadata.
Json GraphDocument(const std::string& path) {
  std::string text = ReadFile(path);
  size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{') return ParseJson(text, path);
  return Json::object();
}

int Emit(const std::string& command, const Options& o, const Json& doc, const Report& r) {
  if (o.format == "csv" && !r.csv.empty()) {
    std::cout << r.csv;
  } else {
    Json out{{"provenance", Provenance(command, o.input, doc)},
             {"result", r.result},
             {"status", r.assertion_failed ? "assertion_failed" : "ok"}};
    std::cout << Dump(out);
  }
  if (r.assertion_failed) {
    std::cerr << "transit: ASSERTION FAILED: an asserted inequality does not hold\n";
    return kExitAssertionFailed;
  }
  return kExitOk;
}

}  // namespace
}  // namespace transit

int main(int argc, char** argv) {
  using namespace transit;
  CLI::App app{"transit: transitions of solution sets and their efficiency"};
  app.require_subcommand(1);
  Options o;

  auto add_solutions = [&](CLI::App* c) {
    c->add_flag("--ne", o.ne, "Use the pure Nash equilibria");
    c->add_option("--eps", o.eps, "Use the eps-Nash equilibria (exact decimal or p/q)");
    c->add_option("--solutions", o.solutions, "Solution set JSON file");
    c->add_option("--stable", o.stable, "Stable transition variant")
        ->check(CLI::IsMember({"strict", "weak"}));
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* prices = app.add_subcommand("prices", "Efficiency measures of a solution set");
  prices->add_option("game", o.input, "Game, congestion or polymatrix JSON")->required();
  add_solutions(prices);
  add_format(prices);
  prices->add_option("--m", o.m, "Transition degree of interest");

  auto* bounds = app.add_subcommand("bounds", "Check the dependence and variation bounds");
  bounds->add_option("game", o.input)->required();
  add_solutions(bounds);
  add_format(bounds);
  bounds->add_flag("--smoothness", o.smoothness, "Also compute extensive smoothness");

  auto* degree = app.add_subcommand("degree", "Transition degrees and saturation");
  degree->add_option("game", o.input)->required();
  degree->add_option("solutions", o.second, "Solution set JSON or 'ne'");
  degree->add_option("--profile", o.profile, "Lexicographic profile index");
  degree->add_flag("--saturate", o.saturate, "Report the saturation degree");
  degree->add_flag("--greedy", o.greedy, "Greedy instead of exact cover");

  auto* routing = app.add_subcommand("routing", "Non-atomic routing games");
  routing->require_subcommand(1);
  auto* analyze = routing->add_subcommand("analyze", "Equilibrium, transition prices, stretch");
  analyze->add_option("network", o.input)->required();
  analyze->add_option("--tol", o.tol, "Solver relative gap tolerance");
  analyze->add_option("--m", o.m, "Check the worst transition as an m-transition");
  auto* generate = routing->add_subcommand("generate", "Emit a named instance family");
  generate->add_option("family", o.family, "fig1 | fig2 | pigou | prop4")->required();
  generate->add_option("--n", o.n, "Links (fig1, fig2) or paths (prop4)");
  generate->add_option("--m", o.m, "Commodities (fig2)");
  generate->add_option("--delta", o.delta, "Coefficient spread (fig2)");

  auto* graph = app.add_subcommand("graph", "Graph colouring coordination games");
  graph->require_subcommand(1);
  auto* gcheck = graph->add_subcommand("check", "Is a colouring a stable transition");
  gcheck->add_option("graph", o.input)->required();
  gcheck->add_option("--coloring", o.coloring, "Comma-separated colours")->required();
  gcheck->add_option("--stable", o.stable)->check(CLI::IsMember({"strict", "weak"}));
  auto* gconstruct = graph->add_subcommand("construct", "Stable transition that is not NE");
  gconstruct->add_option("graph", o.input)->required();
  gconstruct->add_option("--topology", o.topology, "cycle | clique | forest");
  auto* gbounds = graph->add_subcommand("bounds", "Exhaustive poa and posta bounds");
  gbounds->add_option("graph", o.input)->required();

  auto* theorem = app.add_subcommand("theorem", "Theorem harness");
  theorem->add_option("number", o.theorem, "1..5")->required();
  theorem->add_option("input", o.input)->required();
  theorem->add_option("--m", o.m);
  theorem->add_option("--tol", o.tol);
  theorem->add_option("--topology", o.topology);
  add_solutions(theorem);

  auto* oracle = app.add_subcommand("oracle", "Brute-force expectations for a fixture");
  oracle->add_option("fixture", o.input)->required();

  auto* fixtures = app.add_subcommand("fixtures", "List the fixture corpus");
  fixtures->add_option("--dir", o.dir, "Fixture directory");
  fixtures->add_flag("--check", o.check, "Compare analyzers against expectations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadParams;
  }

  try {
    if (*fixtures) return Emit("fixtures", o, Json(), RunFixtures(o));
    if (*generate) {
      FamilyParams p;
      p.n = o.n;
      p.m = o.m.value_or(2);
      p.delta = o.delta;
      std::cout << Dump(NetworkToJson(GenerateFamily(o.family, p)));
      return kExitOk;
    }
    if (*graph) {
      std::string action = *gcheck ? "check" : *gconstruct ? "construct" : "bounds";
      return Emit("graph " + action, o, GraphDocument(o.input), RunGraph(action, o));
    }
    if (*theorem && (o.theorem == "4" || o.theorem == "5")) {
      Json doc = GraphDocument(o.input);
      return Emit("theorem " + o.theorem, o, doc, RunTheorem(o, doc));
    }
    Json doc = LoadJsonFile(o.input);
    if (*prices) return Emit("prices", o, doc, RunPrices(o, doc));
    if (*bounds) return Emit("bounds", o, doc, RunBounds(o, doc));
    if (*degree) return Emit("degree", o, doc, RunDegree(o, doc));
    if (*analyze) return Emit("routing analyze", o, doc, RunRoutingAnalyze(o, doc));
    if (*theorem) return Emit("theorem " + o.theorem, o, doc, RunTheorem(o, doc));
    if (*oracle) {
      std::cout << Dump(RunOracle(o, doc).result);
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "transit: " << e.kind() << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const Json::exception& e) {
    std::cerr << "transit: ParseError: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitOk;
}
