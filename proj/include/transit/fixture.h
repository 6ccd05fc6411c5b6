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

// Fixture files are ordinary input documents with three extra top-level
// fields: "name", "kind" (game | congestion | polymatrix | network | graph)
// and "anchor". Game-like fixtures may carry "solutions": absent means the
// pure NE, {"eps": v} the eps-NE, {"members": [...]} an explicit set.

#ifndef TRANSIT_FIXTURE_H_
#define TRANSIT_FIXTURE_H_

#include <cmath>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "transit/congestion.h"
#include "transit/coordination.h"
#include "transit/efficiency.h"
#include "transit/game.h"
#include "transit/io.h"
#include "transit/oracle.h"
#include "transit/polymatrix.h"
#include "transit/routing.h"

namespace transit {

// Guesses the input kind from its fields when "kind" is absent.
inline std::string InputKind(const Json& j) {
  if (j.is_object() && j.contains("kind")) return j.at("kind").get<std::string>();
  if (j.contains("resources")) return "congestion";
  if (j.contains("matrices")) return "polymatrix";
  if (j.contains("commodities")) return "network";
  if (j.contains("edges")) return "graph";
  return "game";
}

struct GameInput {
  std::string kind;
  Game<Rational> game;
  std::optional<CongestionGame<Rational>> congestion;
  std::optional<PolymatrixGame<Rational>> polymatrix;
};

inline GameInput LoadGameInput(const Json& j) {
  std::string kind = InputKind(j);
  if (kind == "game") return {kind, GameFromJson<Rational>(j), {}, {}};
  if (kind == "congestion") {
    CongestionGame<Rational> cg = CongestionFromJson<Rational>(j);
    return {kind, CongestionToGame(cg), cg, {}};
  }
  if (kind == "polymatrix") {
    PolymatrixGame<Rational> pg = PolymatrixFromJson<Rational>(j);
    return {kind, PolymatrixToGame(pg), {}, pg};
  }
  throw ParseError("input of kind '" + kind + "' is not a strategic-form game");
}

// The solution set a game-like document names; pure NE by default.
inline SolutionSet DefaultSolutions(const Json& j, const Game<Rational>& game) {
  if (j.contains("solutions")) {
    const Json& s = j.at("solutions");
    if (s.contains("members")) return SolutionSetFromJson(s, game.shape());
    if (s.contains("eps")) {
      SolutionSet d = EnumeratePureNe(game, JsonToRational(s.at("eps")));
      return d;
    }
    throw ParseError("solutions must hold \"members\" or \"eps\"");
  }
  return EnumeratePureNe(game);
}

namespace internal {

inline Json ExactOrNull(const Measure<Rational>& m) {
  return m.defined ? Json(ToString(m.value)) : Json(nullptr);
}

inline Json ExactOrNull(bool any, const Rational& value, const Rational& optimum) {
  return any ? Json(ToString(Rational(value / optimum))) : Json(nullptr);
}

}  // namespace internal

// Analyzer values in the expectation schema.
inline Json AnalyzeFixture(const Json& j) {
  std::string kind = InputKind(j);
  Json out;
  out["kind"] = kind;
  if (kind == "network") {
    RoutingInstance inst = NetworkFromJson(j);
    TransitionCosts t = AnalyzeTransitions(inst);
    Json flows = Json::array();
    for (double x : EdgeFlows(inst, t.equilibrium)) flows.push_back(NumberToJson(x));
    out["equilibrium_edge_flows"] = flows;
    out["equilibrium_cost"] = NumberToJson(t.equilibrium_cost);
    out["optimum_cost"] = NumberToJson(t.optimum_cost);
    out["poa"] = NumberToJson(t.poa);
    out["pota"] = NumberToJson(t.pota);
    out["pots"] = NumberToJson(t.pots);
    return out;
  }
  if (kind == "graph") {
    GraphColoringInstance inst = GraphFromJson(j);
    CoordinationBoundsReport r = EfficiencyBounds(inst);
    out["max_welfare"] = r.max_welfare;
    out["worst_ne_welfare"] = r.worst_ne_welfare;
    out["worst_stable_welfare"] = r.worst_stable_welfare;
    out["num_ne"] = r.num_ne;
    out["num_stable_transitions"] = r.num_stable;
    out["poa"] = ToString(r.poa);
    out["posta"] = ToString(r.posta);
    return out;
  }
  GameInput in = LoadGameInput(j);
  SolutionSet d = DefaultSolutions(j, in.game);
  PriceReport<Rational> p = ComputePrices(in.game, d);
  out["optimum"] = ToString(p.optimum);
  out["poa"] = internal::ExactOrNull(p.poa);
  out["pos"] = internal::ExactOrNull(p.pos);
  out["pota"] = internal::ExactOrNull(p.pota);
  out["pots"] = internal::ExactOrNull(p.pots);
  out["posta"] = internal::ExactOrNull(p.posta);
  out["posts"] = internal::ExactOrNull(p.posts);
  for (const char* key : {"m_pota", "m_pots", "m_posta", "m_posts"}) out[key] = Json::array();
  for (size_t m = 0; m < p.m_pota.size(); ++m) {
    out["m_pota"].push_back(internal::ExactOrNull(p.m_pota[m]));
    out["m_pots"].push_back(internal::ExactOrNull(p.m_pots[m]));
    out["m_posta"].push_back(internal::ExactOrNull(p.m_posta[m]));
    out["m_posts"].push_back(internal::ExactOrNull(p.m_posts[m]));
  }
  out["num_solutions"] = p.num_solutions;
  out["num_transitions"] = p.num_transitions;
  out["num_stable_transitions"] = p.num_stable;
  return out;
}

namespace internal {

inline Game<Rational> OracleGame(const Json& j, const std::string& kind) {
  if (kind == "game") return GameFromJson<Rational>(j);
  if (kind == "congestion") return oracle::DenseFromCongestion(CongestionFromJson<Rational>(j));
  return oracle::DenseFromPolymatrix(PolymatrixFromJson<Rational>(j));
}

}  // namespace internal

// Brute-force values in the expectation schema.
inline Json OracleFixture(const Json& j) {
  std::string kind = InputKind(j);
  Json out;
  out["kind"] = kind;
  if (kind == "network") {
    oracle::RoutingAnswer a = oracle::SolveRouting(NetworkFromJson(j));
    Json flows = Json::array();
    for (double x : a.equilibrium_edge_flows) flows.push_back(NumberToJson(x));
    out["equilibrium_edge_flows"] = flows;
    out["equilibrium_cost"] = NumberToJson(a.equilibrium_cost);
    out["optimum_cost"] = NumberToJson(a.optimum_cost);
    out["poa"] = NumberToJson(a.poa);
    out["pota"] = NumberToJson(a.pota);
    out["pots"] = NumberToJson(a.pots);
    return out;
  }
  if (kind == "graph") {
    int n = internal::AsInt(internal::Field(j, "nodes"), "nodes");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : internal::Field(j, "edges")) edges.push_back({e[0].get<int>(), e[1].get<int>()});
    std::vector<std::vector<int>> colours(n, {1, 2});
    if (j.contains("colours")) colours = j.at("colours").get<std::vector<std::vector<int>>>();
    oracle::ColoringAnswer a = oracle::SolveColoring(n, edges, colours);
    out["max_welfare"] = a.max_welfare;
    out["worst_ne_welfare"] = a.worst_ne_welfare;
    out["worst_stable_welfare"] = a.worst_stable_welfare;
    out["num_ne"] = a.num_ne;
    out["num_stable_transitions"] = a.num_stable;
    out["poa"] = ToString(Rational(a.worst_ne_welfare, a.max_welfare));
    out["posta"] = ToString(Rational(a.worst_stable_welfare, a.max_welfare));
    return out;
  }
  Game<Rational> game = internal::OracleGame(j, kind);
  std::vector<oracle::Choices> d;
  if (j.contains("solutions") && j.at("solutions").contains("members")) {
    for (const auto& m : j.at("solutions").at("members")) d.push_back(m.get<std::vector<int>>());
  } else if (j.contains("solutions") && j.at("solutions").contains("eps")) {
    d = oracle::NashEquilibria(game, JsonToRational(j.at("solutions").at("eps")));
  } else {
    d = oracle::NashEquilibria(game);
  }
  oracle::Prices<Rational> p = oracle::ComputePrices(game, d);
  const Rational& opt = p.optimum;
  out["optimum"] = ToString(opt);
  out["poa"] = internal::ExactOrNull(p.solutions.any, p.solutions.worst, opt);
  out["pos"] = internal::ExactOrNull(p.solutions.any, p.solutions.best, opt);
  out["pota"] = internal::ExactOrNull(p.transitions.any, p.transitions.worst, opt);
  out["pots"] = internal::ExactOrNull(p.transitions.any, p.transitions.best, opt);
  out["posta"] = internal::ExactOrNull(p.stable.any, p.stable.worst, opt);
  out["posts"] = internal::ExactOrNull(p.stable.any, p.stable.best, opt);
  for (const char* key : {"m_pota", "m_pots", "m_posta", "m_posts"}) out[key] = Json::array();
  for (size_t m = 0; m < p.limited.size(); ++m) {
    const auto& l = p.limited[m];
    const auto& s = p.stable_limited[m];
    out["m_pota"].push_back(internal::ExactOrNull(l.any, l.worst, opt));
    out["m_pots"].push_back(internal::ExactOrNull(l.any, l.best, opt));
    out["m_posta"].push_back(internal::ExactOrNull(s.any, s.worst, opt));
    out["m_posts"].push_back(internal::ExactOrNull(s.any, s.best, opt));
  }
  out["num_solutions"] = d.size();
  out["num_transitions"] = p.num_transitions;
  out["num_stable_transitions"] = p.num_stable;
  return out;
}

// Lists mismatches between an expectation document and analyzer output.
// Strings and integers must match exactly; floating values within `tol`
// relative (absolute below 1).
inline std::vector<std::string> CompareExpectations(const Json& expected, const Json& actual,
                                                    double tol = 1e-6,
                                                    const std::string& path = "") {
  std::vector<std::string> diffs;
  auto here = [&](const std::string& what) {
    diffs.push_back((path.empty() ? std::string("<root>") : path) + ": " + what);
  };
  if (expected.is_number_float() || (expected.is_number() && actual.is_number_float())) {
    if (!actual.is_number()) {
      here("expected a number, got " + actual.dump());
    } else {
      double a = expected.get<double>(), b = actual.get<double>();
      if (std::fabs(a - b) > tol * std::max(1.0, std::fabs(a))) {
        here("expected " + expected.dump() + ", got " + actual.dump());
      }
    }
    return diffs;
  }
  if (expected.is_number_integer() && actual.is_number_integer()) {
    if (expected.get<std::int64_t>() != actual.get<std::int64_t>()) {
      here("expected " + expected.dump() + ", got " + actual.dump());
    }
    return diffs;
  }
  if (expected.type() != actual.type()) {
    here("expected " + expected.dump() + ", got " + actual.dump());
    return diffs;
  }
  if (expected.is_object()) {
    for (const auto& [key, value] : expected.items()) {
      if (!actual.contains(key)) {
        diffs.push_back(path + "/" + key + ": missing");
        continue;
      }
      auto sub = CompareExpectations(value, actual.at(key), tol, path + "/" + key);
      diffs.insert(diffs.end(), sub.begin(), sub.end());
    }
  } else if (expected.is_array()) {
    if (expected.size() != actual.size()) {
      here("length " + std::to_string(expected.size()) + " vs " + std::to_string(actual.size()));
      return diffs;
    }
    for (size_t k = 0; k < expected.size(); ++k) {
      auto sub = CompareExpectations(expected[k], actual[k], tol, path + "/" + std::to_string(k));
      diffs.insert(diffs.end(), sub.begin(), sub.end());
    }
  } else if (expected != actual) {
    here("expected " + expected.dump() + ", got " + actual.dump());
  }
  return diffs;
}

struct ManifestEntry {
  std::string name, file, kind, anchor;
};

inline std::vector<ManifestEntry> LoadManifest(const std::string& dir) {
  Json m = LoadJsonFile((std::filesystem::path(dir) / "manifest.json").string());
  std::vector<ManifestEntry> out;
  for (const auto& e : internal::Field(m, "fixtures")) {
    out.push_back({e.at("name").get<std::string>(), e.at("file").get<std::string>(),
                   e.at("kind").get<std::string>(), e.value("anchor", std::string())});
  }
  return out;
}

}  // namespace transit

#endif  // TRANSIT_FIXTURE_H_
