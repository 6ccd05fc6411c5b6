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

#ifndef TRANSIT_IO_H_
#define TRANSIT_IO_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "transit/congestion.h"
#include "transit/coordination.h"
#include "transit/efficiency.h"
#include "transit/errors.h"
#include "transit/game.h"
#include "transit/number.h"
#include "transit/polymatrix.h"
#include "transit/routing.h"

namespace transit {

using Json = nlohmann::json;

inline Json ParseJson(const std::string& text, const std::string& origin = "input") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Json LoadJsonFile(const std::string& path) {
  return ParseJson(ReadFile(path), path);
}

namespace internal {

inline const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

inline int AsInt(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

inline double AsDouble(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

inline std::vector<int> AsIntList(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(AsInt(v, what));
  return out;
}

}  // namespace internal

// Numbers are read exactly: integers as is, floats through their shortest
// decimal form, strings as "p/q" or decimals.
inline Rational JsonToRational(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(j.get<std::uint64_t>())
                                  : Rational(j.get<std::int64_t>());
  }
  if (j.is_number_float()) return RationalFromDouble(j.get<double>());
  if (j.is_string()) return ParseRational(j.get<std::string>());
  throw ParseError("expected a number, got " + j.dump());
}

template <typename T>
T JsonToNumber(const Json& j) {
  return FromRational<T>(JsonToRational(j));
}

inline double RoundSignificant(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::stod(buf);
}

inline Json NumberToJson(const Rational& r) {
  return Json{{"exact", ToString(r)}, {"decimal", RoundSignificant(ToDouble(r))}};
}
inline Json NumberToJson(double x) {
  if (!std::isfinite(x)) return x > 0 ? Json("inf") : Json(x < 0 ? "-inf" : "nan");
  return RoundSignificant(x);
}

inline Json ProfileToJson(const Profile& p) { return Json(p.choices()); }

inline Profile JsonToProfile(const Json& j) {
  return Profile(internal::AsIntList(j, "profile"));
}

template <typename T>
Game<T> GameFromJson(const Json& j) {
  std::string conv = internal::Field(j, "convention").get<std::string>();
  if (conv != "max" && conv != "min") throw ParseError("convention must be max or min");
  const Json& strategies = internal::Field(j, "strategies");
  if (!strategies.is_array() || strategies.empty()) {
    throw ParseError("strategies must be a nonempty array");
  }
  std::vector<int> shape;
  std::vector<std::vector<std::string>> names;
  for (const auto& s : strategies) {
    if (!s.is_array() || s.empty()) throw ParseError("each player needs strategy names");
    std::vector<std::string> list;
    for (const auto& name : s) list.push_back(name.is_string() ? name.get<std::string>() : name.dump());
    shape.push_back(static_cast<int>(list.size()));
    names.push_back(list);
  }
  int n = static_cast<int>(shape.size());
  std::vector<std::string> players;
  if (j.contains("players")) {
    for (const auto& p : j.at("players")) players.push_back(p.is_string() ? p.get<std::string>() : p.dump());
    if (static_cast<int>(players.size()) != n) throw ParseError("players and strategies disagree");
  } else {
    for (int i = 0; i < n; ++i) players.push_back(std::to_string(i));
  }
  std::vector<T> payoffs;
  // Walks the nested tensor, checking every level's length.
  std::function<void(const Json&, int)> walk = [&](const Json& node, int depth) {
    if (!node.is_array()) throw ParseError("payoff tensor is not nested arrays");
    if (depth == n) {
      if (static_cast<int>(node.size()) != n) {
        throw ParseError("payoff vector must have one entry per player");
      }
      for (const auto& v : node) payoffs.push_back(JsonToNumber<T>(v));
      return;
    }
    if (static_cast<int>(node.size()) != shape[depth]) {
      throw ParseError("ragged payoff tensor at depth " + std::to_string(depth));
    }
    for (const auto& child : node) walk(child, depth + 1);
  };
  CountProfiles(shape);
  walk(internal::Field(j, "payoffs"), 0);
  Game<T> game(conv == "max" ? Convention::kMaximize : Convention::kMinimize, shape,
               std::move(payoffs));
  game.set_names(players, names);
  return game;
}

template <typename T>
Json GameToJson(const Game<T>& game) {
  int n = game.num_players();
  std::function<Json(Profile&, int)> build = [&](Profile& p, int depth) {
    Json arr = Json::array();
    if (depth == n) {
      for (int i = 0; i < n; ++i) arr.push_back(ToString(game.Payoff(p, i)));
      return arr;
    }
    for (int k = 0; k < game.num_strategies(depth); ++k) {
      p[depth] = k;
      arr.push_back(build(p, depth + 1));
    }
    return arr;
  };
  Profile p{std::vector<int>(n, 0)};
  return Json{{"convention", ConventionName(game.convention())},
              {"players", game.player_names()},
              {"strategies", game.strategy_names()},
              {"payoffs", build(p, 0)}};
}

inline SolutionSet SolutionSetFromJson(const Json& j, const std::vector<int>& shape) {
  std::vector<Profile> members;
  for (const auto& m : internal::Field(j, "members")) members.push_back(JsonToProfile(m));
  std::string label = j.contains("label") ? j.at("label").get<std::string>() : "user";
  return SolutionSet(shape, std::move(members), label);
}

inline Json SolutionSetToJson(const SolutionSet& d) {
  Json members = Json::array();
  for (const auto& p : d.members()) members.push_back(ProfileToJson(p));
  return Json{{"label", d.label()}, {"members", members}};
}

template <typename T>
CongestionGame<T> CongestionFromJson(const Json& j) {
  CongestionGame<T> cg;
  cg.num_resources = internal::AsInt(internal::Field(j, "resources"), "resources");
  for (const auto& row : internal::Field(j, "costs")) {
    std::vector<T> c;
    for (const auto& v : row) c.push_back(JsonToNumber<T>(v));
    cg.costs.push_back(c);
  }
  for (const auto& player : internal::Field(j, "strategies")) {
    std::vector<std::vector<int>> list;
    for (const auto& s : player) list.push_back(internal::AsIntList(s, "strategy"));
    cg.strategies.push_back(list);
  }
  if (j.contains("convention")) {
    cg.convention = j.at("convention") == "max" ? Convention::kMaximize : Convention::kMinimize;
  }
  cg.Validate();
  return cg;
}

template <typename T>
Json CongestionToJson(const CongestionGame<T>& cg) {
  Json costs = Json::array();
  for (const auto& row : cg.costs) {
    Json r = Json::array();
    for (const T& v : row) r.push_back(ToString(v));
    costs.push_back(r);
  }
  return Json{{"convention", ConventionName(cg.convention)},
              {"costs", costs},
              {"resources", cg.num_resources},
              {"strategies", cg.strategies}};
}

template <typename T>
PolymatrixGame<T> PolymatrixFromJson(const Json& j) {
  PolymatrixGame<T> pg;
  pg.shape = internal::AsIntList(internal::Field(j, "shape"), "shape");
  for (const auto& [key, value] : internal::Field(j, "matrices").items()) {
    int a = 0, b = 0;
    if (std::sscanf(key.c_str(), "%d,%d", &a, &b) != 2) {
      throw ParseError("matrix key must be \"i,j\", got '" + key + "'");
    }
    Matrix<T> m;
    for (const auto& row : value) {
      std::vector<T> r;
      for (const auto& v : row) r.push_back(JsonToNumber<T>(v));
      m.push_back(r);
    }
    pg.matrices[{a, b}] = m;
  }
  pg.Validate();
  return pg;
}

template <typename T>
Json PolymatrixToJson(const PolymatrixGame<T>& pg) {
  Json matrices = Json::object();
  for (const auto& [key, m] : pg.matrices) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const T& v : row) r.push_back(ToString(v));
      rows.push_back(r);
    }
    matrices[std::to_string(key.first) + "," + std::to_string(key.second)] = rows;
  }
  return Json{{"matrices", matrices}, {"shape", pg.shape}};
}

inline CostFunction CostFromJson(const Json& j) {
  if (j.contains("poly")) {
    std::vector<double> c;
    for (const auto& v : j.at("poly")) c.push_back(internal::AsDouble(v, "coefficient"));
    return CostFunction::Polynomial(c);
  }
  if (j.contains("pwl")) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : j.at("pwl")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("pwl points are [x, y] pairs");
      pts.push_back({internal::AsDouble(p[0], "x"), internal::AsDouble(p[1], "y")});
    }
    return CostFunction::PiecewiseLinear(pts);
  }
  throw ParseError("cost must be {\"poly\": [...]} or {\"pwl\": [...]}");
}

inline Json CostToJson(const CostFunction& c) {
  if (c.kind() == CostFunction::Kind::kPolynomial) return Json{{"poly", c.coefficients()}};
  Json pts = Json::array();
  for (auto [x, y] : c.points()) pts.push_back({x, y});
  return Json{{"pwl", pts}};
}

inline RoutingInstance NetworkFromJson(const Json& j) {
  RoutingInstance inst;
  inst.num_nodes = internal::AsInt(internal::Field(j, "nodes"), "nodes");
  for (const auto& e : internal::Field(j, "edges")) {
    inst.edges.push_back({internal::AsInt(internal::Field(e, "from"), "from"),
                          internal::AsInt(internal::Field(e, "to"), "to"),
                          CostFromJson(internal::Field(e, "cost"))});
  }
  for (const auto& c : internal::Field(j, "commodities")) {
    Commodity com;
    com.source = internal::AsInt(internal::Field(c, "source"), "source");
    com.sink = internal::AsInt(internal::Field(c, "sink"), "sink");
    com.rate = internal::AsDouble(internal::Field(c, "rate"), "rate");
    for (const auto& p : internal::Field(c, "paths")) com.paths.push_back(internal::AsIntList(p, "path"));
    inst.commodities.push_back(com);
  }
  inst.Validate();
  return inst;
}

inline Json NetworkToJson(const RoutingInstance& inst) {
  Json edges = Json::array();
  for (const auto& e : inst.edges) {
    edges.push_back({{"cost", CostToJson(e.cost)}, {"from", e.from}, {"to", e.to}});
  }
  Json commodities = Json::array();
  for (const auto& c : inst.commodities) {
    commodities.push_back(
        {{"paths", c.paths}, {"rate", c.rate}, {"sink", c.sink}, {"source", c.source}});
  }
  return Json{{"commodities", commodities}, {"edges", edges}, {"nodes", inst.num_nodes}};
}

inline GraphColoringInstance GraphFromJson(const Json& j) {
  int n = internal::AsInt(internal::Field(j, "nodes"), "nodes");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : internal::Field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edges are [u, v] pairs");
    edges.push_back({internal::AsInt(e[0], "u"), internal::AsInt(e[1], "v")});
  }
  std::vector<std::vector<int>> colours;
  if (j.contains("colours")) {
    for (const auto& c : j.at("colours")) colours.push_back(internal::AsIntList(c, "colours"));
  }
  return GraphColoringInstance(Graph(n, edges), colours);
}

inline Json GraphToJson(const GraphColoringInstance& inst) {
  Json edges = Json::array();
  for (auto [u, v] : inst.graph.edges()) edges.push_back({u, v});
  return Json{{"edges", edges}, {"nodes", inst.num_nodes()}};
}

// One "u v" pair per line; '#' starts a comment; "nodes N" fixes the count.
inline GraphColoringInstance GraphFromEdgeList(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int nodes = -1, max_node = -1, line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "nodes") {
      if (!(ls >> nodes) || nodes < 0) throw ParseError("bad node count on line " + std::to_string(line_no));
      continue;
    }
    int u = 0, v = 0;
    try {
      size_t used = 0;
      u = std::stoi(first, &used);
      if (used != first.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("bad edge on line " + std::to_string(line_no));
    }
    std::string rest;
    if (!(ls >> v) || (ls >> rest)) throw ParseError("bad edge on line " + std::to_string(line_no));
    edges.push_back({u, v});
    max_node = std::max({max_node, u, v});
  }
  if (nodes < 0) nodes = max_node + 1;
  return GraphColoringInstance(Graph(nodes, edges));
}

inline GraphColoringInstance LoadGraph(const std::string& path) {
  std::string text = ReadFile(path);
  size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{') return GraphFromJson(ParseJson(text, path));
  return GraphFromEdgeList(text);
}

// ---- Report emission.

template <typename T>
Json MeasureToJson(const Measure<T>& m) {
  if (!m.defined) return Json{{"defined", false}, {"reason", m.note}};
  Json out{{"defined", true}, {"value", NumberToJson(m.value)}};
  if (m.witness.size() > 0) out["witness"] = ProfileToJson(m.witness);
  return out;
}

template <typename T>
Json PriceReportToJson(const PriceReport<T>& r) {
  auto list = [](const std::vector<Measure<T>>& v) {
    Json out = Json::array();
    for (const auto& m : v) out.push_back(MeasureToJson(m));
    return out;
  };
  return Json{{"convention", ConventionName(r.convention)},
              {"stable_variant", StableVariantName(r.variant)},
              {"optimum", NumberToJson(r.optimum)},
              {"optimum_witness", ProfileToJson(r.optimum_witness)},
              {"poa", MeasureToJson(r.poa)},
              {"pos", MeasureToJson(r.pos)},
              {"pota", MeasureToJson(r.pota)},
              {"pots", MeasureToJson(r.pots)},
              {"posta", MeasureToJson(r.posta)},
              {"posts", MeasureToJson(r.posts)},
              {"m_pota", list(r.m_pota)},
              {"m_pots", list(r.m_pots)},
              {"m_posta", list(r.m_posta)},
              {"m_posts", list(r.m_posts)},
              {"num_solutions", r.num_solutions},
              {"num_transitions", r.num_transitions},
              {"num_stable_transitions", r.num_stable},
              {"num_m_transitions", r.num_m_transitions}};
}

template <typename T>
Json BoundRowToJson(const BoundRow<T>& row) {
  Json constants = Json::object();
  for (const auto& [name, value] : row.constants) constants[name] = MeasureToJson(value);
  Json out{{"name", row.name},
           {"anchor", row.anchor},
           {"inequality", row.inequality},
           {"constants", constants},
           {"skipped", row.skipped}};
  if (row.skipped) {
    out["reason"] = row.reason;
    return out;
  }
  out["lhs"] = MeasureToJson(row.lhs);
  out["rhs"] = MeasureToJson(row.rhs);
  out["holds"] = row.holds;
  out["slack"] = NumberToJson(row.slack);
  if (row.equality_consistent) out["equality_consistent"] = *row.equality_consistent;
  return out;
}

template <typename T>
Json BoundRowsToJson(const std::vector<BoundRow<T>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(BoundRowToJson(row));
  return out;
}

// Flat CSV view: one line per bound row.
template <typename T>
std::string BoundRowsToCsv(const std::vector<BoundRow<T>>& rows) {
  std::string out = "name,inequality,lhs,rhs,holds,skipped\n";
  auto cell = [](const Measure<T>& m) { return m.defined ? ToString(m.value) : std::string("undefined"); };
  for (const auto& row : rows) {
    out += row.name + ",\"" + row.inequality + "\"," + (row.skipped ? "" : cell(row.lhs)) +
           "," + (row.skipped ? "" : cell(row.rhs)) + "," +
           (row.skipped ? "" : (row.holds ? "true" : "false")) + "," +
           (row.skipped ? "true" : "false") + "\n";
  }
  return out;
}

inline Json FlowToJson(const RoutingInstance& inst, const Flow& f) {
  Json paths = Json::array();
  for (const auto& c : f.path_flow) {
    Json row = Json::array();
    for (double v : c) row.push_back(NumberToJson(v));
    paths.push_back(row);
  }
  Json edges = Json::array();
  for (double v : EdgeFlows(inst, f)) edges.push_back(NumberToJson(v));
  return Json{{"edge_flows", edges}, {"path_flows", paths}};
}

inline Json ColoringToJson(const Coloring& c) { return Json(c); }

inline Json CoordinationBoundsToJson(const CoordinationBoundsReport& r) {
  return Json{{"nodes", r.num_nodes},
              {"edges", r.num_edges},
              {"max_welfare", r.max_welfare},
              {"poa", NumberToJson(r.poa)},
              {"posta", NumberToJson(r.posta)},
              {"posta_bound", NumberToJson(r.posta_bound)},
              {"poa_holds", r.poa_holds},
              {"posta_holds", r.posta_holds},
              {"observation5_stable", r.observation5_stable},
              {"observation5_ne", r.observation5_ne},
              {"worst_ne", ColoringToJson(r.worst_ne)},
              {"worst_stable", ColoringToJson(r.worst_stable)},
              {"num_colorings", r.num_colorings},
              {"num_ne", r.num_ne},
              {"num_stable_transitions", r.num_stable}};
}

// Deterministic rendering: sorted keys (nlohmann's default object map) and
// two-space indentation.
inline std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace transit

#endif  // TRANSIT_IO_H_
