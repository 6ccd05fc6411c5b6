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

// Acceptance harness. `acceptance N` runs criterion N, `acceptance` runs all;
// each criterion prints one PASS/FAIL line followed by indented details.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "transit/congestion.h"
#include "transit/coordination.h"
#include "transit/cover.h"
#include "transit/decomposition.h"
#include "transit/efficiency.h"
#include "transit/fixture.h"
#include "transit/io.h"
#include "transit/polymatrix.h"
#include "transit/routing.h"
#include "transit/saturation.h"
#include "transit/transition.h"

namespace transit {
namespace {

using R = Rational;

class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      lines_.push_back("  FAILED: " + what);
    } else {
      lines_.push_back("  ok: " + what);
    }
  }
  void Info(const std::string& what) { lines_.push_back("  info: " + what); }
  bool pass() const { return pass_; }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  bool pass_ = true;
  std::vector<std::string> lines_;
};

std::string Fixture(const std::string& file) {
  return std::string(TRANSIT_FIXTURE_DIR) + "/" + file;
}

std::string Str(const R& r) { return ToString(r); }

std::string Num(double x) {
  std::ostringstream out;
  out.precision(10);
  out << x;
  return out.str();
}

PriceReport<R> FixturePrices(const std::string& file) {
  Json j = LoadJsonFile(Fixture(file));
  GameInput in = LoadGameInput(j);
  return ComputePrices(in.game, DefaultSolutions(j, in.game));
}

void ExpectExact(Check& c, const std::string& name, const Measure<R>& m, const R& want) {
  c.Expect(m.defined && m.value == want,
           name + " = " + (m.defined ? Str(m.value) : "undefined") + ", want " + Str(want));
}

// 1. Coordination matrix, a = 1.
void Criterion1(Check& c) {
  PriceReport<R> r = FixturePrices("matrix2.json");
  ExpectExact(c, "poa", r.poa, R(1));
  ExpectExact(c, "pos", r.pos, R(1));
  ExpectExact(c, "pota", r.pota, R(0));
  ExpectExact(c, "posta", r.posta, R(0));
}

// 2. Three-player game, a = 30, b = 1.
void Criterion2(Check& c) {
  PriceReport<R> r = FixturePrices("example2-3player.json");
  ExpectExact(c, "pos", r.pos, R(1, 10));
  ExpectExact(c, "pots", r.pots, R(1));
}

// 3. Asymmetric coordination matrix, a = 4, b = 3, c = 2.
void Criterion3(Check& c) {
  Json j = LoadJsonFile(Fixture("matrix6.json"));
  GameInput in = LoadGameInput(j);
  SolutionSet ne = DefaultSolutions(j, in.game);
  BoundReport<R> report = CheckBoundObservations(in.game, ne);
  R a = 4, b = 3, cc = 2;
  R closed = (a + b) / (2 * cc * a);
  ExpectExact(c, "brute-force pota", report.prices.pota, closed);
  c.Expect(closed == R(7, 16), "closed form (a+b)/(2ca) = " + Str(closed));
  const BoundRow<R>* row = nullptr;
  for (const auto& r : report.rows) {
    if (r.name == "proposition1.lower") row = &r;
  }
  c.Expect(row != nullptr && !row->skipped, "per-player dependence row present");
  if (row == nullptr || row->skipped) return;
  ExpectExact(c, "certified bound poa/c", row->rhs, report.prices.poa.value / cc);
  c.Expect(row->rhs.defined && Le(row->rhs.value, report.prices.pota.value),
           "certified bound " + Str(row->rhs.value) + " <= pota " +
               Str(report.prices.pota.value));
}

// 4. Parallel links: closed form for m-pota and the linear bound.
void Criterion4(Check& c) {
  for (int n : {3, 4, 5}) {
    CongestionGame<R> cg = n == 4 ? CongestionFromJson<R>(LoadJsonFile(Fixture("parallel-link.json")))
                                  : ParallelLinks<R>(n);
    for (int m = 1; m <= n; ++m) {
      Theorem2Report<R> r = VerifyTheorem2(cg, m);
      std::string at = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      c.Expect(r.parallel_links, at + ": instance is the parallel-link game");
      c.Expect(r.poa.defined && r.poa.value == R(1), at + ": poa = " + Str(r.poa.value));
      c.Expect(r.matches_formula, at + ": m-pota = " + Str(r.m_pota.value) +
                                      ", closed form (m^2+n-m)/n = " + Str(r.expected));
      c.Expect(r.holds, at + ": m-pota <= m*poa = " + Str(r.bound));
      if (m == n) {
        c.Expect(r.m_pota.value == r.bound, at + ": equality at m = n");
      }
    }
  }
}

// Subadditive nondecreasing table: concave increments from c(1) >= 0.
std::vector<R> RandomSubadditiveTable(std::mt19937& rng, int n) {
  std::vector<R> c(n);
  int step = static_cast<int>(rng() % 5);
  c[0] = R(step);
  for (int x = 1; x < n; ++x) {
    step = static_cast<int>(rng() % (step + 1));
    c[x] = c[x - 1] + R(step);
  }
  return c;
}

CongestionGame<R> RandomSubadditiveGame(std::mt19937& rng) {
  CongestionGame<R> cg;
  int n = 2 + static_cast<int>(rng() % 3);
  cg.num_resources = 2 + static_cast<int>(rng() % 3);
  for (int j = 0; j < cg.num_resources; ++j) cg.costs.push_back(RandomSubadditiveTable(rng, n));
  for (int i = 0; i < n; ++i) {
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<std::vector<int>> strategies;
    while (static_cast<int>(strategies.size()) < k) {
      std::vector<int> s;
      for (int j = 0; j < cg.num_resources; ++j) {
        if (rng() % 2) s.push_back(j);
      }
      if (s.empty()) s.push_back(static_cast<int>(rng() % cg.num_resources));
      if (std::find(strategies.begin(), strategies.end(), s) == strategies.end()) {
        strategies.push_back(s);
      }
    }
    cg.strategies.push_back(strategies);
  }
  return cg;
}

SolutionSet RandomProfiles(std::mt19937& rng, const std::vector<int>& shape, int size) {
  std::vector<Profile> members;
  std::uint64_t total = CountProfiles(shape);
  size = static_cast<int>(std::min<std::uint64_t>(size, total));
  while (static_cast<int>(members.size()) < size) {
    std::vector<int> choice(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) choice[i] = static_cast<int>(rng() % shape[i]);
    Profile p(choice);
    if (std::find(members.begin(), members.end(), p) == members.end()) members.push_back(p);
  }
  return SolutionSet(shape, members, "random");
}

// 5. Merge bound on random subadditive congestion games.
void Criterion5(Check& c) {
  std::mt19937 rng(5005);
  std::uint64_t merges = 0, violations = 0, games_with_violation = 0;
  std::string first;
  std::uint64_t ne_merges = 0, ne_violations = 0;
  std::string first_ne;
  for (int trial = 0; trial < 500; ++trial) {
    CongestionGame<R> cg = RandomSubadditiveGame(rng);
    if (!IsSubadditive(cg)) {
      c.Expect(false, "generator produced a non-subadditive game");
      return;
    }
    Game<R> g = CongestionToGame(cg);
    SolutionSet d = RandomProfiles(rng, g.shape(), 2 + static_cast<int>(rng() % 3));
    MergeLemmaReport<R> r = VerifyMergeLemma(cg, d);
    merges += r.merges;
    violations += r.violations;
    if (!r.holds) {
      ++games_with_violation;
      if (first.empty()) {
        first = "trial " + std::to_string(trial) + ": merge " + r.counterexample->ToString() +
                " has sw " + Str(r.max_lhs) + " > sum over D " + Str(r.rhs);
      }
    }
    SolutionSet ne = EnumeratePureNe(g);
    if (!ne.empty()) {
      MergeLemmaReport<R> rn = VerifyMergeLemma(cg, ne);
      ne_merges += rn.merges;
      ne_violations += rn.violations;
      if (!rn.holds && first_ne.empty()) {
        first_ne = "trial " + std::to_string(trial) + ": " + CongestionToJson(cg).dump() +
                   " with " + std::to_string(ne.size()) + " equilibria, merge " +
                   rn.counterexample->ToString() + " has sw " + Str(rn.max_lhs) + " > " +
                   Str(rn.rhs);
      }
    }
  }
  c.Info("500 games, " + std::to_string(merges) + " merges of random profile sets");
  c.Info("variant with D = all pure NE: " + std::to_string(ne_violations) + " violations in " +
         std::to_string(ne_merges) + " merges");
  if (!first_ne.empty()) c.Info("first D = NE counterexample: " + first_ne);
  if (!first.empty()) c.Info("first counterexample: " + first);
  c.Expect(violations == 0, std::to_string(violations) + " violations in " +
                                std::to_string(games_with_violation) + " games");
}

// 6. Polymatrix property suite.
void Criterion6(Check& c) {
  std::mt19937 rng(6006);
  int instances = 0, checks = 0, violations = 0, vacuous = 0;
  std::vector<int> solution_sizes(4, 0);
  PolymatrixGeneratorOptions opt;
  // Shapes the rejection sampler reaches in practice: {players, strategies,
  // max entry}.
  const int kShapes[][3] = {{2, 2, 3}, {2, 3, 3}, {3, 2, 3}, {4, 2, 1}};
  for (int trial = 0; trial < 240; ++trial) {
    opt.num_players = kShapes[trial % 4][0];
    opt.num_strategies = kShapes[trial % 4][1];
    opt.max_entry = kShapes[trial % 4][2];
    GeneratedPolymatrix<R> gen = GeneratePolymatrix<R>(opt, rng);
    ++instances;
    ++solution_sizes[std::min(gen.solutions.size(), 3)];
    for (int m = 1; m <= std::min(3, opt.num_players); ++m) {
      Theorem1Report<R> r = VerifyTheorem1(gen.game, gen.solutions, m);
      ++checks;
      vacuous += r.vacuous;
      if (!r.holds) ++violations;
    }
  }
  c.Info("|D| distribution: 1 -> " + std::to_string(solution_sizes[1]) + ", 2 -> " +
         std::to_string(solution_sizes[2]) + ", >=3 -> " + std::to_string(solution_sizes[3]));
  c.Info(std::to_string(vacuous) + " checks with an empty stable set");
  c.Expect(instances >= 200, std::to_string(instances) + " generated instances");
  c.Expect(violations == 0, std::to_string(violations) + " violations of m-posta >= poa/m in " +
                                std::to_string(checks) + " checks");
}

// 7. Parallel linear links.
void Criterion7(Check& c) {
  SolverOptions opt;
  opt.tol = 1e-12;
  for (int n : {2, 3, 5}) {
    RoutingInstance inst = n == 3 ? NetworkFromJson(LoadJsonFile(Fixture("fig1_n3.json")))
                                  : Fig1Instance(n);
    TransitionCosts t = AnalyzeTransitions(inst, opt);
    std::vector<double> x = EdgeFlows(inst, t.equilibrium);
    double worst = 0;
    for (double v : x) worst = std::max(worst, std::fabs(v - 1.0 / n));
    std::string at = "n=" + std::to_string(n);
    c.Expect(worst <= 1e-8, at + ": edge flows within " + Num(worst) + " of 1/n");
    c.Expect(std::fabs(t.equilibrium_cost - 1.0 / n) <= 1e-8,
             at + ": equilibrium cost " + Num(t.equilibrium_cost));
    c.Expect(std::fabs(t.pota - n) <= 1e-6, at + ": pota " + Num(t.pota));
    c.Expect(std::fabs(t.pots - 1) <= 1e-6, at + ": pots " + Num(t.pots));
  }
}

// 8. Stretch bound on the shared-link family.
void Criterion8(Check& c) {
  Json fixture = LoadJsonFile(Fixture("fig2.json"));
  double previous_gap = std::numeric_limits<double>::infinity();
  for (double delta : {0.1, 0.01}) {
    RoutingInstance inst = delta == 0.1 ? NetworkFromJson(fixture) : Fig2Instance(5, 2, delta);
    StretchReport r = StretchBound(inst);
    double ratio = r.pota / r.poa;
    double gap = r.max_general - ratio;
    std::string at = "delta=" + Num(delta);
    c.Expect(!r.degenerate, at + ": stretch is finite");
    c.Expect(ratio <= r.max_general * (1 + 1e-9),
             at + ": pota/poa = " + Num(ratio) + " <= max S_i = " + Num(r.max_general));
    c.Expect(gap < previous_gap, at + ": gap " + Num(gap) + " below previous");
    previous_gap = gap;
  }
  StretchReport limit = StretchBound(Fig2Instance(5, 2, 0.0));
  c.Info("delta=0: pota/poa = " + Num(limit.pota / limit.poa) + ", max S_i = " +
         Num(limit.max_general));
}

// 9. Edge-disjoint paths with equal intercepts.
void Criterion9(Check& c) {
  RoutingInstance inst = NetworkFromJson(LoadJsonFile(Fixture("prop4.json")));
  bool increasing = true;
  for (const auto& e : inst.edges) {
    increasing = increasing && e.cost.kind() == CostFunction::Kind::kPolynomial &&
                 e.cost.coefficients().size() >= 2 && e.cost.coefficients()[1] > 0;
  }
  c.Expect(increasing, "all costs strictly increasing");
  TransitionCosts t = AnalyzeTransitions(inst);
  c.Expect(std::fabs(t.pots - 1) <= 1e-6, "pots = " + Num(t.pots));
}

// 10. Exhaustive colouring bounds on all labelled graphs with <= 7 nodes.
void Criterion10(Check& c) {
  std::uint64_t graphs = 0, violations = 0;
  std::string first;
  for (int n = 2; n <= 7; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    }
    std::uint32_t limit = 1u << pairs.size();
    std::vector<std::uint32_t> adj(n);
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
      std::fill(adj.begin(), adj.end(), 0u);
      int edges = 0;
      for (size_t k = 0; k < pairs.size(); ++k) {
        if (!(mask >> k & 1u)) continue;
        adj[pairs[k].first] |= 1u << pairs[k].second;
        adj[pairs[k].second] |= 1u << pairs[k].first;
        ++edges;
      }
      CoordinationBoundsReport r = EfficiencyBoundsFromMasks(n, adj, edges);
      ++graphs;
      if (!r.AllHold()) {
        ++violations;
        if (first.empty()) first = "n=" + std::to_string(n) + " edge mask " + std::to_string(mask);
      }
    }
  }
  c.Expect(violations == 0, std::to_string(violations) + " violations over " +
                                std::to_string(graphs) + " graphs" +
                                (first.empty() ? "" : " (first: " + first + ")"));
  CoordinationBoundsReport c4 = EfficiencyBounds(GraphFromJson(LoadJsonFile(Fixture("cycle.json"))));
  c.Expect(c4.num_nodes == 4 && c4.num_edges == 4, "cycle fixture is C4");
  c.Expect(c4.worst_stable_welfare == 0, "C4 worst stable welfare = " +
                                             std::to_string(c4.worst_stable_welfare));
  c.Expect(c4.posta == c4.posta_bound, "C4 posta " + Str(c4.posta) + " attains bound " +
                                           Str(c4.posta_bound));
  c.Expect(c4.poa == R(1, 2), "C4 poa = " + Str(c4.poa));
}

bool StableNotNash(const GraphColoringInstance& inst, const Coloring& col) {
  return CheckStableTransitionExact(inst, col) && !inst.IsNashEquilibrium(col);
}

// 11. Stable-but-not-equilibrium constructions.
void Criterion11(Check& c) {
  for (int n = 4; n <= 8; ++n) {
    GraphColoringInstance inst(Graph::Cycle(n));
    auto col = ConstructStNotNe(inst, Topology::kCycle);
    c.Expect(col && StableNotNash(inst, *col), "C" + std::to_string(n));
  }
  for (int n : {4, 6}) {
    GraphColoringInstance inst(Graph::Clique(n));
    auto col = ConstructStNotNe(inst, Topology::kClique);
    c.Expect(col && StableNotNash(inst, *col), "K" + std::to_string(n));
  }
  std::mt19937 rng(1111);
  int ok = 0;
  std::string first;
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 11);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
      if (rng() % 6 == 0 && !edges.empty()) continue;
      edges.push_back({static_cast<int>(rng() % v), v});
    }
    GraphColoringInstance inst(Graph(n, edges));
    auto col = ConstructStNotNe(inst, Topology::kForest);
    if (col && StableNotNash(inst, *col)) {
      ++ok;
    } else if (first.empty()) {
      first = "trial " + std::to_string(trial) + " with " + std::to_string(n) + " nodes";
    }
  }
  c.Expect(ok == 50, std::to_string(ok) + "/50 random forests" +
                         (first.empty() ? "" : " (first failure: " + first + ")"));
  for (int n : {3, 5}) {
    GraphColoringInstance inst(Graph::Clique(n));
    int found = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Coloring col(n);
      for (int v = 0; v < n; ++v) col[v] = (mask >> v & 1u) ? 2 : 1;
      found += StableNotNash(inst, col);
    }
    c.Expect(found == 0, "K" + std::to_string(n) + ": " + std::to_string(found) +
                             " stable transitions outside NE");
  }
}

// 12. Degree and saturation algorithms.
void Criterion12(Check& c) {
  std::mt19937 rng(1212);
  int exact_mismatch = 0, greedy_over = 0, order_dependent = 0, not_saturated = 0,
      not_minimal = 0;
  std::string first_order, first_minimal;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    std::vector<int> shape(n);
    for (int& s : shape) s = 2 + static_cast<int>(rng() % 2);
    SolutionSet d = RandomProfiles(rng, shape, 2 + static_cast<int>(rng() % 6));
    std::vector<Profile> transitions = TransitionSet(d).Materialize();
    Profile t = transitions[rng() % transitions.size()];

    int exact = TransitionDegree(d, t).degree;
    int brute = ExhaustiveCover(ReduceToCover(d, t)).size();
    int greedy = TransitionDegree(d, t, DegreeMode::kGreedy).degree;
    if (exact != brute) ++exact_mismatch;
    if (greedy > (1 + std::log(static_cast<double>(n))) * exact + 1e-9) ++greedy_over;

    int m = SaturationDegree(d).m;
    std::vector<int> order(d.size());
    std::iota(order.begin(), order.end(), 0);
    for (int k = 0; k < 10; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      if (SaturationDegree(d, order).m != m) {
        ++order_dependent;
        if (first_order.empty()) first_order = "trial " + std::to_string(trial);
        break;
      }
    }
    std::uint64_t full = transitions.size();
    if (MTransitionSet(d, m).size() != full) ++not_saturated;
    if (m >= 2 && MTransitionSet(d, m - 1).size() >= full) {
      ++not_minimal;
      if (first_minimal.empty()) first_minimal = "trial " + std::to_string(trial);
    }
  }
  c.Expect(exact_mismatch == 0, "exact degree == exhaustive degree (" +
                                    std::to_string(exact_mismatch) + " mismatches)");
  c.Expect(greedy_over == 0, "greedy <= (1 + ln n) * exact (" + std::to_string(greedy_over) +
                                 " violations)");
  c.Expect(order_dependent == 0,
           "saturation degree order-invariant over 10 shuffles (" +
               std::to_string(order_dependent) + " instances differ" +
               (first_order.empty() ? "" : ", first " + first_order) + ")");
  c.Expect(not_saturated == 0,
           "T(D,m) = T(D) (" + std::to_string(not_saturated) + " instances fall short)");
  c.Expect(not_minimal == 0,
           "T(D,m-1) strictly inside T(D) for m >= 2 (" + std::to_string(not_minimal) +
               " instances" + (first_minimal.empty() ? "" : ", first " + first_minimal) + ")");
}

Game<R> CoordinationPotential() {
  // a = 4, b = 3, c = 2: an exact potential game.
  return Game<R>(Convention::kMaximize, {2, 2},
                 {R(4), R(4), R(2), R(3, 2), R(3, 2), R(2), R(3), R(3)});
}

// 13. Decomposition verifier.
void Criterion13(Check& c) {
  Game<R> p = CoordinationPotential();
  std::vector<R> pennies = {R(1), R(-1), R(-1), R(1), R(-1), R(1), R(1), R(-1)};
  std::vector<R> gp = p.payoffs();
  for (size_t k = 0; k < gp.size(); ++k) gp[k] += R(1, 10) * pennies[k];
  DecompositionCertificate<R> perturbed{Game<R>(Convention::kMaximize, {2, 2}, gp), p,
                                        std::nullopt};
  for (int m = 1; m <= 2; ++m) {
    DecompositionReport<R> r = VerifyDecompositionBounds(perturbed, m);
    std::string at = "perturbed m=" + std::to_string(m);
    c.Expect(r.epsilon == R(1, 10), at + ": epsilon = " + Str(r.epsilon));
    int checked = 0;
    for (const auto& row : r.rows) {
      if (row.skipped) continue;
      ++checked;
      c.Expect(row.holds, at + ": " + row.inequality + " (alpha " +
                              (row.rhs.defined ? Str(row.rhs.value) : "undefined") + ")");
    }
    c.Expect(checked > 0, at + ": some inequality was checked");
  }
  DecompositionCertificate<R> identity{p, p, std::nullopt};
  for (int m = 1; m <= 2; ++m) {
    DecompositionReport<R> r = VerifyDecompositionBounds(identity, m);
    std::string at = "identity m=" + std::to_string(m);
    for (const Measure<R>* a : {&r.alpha_ne_lower, &r.alpha_ne_upper, &r.alpha_m_lower,
                                &r.alpha_m_upper}) {
      c.Expect(a->defined && a->value == R(1),
               at + ": alpha = " + (a->defined ? Str(a->value) : "undefined"));
    }
    for (const auto& row : r.rows) {
      if (row.skipped) continue;
      c.Expect(row.lhs.defined && row.rhs.defined && row.lhs.value == row.rhs.value,
               at + ": equality in " + row.inequality);
    }
  }
}

struct Criterion {
  const char* title;
  std::function<void(Check&)> run;
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> all = {
      {"coordination matrix prices", Criterion1},
      {"three-player stability gap", Criterion2},
      {"asymmetric matrix closed form and certified bound", Criterion3},
      {"parallel-link limited transitions", Criterion4},
      {"merge bound on subadditive congestion games", Criterion5},
      {"symmetric polymatrix stable transitions", Criterion6},
      {"parallel linear links routing", Criterion7},
      {"stretch bound on the shared-link family", Criterion8},
      {"edge-disjoint equal-intercept routing", Criterion9},
      {"graph colouring bounds", Criterion10},
      {"stable transitions outside equilibrium", Criterion11},
      {"degree and saturation algorithms", Criterion12},
      {"potential decomposition", Criterion13},
  };
  return all;
}

bool RunOne(int k) {
  const Criterion& crit = Criteria()[k - 1];
  Check check;
  auto start = std::chrono::steady_clock::now();
  try {
    crit.run(check);
  } catch (const std::exception& e) {
    check.Expect(false, std::string("exception: ") + e.what());
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "acceptance " << k << ": " << (check.pass() ? "PASS" : "FAIL") << " - "
            << crit.title << " (" << Num(seconds) << " s)\n";
  for (const auto& line : check.lines()) std::cout << line << "\n";
  std::cout.flush();
  return check.pass();
}

}  // namespace
}  // namespace transit

int main(int argc, char** argv) {
  int count = static_cast<int>(transit::Criteria().size());
  if (argc > 2) {
    std::cerr << "usage: acceptance [1.." << count << "]\n";
    return 2;
  }
  if (argc == 2) {
    char* end = nullptr;
    long k = std::strtol(argv[1], &end, 10);
    if (*end != '\0' || k < 1 || k > count) {
      std::cerr << "acceptance: criterion must be 1.." << count << "\n";
      return 2;
    }
    return transit::RunOne(static_cast<int>(k)) ? 0 : 1;
  }
  bool all = true;
  for (int k = 1; k <= count; ++k) all = transit::RunOne(k) && all;
  return all ? 0 : 1;
}
