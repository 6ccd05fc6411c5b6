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

// Brute-force reference computations. Everything here is written directly
// from the definitions, shares no enumeration or search code with the
// analyzers, and is only meant for small instances.

#ifndef TRANSIT_ORACLE_H_
#define TRANSIT_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "transit/congestion.h"
#include "transit/errors.h"
#include "transit/game.h"
#include "transit/number.h"
#include "transit/polymatrix.h"
#include "transit/routing.h"

namespace transit::oracle {

using Choices = std::vector<int>;

inline std::vector<Choices> AllProfiles(const std::vector<int>& shape) {
  std::vector<Choices> out;
  Choices c(shape.size(), 0);
  while (true) {
    out.push_back(c);
    int i = static_cast<int>(shape.size()) - 1;
    while (i >= 0 && ++c[i] == shape[i]) c[i--] = 0;
    if (i < 0) return out;
  }
}

template <typename T>
T Utility(const Game<T>& g, const Choices& c, int i) {
  return g.Payoff(Profile(c), i);
}

template <typename T>
T Welfare(const Game<T>& g, const Choices& c) {
  T total(0);
  for (int i = 0; i < g.num_players(); ++i) total += Utility(g, c, i);
  return total;
}

// True when `a` is strictly better than `b` for a player.
template <typename T>
bool Prefers(const Game<T>& g, const T& a, const T& b) {
  return g.convention() == Convention::kMaximize ? a > b : a < b;
}

template <typename T>
bool BestResponding(const Game<T>& g, const Choices& c, int i) {
  Choices d = c;
  T here = Utility(g, c, i);
  for (int k = 0; k < g.num_strategies(i); ++k) {
    d[i] = k;
    if (Prefers(g, Utility(g, d, i), here)) return false;
  }
  return true;
}

template <typename T>
std::vector<int> BestResponseSet(const Game<T>& g, const Choices& c, int i) {
  std::vector<int> out;
  Choices d = c;
  for (int k = 0; k < g.num_strategies(i); ++k) {
    d[i] = k;
    if (BestResponding(g, d, i)) out.push_back(k);
  }
  return out;
}

template <typename T>
std::vector<Choices> NashEquilibria(const Game<T>& g, const T& eps = T(0)) {
  std::vector<Choices> out;
  for (const Choices& c : AllProfiles(g.shape())) {
    bool ok = true;
    for (int i = 0; i < g.num_players() && ok; ++i) {
      Choices d = c;
      T here = Utility(g, c, i);
      for (int k = 0; k < g.num_strategies(i) && ok; ++k) {
        d[i] = k;
        T gain = g.convention() == Convention::kMaximize ? Utility(g, d, i) - here
                                                         : here - Utility(g, d, i);
        if (gain > eps) ok = false;
      }
    }
    if (ok) out.push_back(c);
  }
  return out;
}

// Smallest number of members of `d` whose coordinates cover `s`, or nullopt.
// Tries every k-subset for k = 1, 2, ...; no cover needs more than |s|.
inline std::optional<int> Degree(const std::vector<Choices>& d, const Choices& s) {
  int total = static_cast<int>(d.size());
  int limit = std::min<int>(total, static_cast<int>(s.size()));
  for (int k = 1; k <= limit; ++k) {
    std::vector<int> pick(k);
    for (int j = 0; j < k; ++j) pick[j] = j;
    while (true) {
      bool covered = true;
      for (size_t i = 0; i < s.size() && covered; ++i) {
        bool hit = false;
        for (int j : pick) hit = hit || d[j][i] == s[i];
        covered = hit;
      }
      if (covered) return k;
      int j = k - 1;
      while (j >= 0 && pick[j] == total - k + j) --j;
      if (j < 0) break;
      ++pick[j];
      for (int q = j + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
    }
  }
  return std::nullopt;
}

// Each coordinate appears at that position in some member of `d`.
inline bool IsTransition(const std::vector<Choices>& d, const Choices& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    bool hit = false;
    for (const Choices& c : d) hit = hit || c[i] == s[i];
    if (!hit) return false;
  }
  return true;
}

template <typename T>
bool Stable(const Game<T>& g, const Choices& s, bool strict) {
  int n = g.num_players();
  for (int i = 0; i < n; ++i) {
    if (BestResponding(g, s, i)) continue;
    bool helped = false;
    for (int j = 0; j < n && !helped; ++j) {
      if (j == i) continue;
      if (strict && BestResponding(g, s, j)) continue;
      for (int alt : BestResponseSet(g, s, j)) {
        if (alt == s[j]) continue;
        Choices moved = s;
        moved[j] = alt;
        if (BestResponding(g, moved, i)) {
          helped = true;
          break;
        }
      }
    }
    if (!helped) return false;
  }
  return true;
}

template <typename T>
struct Extreme {
  bool any = false;
  T worst{}, best{};
};

template <typename T>
struct Prices {
  T optimum{};
  Extreme<T> solutions, transitions, stable;
  // Index m - 1.
  std::vector<Extreme<T>> limited, stable_limited;
  std::uint64_t num_transitions = 0, num_stable = 0;
};

template <typename T>
Prices<T> ComputePrices(const Game<T>& g, const std::vector<Choices>& d,
                        bool strict = true) {
  if (d.empty()) throw EmptySolutionSet("oracle needs a nonempty solution set");
  bool max = g.convention() == Convention::kMaximize;
  auto better = [&](const T& a, const T& b) { return max ? a > b : a < b; };
  auto add = [&](Extreme<T>& e, const T& v) {
    if (!e.any || better(e.worst, v)) e.worst = v;
    if (!e.any || better(v, e.best)) e.best = v;
    e.any = true;
  };
  Prices<T> r;
  int n = g.num_players();
  r.limited.resize(n);
  r.stable_limited.resize(n);
  bool first = true;
  for (const Choices& s : AllProfiles(g.shape())) {
    T w = Welfare(g, s);
    if (first || better(w, r.optimum)) r.optimum = w;
    first = false;
    std::optional<int> deg = Degree(d, s);
    if (std::find(d.begin(), d.end(), s) != d.end()) add(r.solutions, w);
    if (!deg) continue;
    ++r.num_transitions;
    add(r.transitions, w);
    bool st = Stable(g, s, strict);
    if (st) {
      ++r.num_stable;
      add(r.stable, w);
    }
    for (int m = *deg; m <= n; ++m) {
      add(r.limited[m - 1], w);
      if (st) add(r.stable_limited[m - 1], w);
    }
  }
  if (!(r.optimum > T(0))) throw UndefinedPrice("optimum is not positive");
  return r;
}

// Payoffs recomputed from resource loads, independent of the congestion
// module's conversion.
inline Game<Rational> DenseFromCongestion(const CongestionGame<Rational>& cg) {
  std::vector<int> shape;
  for (const auto& s : cg.strategies) shape.push_back(static_cast<int>(s.size()));
  int n = static_cast<int>(shape.size());
  std::vector<Rational> payoffs;
  for (const Choices& c : AllProfiles(shape)) {
    std::vector<int> load(cg.num_resources, 0);
    for (int i = 0; i < n; ++i) {
      for (int r : cg.strategies[i][c[i]]) ++load[r];
    }
    for (int i = 0; i < n; ++i) {
      Rational cost(0);
      for (int r : cg.strategies[i][c[i]]) cost += cg.costs[r][load[r] - 1];
      payoffs.push_back(cost);
    }
  }
  return Game<Rational>(cg.convention, shape, std::move(payoffs));
}

inline Game<Rational> DenseFromPolymatrix(const PolymatrixGame<Rational>& pg) {
  int n = static_cast<int>(pg.shape.size());
  std::vector<Rational> payoffs;
  for (const Choices& c : AllProfiles(pg.shape)) {
    for (int i = 0; i < n; ++i) {
      Rational u(0);
      for (int j = 0; j < n; ++j) {
        auto it = pg.matrices.find({i, j});
        if (j != i && it != pg.matrices.end()) u += it->second[c[i]][c[j]];
      }
      payoffs.push_back(u);
    }
  }
  return Game<Rational>(Convention::kMaximize, pg.shape, std::move(payoffs));
}

// ---- Routing: projected gradient over path flows.

// Euclidean projection of v onto {x >= 0, sum x = total}.
inline std::vector<double> ProjectSimplex(std::vector<double> v, double total) {
  std::vector<double> u = v;
  std::sort(u.rbegin(), u.rend());
  double cumulative = 0, theta = 0;
  for (size_t k = 0; k < u.size(); ++k) {
    cumulative += u[k];
    double t = (cumulative - total) / (k + 1);
    if (k + 1 == u.size() || u[k + 1] <= t) {
      theta = t;
      break;
    }
  }
  for (double& x : v) x = std::max(0.0, x - theta);
  return v;
}

struct FlowProblem {
  const RoutingInstance* inst;
  // Allowed paths per commodity.
  std::vector<std::vector<int>> allowed;
  bool social = false;
};

inline std::vector<double> OracleEdgeFlows(const RoutingInstance& inst,
                                           const std::vector<std::vector<double>>& f) {
  std::vector<double> x(inst.edges.size(), 0.0);
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t p = 0; p < f[i].size(); ++p) {
      for (int e : inst.commodities[i].paths[p]) x[e] += f[i][p];
    }
  }
  return x;
}

inline double Objective(const FlowProblem& pr, const std::vector<std::vector<double>>& f) {
  std::vector<double> x = OracleEdgeFlows(*pr.inst, f);
  double total = 0;
  for (size_t e = 0; e < x.size(); ++e) {
    const CostFunction& c = pr.inst->edges[e].cost;
    total += pr.social ? x[e] * c(x[e]) : c.Integral(x[e]);
  }
  return total;
}

// Returns path flows (zero outside `allowed`) minimizing the objective.
inline std::vector<std::vector<double>> Minimize(const FlowProblem& pr) {
  const RoutingInstance& inst = *pr.inst;
  size_t k = inst.commodities.size();
  std::vector<std::vector<double>> f(k);
  for (size_t i = 0; i < k; ++i) {
    f[i].assign(inst.commodities[i].paths.size(), 0.0);
    for (int p : pr.allowed[i]) f[i][p] = inst.commodities[i].rate / pr.allowed[i].size();
  }
  double step = 1.0;
  double value = Objective(pr, f);
  for (int iter = 0; iter < 2000000; ++iter) {
    std::vector<double> x = OracleEdgeFlows(inst, f);
    std::vector<double> grad_edge(x.size());
    for (size_t e = 0; e < x.size(); ++e) {
      const CostFunction& c = inst.edges[e].cost;
      grad_edge[e] = pr.social ? c(x[e]) + x[e] * c.Derivative(x[e]) : c(x[e]);
    }
    // Backtracking on the projected step.
    while (true) {
      std::vector<std::vector<double>> g = f;
      for (size_t i = 0; i < k; ++i) {
        std::vector<double> v;
        for (int p : pr.allowed[i]) {
          double gp = 0;
          for (int e : inst.commodities[i].paths[p]) gp += grad_edge[e];
          v.push_back(f[i][p] - step * gp);
        }
        v = ProjectSimplex(v, inst.commodities[i].rate);
        for (size_t q = 0; q < v.size(); ++q) g[i][pr.allowed[i][q]] = v[q];
      }
      double moved = 0, linear = 0;
      for (size_t i = 0; i < k; ++i) {
        for (size_t p = 0; p < f[i].size(); ++p) {
          double d = g[i][p] - f[i][p];
          moved += d * d;
          double gp = 0;
          for (int e : inst.commodities[i].paths[p]) gp += grad_edge[e];
          linear += gp * d;
        }
      }
      double candidate = Objective(pr, g);
      if (candidate <= value + linear + moved / (2 * step) + 1e-14 * std::max(1.0, std::fabs(value))) {
        f = g;
        value = candidate;
        if (std::sqrt(moved) / step < 1e-11 || std::sqrt(moved) < 1e-15) return f;
        step *= 1.5;
        break;
      }
      step /= 2;
      if (step < 1e-18) return f;
    }
  }
  throw NoConvergence("oracle projected gradient did not converge");
}

struct RoutingAnswer {
  std::vector<double> equilibrium_edge_flows;
  double equilibrium_cost = 0, optimum_cost = 0, worst_cost = 0, best_cost = 0;
  double poa = 0, pota = 0, pots = 0;
};

inline double SocialCost(const RoutingInstance& inst, const std::vector<std::vector<double>>& f) {
  std::vector<double> x = OracleEdgeFlows(inst, f);
  double total = 0;
  for (size_t e = 0; e < x.size(); ++e) total += x[e] * inst.edges[e].cost(x[e]);
  return total;
}

inline RoutingAnswer SolveRouting(const RoutingInstance& inst) {
  inst.Validate();
  size_t k = inst.commodities.size();
  FlowProblem all{&inst, std::vector<std::vector<int>>(k), false};
  for (size_t i = 0; i < k; ++i) {
    for (size_t p = 0; p < inst.commodities[i].paths.size(); ++p) all.allowed[i].push_back(p);
  }
  RoutingAnswer r;
  std::vector<std::vector<double>> eq = Minimize(all);
  r.equilibrium_edge_flows = OracleEdgeFlows(inst, eq);
  r.equilibrium_cost = SocialCost(inst, eq);
  FlowProblem opt = all;
  opt.social = true;
  r.optimum_cost = SocialCost(inst, Minimize(opt));

  // Paths of minimum cost at the equilibrium.
  FlowProblem supported{&inst, std::vector<std::vector<int>>(k), false};
  for (size_t i = 0; i < k; ++i) {
    std::vector<double> costs;
    for (const auto& path : inst.commodities[i].paths) {
      double c = 0;
      for (int e : path) c += inst.edges[e].cost(r.equilibrium_edge_flows[e]);
      costs.push_back(c);
    }
    double low = *std::min_element(costs.begin(), costs.end());
    for (size_t p = 0; p < costs.size(); ++p) {
      if (costs[p] <= low + 1e-6 * std::max(1.0, std::fabs(low))) supported.allowed[i].push_back(p);
    }
  }
  // Worst: largest social cost over all pure path assignments.
  std::vector<size_t> pick(k, 0);
  bool first = true;
  while (true) {
    std::vector<std::vector<double>> f(k);
    for (size_t i = 0; i < k; ++i) {
      f[i].assign(inst.commodities[i].paths.size(), 0.0);
      f[i][supported.allowed[i][pick[i]]] = inst.commodities[i].rate;
    }
    double c = SocialCost(inst, f);
    if (first || c > r.worst_cost) r.worst_cost = c;
    first = false;
    size_t i = 0;
    while (i < k && ++pick[i] == supported.allowed[i].size()) pick[i++] = 0;
    if (i == k) break;
  }
  supported.social = true;
  r.best_cost = SocialCost(inst, Minimize(supported));
  if (!(r.optimum_cost > 0)) throw UndefinedPrice("optimal flow has zero cost");
  r.poa = r.equilibrium_cost / r.optimum_cost;
  r.pota = r.worst_cost / r.optimum_cost;
  r.pots = r.best_cost / r.optimum_cost;
  return r;
}

// ---- Graph colouring: dense game from adjacency, literal definitions.

struct ColoringAnswer {
  int max_welfare = 0, worst_ne_welfare = 0, worst_stable_welfare = 0;
  std::uint64_t num_ne = 0, num_stable = 0;
};

inline ColoringAnswer SolveColoring(int n, const std::vector<std::pair<int, int>>& edges,
                                    const std::vector<std::vector<int>>& colours) {
  std::vector<int> shape;
  for (const auto& c : colours) shape.push_back(static_cast<int>(c.size()));
  Game<Rational> g = Game<Rational>::FromFunction(
      Convention::kMaximize, shape, [&](const Profile& s) {
        std::vector<Rational> u(n, Rational(0));
        for (auto [a, b] : edges) {
          if (colours[a][s[a]] == colours[b][s[b]]) {
            u[a] += 1;
            u[b] += 1;
          }
        }
        return u;
      });
  std::vector<Choices> ne = NashEquilibria(g);
  ColoringAnswer r;
  r.num_ne = ne.size();
  bool first_ne = true, first_st = true;
  for (const Choices& s : AllProfiles(shape)) {
    int w = static_cast<int>(numerator(Welfare(g, s)).convert_to<long long>());
    r.max_welfare = std::max(r.max_welfare, w);
    if (std::find(ne.begin(), ne.end(), s) != ne.end()) {
      r.worst_ne_welfare = first_ne ? w : std::min(r.worst_ne_welfare, w);
      first_ne = false;
    }
    if (IsTransition(ne, s) && Stable(g, s, true)) {
      ++r.num_stable;
      r.worst_stable_welfare = first_st ? w : std::min(r.worst_stable_welfare, w);
      first_st = false;
    }
  }
  return r;
}

}  // namespace transit::oracle

#endif  // TRANSIT_ORACLE_H_
