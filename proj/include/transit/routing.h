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

#ifndef TRANSIT_ROUTING_H_
#define TRANSIT_ROUTING_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "transit/cover.h"
#include "transit/errors.h"

namespace transit {

// Nondecreasing nonnegative edge latency: a polynomial with nonnegative
// coefficients or a piecewise-linear table starting at x = 0.
class CostFunction {
 public:
  enum class Kind { kPolynomial, kPiecewiseLinear };

  CostFunction() = default;

  static CostFunction Polynomial(std::vector<double> coefficients) {
    CostFunction c;
    c.kind_ = Kind::kPolynomial;
    c.coefficients_ = std::move(coefficients);
    if (c.coefficients_.empty()) c.coefficients_ = {0.0};
    for (double a : c.coefficients_) {
      if (!std::isfinite(a) || a < 0) {
        throw InvalidInput("polynomial costs need finite nonnegative coefficients");
      }
    }
    return c;
  }
  static CostFunction Linear(double a) { return Polynomial({0.0, a}); }
  static CostFunction Affine(double b, double a) { return Polynomial({b, a}); }

  static CostFunction PiecewiseLinear(std::vector<std::pair<double, double>> points) {
    CostFunction c;
    c.kind_ = Kind::kPiecewiseLinear;
    c.points_ = std::move(points);
    if (c.points_.empty() || c.points_[0].first != 0.0) {
      throw InvalidInput("piecewise-linear cost must start at x = 0");
    }
    for (size_t k = 0; k < c.points_.size(); ++k) {
      const auto& [x, y] = c.points_[k];
      if (!std::isfinite(x) || !std::isfinite(y) || y < 0) {
        throw InvalidInput("piecewise-linear cost needs finite nonnegative values");
      }
      if (k > 0 && (x <= c.points_[k - 1].first || y < c.points_[k - 1].second)) {
        throw InvalidInput("piecewise-linear cost must be nondecreasing in x and y");
      }
    }
    return c;
  }

  Kind kind() const { return kind_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  const std::vector<std::pair<double, double>>& points() const { return points_; }

  double operator()(double x) const {
    if (kind_ == Kind::kPolynomial) {
      double v = 0;
      for (size_t k = coefficients_.size(); k-- > 0;) v = v * x + coefficients_[k];
      return v;
    }
    size_t k = Segment(x);
    return points_[k].second + Slope(k) * (x - points_[k].first);
  }

  double Derivative(double x) const {
    if (kind_ == Kind::kPolynomial) {
      double v = 0;
      for (size_t k = coefficients_.size(); k-- > 1;) v = v * x + k * coefficients_[k];
      return v;
    }
    return Slope(Segment(x));
  }

  // Integral of the cost from 0 to x.
  double Integral(double x) const {
    if (kind_ == Kind::kPolynomial) {
      double v = 0;
      for (size_t k = coefficients_.size(); k-- > 0;) {
        v = v * x + coefficients_[k] / (k + 1);
      }
      return v * x;
    }
    double total = 0;
    for (size_t k = 0; k < points_.size(); ++k) {
      double left = points_[k].first;
      if (left >= x) break;
      double right = k + 1 < points_.size() ? std::min(x, points_[k + 1].first) : x;
      total += (right - left) * (operator()(left) + operator()(right)) / 2;
    }
    return total;
  }

  // c(x) = a * x for some a >= 0.
  bool IsLinear() const {
    if (kind_ != Kind::kPolynomial) return false;
    for (size_t k = 0; k < coefficients_.size(); ++k) {
      if (k != 1 && coefficients_[k] != 0.0) return false;
    }
    return true;
  }
  double LinearCoefficient() const {
    return coefficients_.size() > 1 ? coefficients_[1] : 0.0;
  }

  // Convexity of x * c(x) on [0, upto].
  bool CostTimesLoadConvex(double upto) const {
    if (kind_ == Kind::kPolynomial) return true;
    for (size_t k = 1; k < points_.size() && points_[k].first < upto; ++k) {
      if (Slope(k) < Slope(k - 1)) return false;
    }
    return true;
  }

 private:
  size_t Segment(double x) const {
    size_t k = 0;
    while (k + 1 < points_.size() && points_[k + 1].first <= x) ++k;
    return k;
  }
  double Slope(size_t k) const {
    if (points_.size() == 1) return 0.0;
    if (k + 1 >= points_.size()) k = points_.size() - 2;
    return (points_[k + 1].second - points_[k].second) /
           (points_[k + 1].first - points_[k].first);
  }

  Kind kind_ = Kind::kPolynomial;
  std::vector<double> coefficients_ = {0.0};
  std::vector<std::pair<double, double>> points_;
};

struct RoutingEdge {
  int from = 0;
  int to = 0;
  CostFunction cost;
};

struct Commodity {
  int source = 0;
  int sink = 0;
  double rate = 0;
  // Each path is a list of edge indices from source to sink.
  std::vector<std::vector<int>> paths;
};

struct RoutingInstance {
  int num_nodes = 0;
  std::vector<RoutingEdge> edges;
  std::vector<Commodity> commodities;

  double TotalRate() const {
    double r = 0;
    for (const auto& c : commodities) r += c.rate;
    return r;
  }

  void Validate() const {
    if (commodities.empty()) throw InvalidInput("routing instance without commodities");
    for (const auto& e : edges) {
      if (e.from < 0 || e.to < 0 || e.from >= num_nodes || e.to >= num_nodes) {
        throw InvalidInput("edge endpoint out of range");
      }
    }
    for (size_t i = 0; i < commodities.size(); ++i) {
      const Commodity& c = commodities[i];
      std::string who = "commodity " + std::to_string(i);
      if (!(c.rate > 0) || !std::isfinite(c.rate)) {
        throw InvalidInput(who + " needs a positive rate");
      }
      if (c.paths.empty()) throw InvalidInput(who + " has no paths");
      for (const auto& path : c.paths) {
        if (path.empty()) throw InvalidInput(who + " has an empty path");
        int at = c.source;
        for (int e : path) {
          if (e < 0 || e >= static_cast<int>(edges.size())) {
            throw InvalidInput(who + " uses an unknown edge");
          }
          if (edges[e].from != at) {
            throw InvalidInput(who + " has a disconnected path");
          }
          at = edges[e].to;
        }
        if (at != c.sink) throw InvalidInput(who + " has a path missing its sink");
      }
    }
  }
};

// Path flows indexed [commodity][path].
struct Flow {
  std::vector<std::vector<double>> path_flow;
};

inline std::vector<double> EdgeFlows(const RoutingInstance& inst, const Flow& f) {
  std::vector<double> x(inst.edges.size(), 0.0);
  for (size_t i = 0; i < inst.commodities.size(); ++i) {
    const auto& paths = inst.commodities[i].paths;
    for (size_t p = 0; p < paths.size(); ++p) {
      for (int e : paths[p]) x[e] += f.path_flow[i][p];
    }
  }
  return x;
}

inline double PathCost(const RoutingInstance& inst, const std::vector<double>& x,
                       const std::vector<int>& path) {
  double c = 0;
  for (int e : path) c += inst.edges[e].cost(x[e]);
  return c;
}

// Sum over paths of c_P(f) * f_P.
inline double CostByPaths(const RoutingInstance& inst, const Flow& f) {
  std::vector<double> x = EdgeFlows(inst, f);
  double total = 0;
  for (size_t i = 0; i < inst.commodities.size(); ++i) {
    const auto& paths = inst.commodities[i].paths;
    for (size_t p = 0; p < paths.size(); ++p) {
      total += PathCost(inst, x, paths[p]) * f.path_flow[i][p];
    }
  }
  return total;
}

// Sum over edges of c_e(f_e) * f_e.
inline double CostByEdges(const RoutingInstance& inst, const Flow& f) {
  std::vector<double> x = EdgeFlows(inst, f);
  double total = 0;
  for (size_t e = 0; e < x.size(); ++e) total += inst.edges[e].cost(x[e]) * x[e];
  return total;
}

inline bool IsFeasible(const RoutingInstance& inst, const Flow& f,
                       double tol = 1e-9) {
  if (f.path_flow.size() != inst.commodities.size()) return false;
  for (size_t i = 0; i < inst.commodities.size(); ++i) {
    const Commodity& c = inst.commodities[i];
    if (f.path_flow[i].size() != c.paths.size()) return false;
    double sum = 0;
    for (double v : f.path_flow[i]) {
      if (v < -tol) return false;
      sum += v;
    }
    if (std::fabs(sum - c.rate) > tol) return false;
  }
  return true;
}

// Largest violation of c_P(f) <= c_P'(f) over used paths P.
inline double WardropViolation(const RoutingInstance& inst, const Flow& f,
                               double used = 1e-12) {
  std::vector<double> x = EdgeFlows(inst, f);
  double worst = 0;
  for (size_t i = 0; i < inst.commodities.size(); ++i) {
    const auto& paths = inst.commodities[i].paths;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (size_t p = 0; p < paths.size(); ++p) {
      double c = PathCost(inst, x, paths[p]);
      lo = std::min(lo, c);
      if (f.path_flow[i][p] > used) hi = std::max(hi, c);
    }
    worst = std::max(worst, hi - lo);
  }
  return worst;
}

struct SolverOptions {
  double tol = 1e-8;
  int max_iterations = 100000;
};

struct SolveResult {
  Flow flow;
  int iterations = 0;
  double gap = 0;
};

enum class Objective { kBeckmann, kSocialCost };

namespace internal {

inline double EdgeGradient(const CostFunction& c, double x, Objective obj) {
  return obj == Objective::kBeckmann ? c(x) : c(x) + x * c.Derivative(x);
}

// Pairwise conditional gradient over the product of scaled simplices, each
// restricted to the `allowed` paths of its commodity. The linear oracle is
// the cheapest allowed path under the edge gradient.
inline SolveResult MinimizeOverPaths(const RoutingInstance& inst,
                                     const std::vector<std::vector<char>>& allowed,
                                     Objective obj, const SolverOptions& opt) {
  size_t k = inst.commodities.size();
  SolveResult out;
  Flow& f = out.flow;
  f.path_flow.resize(k);
  for (size_t i = 0; i < k; ++i) {
    const Commodity& c = inst.commodities[i];
    int count = 0;
    for (char a : allowed[i]) count += a;
    if (count == 0) throw InvalidInput("commodity with no allowed path");
    f.path_flow[i].assign(c.paths.size(), 0.0);
    for (size_t p = 0; p < c.paths.size(); ++p) {
      if (allowed[i][p]) f.path_flow[i][p] = c.rate / count;
    }
  }
  std::vector<double> x = EdgeFlows(inst, f);
  auto path_gradient = [&](const std::vector<int>& path) {
    double g = 0;
    for (int e : path) g += EdgeGradient(inst.edges[e].cost, x[e], obj);
    return g;
  };
  for (int iter = 0;; ++iter) {
    double gap = 0, scale = 0;
    for (size_t i = 0; i < k; ++i) {
      const auto& paths = inst.commodities[i].paths;
      double lo = std::numeric_limits<double>::infinity();
      for (size_t p = 0; p < paths.size(); ++p) {
        if (!allowed[i][p]) continue;
        double g = path_gradient(paths[p]);
        lo = std::min(lo, g);
        scale += f.path_flow[i][p] * g;
        gap += f.path_flow[i][p] * g;
      }
      gap -= inst.commodities[i].rate * lo;
    }
    double relative = scale > 0 ? gap / scale : 0.0;
    out.gap = relative;
    out.iterations = iter;
    if (relative <= opt.tol) return out;
    if (iter >= opt.max_iterations) {
      throw NoConvergence("conditional gradient stopped at relative gap " +
                          std::to_string(relative) + " after " +
                          std::to_string(iter) + " iterations");
    }
    for (size_t i = 0; i < k; ++i) {
      const auto& paths = inst.commodities[i].paths;
      int toward = -1, away = -1;
      double g_toward = 0, g_away = 0;
      for (size_t p = 0; p < paths.size(); ++p) {
        if (!allowed[i][p]) continue;
        double g = path_gradient(paths[p]);
        if (toward < 0 || g < g_toward) {
          toward = static_cast<int>(p);
          g_toward = g;
        }
        if (f.path_flow[i][p] > 0 && (away < 0 || g > g_away)) {
          away = static_cast<int>(p);
          g_away = g;
        }
      }
      if (away < 0 || toward == away || !(g_away > g_toward)) continue;
      // Edges gaining and losing flow; shared edges cancel.
      std::vector<int> plus, minus;
      for (int e : paths[toward]) {
        if (std::find(paths[away].begin(), paths[away].end(), e) == paths[away].end()) {
          plus.push_back(e);
        }
      }
      for (int e : paths[away]) {
        if (std::find(paths[toward].begin(), paths[toward].end(), e) ==
            paths[toward].end()) {
          minus.push_back(e);
        }
      }
      auto slope = [&](double d) {
        double s = 0;
        for (int e : plus) s += EdgeGradient(inst.edges[e].cost, x[e] + d, obj);
        for (int e : minus) s -= EdgeGradient(inst.edges[e].cost, x[e] - d, obj);
        return s;
      };
      double hi = f.path_flow[i][away];
      double step;
      if (slope(hi) <= 0) {
        step = hi;
      } else {
        double lo = 0;
        for (int b = 0; b < 100 && hi - lo > 1e-18; ++b) {
          double mid = (lo + hi) / 2;
          (slope(mid) > 0 ? hi : lo) = mid;
        }
        step = (lo + hi) / 2;
      }
      if (step <= 0) continue;
      for (int e : plus) x[e] += step;
      for (int e : minus) x[e] -= step;
      f.path_flow[i][toward] += step;
      if (step >= f.path_flow[i][away]) {
        f.path_flow[i][away] = 0;
      } else {
        f.path_flow[i][away] -= step;
      }
    }
    // Refresh edge flows to avoid drift.
    x = EdgeFlows(inst, f);
  }
}

inline std::vector<std::vector<char>> AllPaths(const RoutingInstance& inst) {
  std::vector<std::vector<char>> allowed;
  for (const auto& c : inst.commodities) allowed.push_back(std::vector<char>(c.paths.size(), 1));
  return allowed;
}

}  // namespace internal

// Minimizer of the Beckmann potential: a Wardrop equilibrium.
inline Flow EquilibriumFlow(const RoutingInstance& inst, const SolverOptions& opt = {}) {
  inst.Validate();
  return internal::MinimizeOverPaths(inst, internal::AllPaths(inst),
                                     Objective::kBeckmann, opt)
      .flow;
}

// Paths whose cost at the equilibrium edge flows equals the commodity minimum.
inline std::vector<std::vector<char>> SupportedPaths(const RoutingInstance& inst,
                                                     const Flow& eq,
                                                     double rel_tol = 1e-6) {
  std::vector<double> x = EdgeFlows(inst, eq);
  std::vector<std::vector<char>> out;
  for (const auto& c : inst.commodities) {
    std::vector<double> costs;
    for (const auto& p : c.paths) costs.push_back(PathCost(inst, x, p));
    double lo = *std::min_element(costs.begin(), costs.end());
    std::vector<char> supported;
    for (double v : costs) supported.push_back(v <= lo * (1 + rel_tol) + 1e-9);
    out.push_back(supported);
  }
  return out;
}

// Transition test. With `m`, the used paths must also be covered by at most m
// equilibrium witnesses; by default a single witness positive on every
// supported path is used.
inline bool IsTransitionFlow(const RoutingInstance& inst, const Flow& f,
                             std::optional<int> m = std::nullopt,
                             const std::vector<Flow>& witnesses = {},
                             const SolverOptions& opt = {}) {
  if (!IsFeasible(inst, f)) throw InvalidInput("flow is not feasible");
  if (m && *m < 1) throw BadParams("m must be at least 1");
  Flow eq = EquilibriumFlow(inst, opt);
  auto supported = SupportedPaths(inst, eq);
  std::vector<std::pair<int, int>> used;
  for (size_t i = 0; i < inst.commodities.size(); ++i) {
    for (size_t p = 0; p < f.path_flow[i].size(); ++p) {
      if (f.path_flow[i][p] <= 1e-12) continue;
      if (!supported[i][p]) return false;
      used.push_back({static_cast<int>(i), static_cast<int>(p)});
    }
  }
  if (!m || witnesses.empty()) return true;
  CoverInstance ci;
  ci.universe_size = static_cast<int>(used.size());
  for (size_t w = 0; w < witnesses.size(); ++w) {
    Bitset covers(used.size());
    for (size_t u = 0; u < used.size(); ++u) {
      if (witnesses[w].path_flow[used[u].first][used[u].second] > 1e-12) covers.set(u);
    }
    if (covers.any()) ci.Add(std::move(covers), static_cast<int>(w));
  }
  if (used.empty()) return true;
  if (!ci.Feasible()) return false;
  return ExactCover(ci).size() <= *m;
}

struct TransitionCosts {
  Flow equilibrium, worst, best, optimum;
  double equilibrium_cost = 0, worst_cost = 0, best_cost = 0, optimum_cost = 0;
  double poa = 0, pota = 0, pots = 0;
  // False when some x * c(x) is not convex; worst is then only a lower bound.
  bool worst_exact = true;
  std::uint64_t vertices = 0;
  std::vector<std::vector<char>> supported;
};

inline TransitionCosts AnalyzeTransitions(const RoutingInstance& inst,
                                          const SolverOptions& opt = {},
                                          std::uint64_t vertex_cap = 1000000) {
  inst.Validate();
  TransitionCosts r;
  r.equilibrium = EquilibriumFlow(inst, opt);
  r.equilibrium_cost = CostByEdges(inst, r.equilibrium);
  r.supported = SupportedPaths(inst, r.equilibrium);
  double total = inst.TotalRate();
  for (const auto& e : inst.edges) {
    if (!e.cost.CostTimesLoadConvex(total)) r.worst_exact = false;
  }

  // Vertices: each commodity entirely on one supported path.
  size_t k = inst.commodities.size();
  std::vector<std::vector<int>> options(k);
  std::uint64_t count = 1;
  for (size_t i = 0; i < k; ++i) {
    for (size_t p = 0; p < r.supported[i].size(); ++p) {
      if (r.supported[i][p]) options[i].push_back(static_cast<int>(p));
    }
    if (count > vertex_cap / options[i].size()) {
      throw TooLarge("more than " + std::to_string(vertex_cap) + " vertices");
    }
    count *= options[i].size();
  }
  std::vector<size_t> pick(k, 0);
  Flow f;
  for (size_t i = 0; i < k; ++i) f.path_flow.push_back(std::vector<double>(inst.commodities[i].paths.size(), 0.0));
  bool first = true;
  while (true) {
    for (size_t i = 0; i < k; ++i) {
      std::fill(f.path_flow[i].begin(), f.path_flow[i].end(), 0.0);
      f.path_flow[i][options[i][pick[i]]] = inst.commodities[i].rate;
    }
    double c = CostByEdges(inst, f);
    ++r.vertices;
    if (first || c > r.worst_cost) {
      r.worst_cost = c;
      r.worst = f;
    }
    first = false;
    size_t i = k;
    while (i-- > 0) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
    }
    if (i == static_cast<size_t>(-1)) break;
  }

  r.best = internal::MinimizeOverPaths(inst, r.supported, Objective::kSocialCost, opt).flow;
  r.best_cost = CostByEdges(inst, r.best);
  r.optimum = internal::MinimizeOverPaths(inst, internal::AllPaths(inst),
                                          Objective::kSocialCost, opt)
                  .flow;
  r.optimum_cost = CostByEdges(inst, r.optimum);
  if (!(r.optimum_cost > 0)) throw UndefinedPrice("optimal flow has zero cost");
  r.poa = r.equilibrium_cost / r.optimum_cost;
  r.pota = r.worst_cost / r.optimum_cost;
  r.pots = r.best_cost / r.optimum_cost;
  return r;
}

struct StretchReport {
  // Per commodity; infinity when the inf term vanishes.
  std::vector<double> general, linear, non_intersecting;
  bool all_linear = false;
  bool paths_disjoint_across_commodities = false;
  bool degenerate = false;
  double max_general = 0;
  double pota = 0, poa = 0;
  bool holds = true;
  // Same check with the non-intersecting linear form, when applicable.
  std::optional<bool> holds_non_intersecting;
};

inline StretchReport StretchBound(const RoutingInstance& inst,
                                  const SolverOptions& opt = {}) {
  inst.Validate();
  StretchReport r;
  double total = inst.TotalRate();
  r.all_linear = true;
  double a_max = 0, a_min = std::numeric_limits<double>::infinity();
  for (const auto& e : inst.edges) {
    if (!e.cost.IsLinear()) r.all_linear = false;
    a_max = std::max(a_max, e.cost.LinearCoefficient());
    a_min = std::min(a_min, e.cost.LinearCoefficient());
  }
  std::vector<std::set<int>> edges_of(inst.commodities.size());
  for (size_t i = 0; i < inst.commodities.size(); ++i) {
    for (const auto& p : inst.commodities[i].paths) edges_of[i].insert(p.begin(), p.end());
  }
  r.paths_disjoint_across_commodities = true;
  for (size_t i = 0; i < edges_of.size(); ++i) {
    for (size_t j = i + 1; j < edges_of.size(); ++j) {
      for (int e : edges_of[i]) {
        if (edges_of[j].count(e)) r.paths_disjoint_across_commodities = false;
      }
    }
  }
  const double inf = std::numeric_limits<double>::infinity();
  for (const auto& c : inst.commodities) {
    size_t max_len = 0, min_len = std::numeric_limits<size_t>::max();
    for (const auto& p : c.paths) {
      max_len = std::max(max_len, p.size());
      min_len = std::min(min_len, p.size());
    }
    double num_paths = static_cast<double>(c.paths.size());
    double sup = 0, low = inf;
    for (const auto& e : inst.edges) {
      sup = std::max(sup, e.cost(total));
      low = std::min(low, e.cost(c.rate / num_paths));
    }
    double s = low > 0 ? max_len * sup / (min_len * low) : inf;
    if (!(low > 0)) r.degenerate = true;
    r.general.push_back(s);
    r.max_general = std::max(r.max_general, s);
    if (r.all_linear) {
      r.linear.push_back(a_min > 0 ? max_len * a_max * total / (min_len * a_min * c.rate) * num_paths : inf);
      r.non_intersecting.push_back(a_min > 0 ? max_len * a_max / (min_len * a_min) * num_paths : inf);
    }
  }
  TransitionCosts t = AnalyzeTransitions(inst, opt);
  r.pota = t.pota;
  r.poa = t.poa;
  const double slack = 1e-9;
  r.holds = r.degenerate || r.pota <= r.poa * r.max_general * (1 + slack);
  if (r.all_linear && r.paths_disjoint_across_commodities) {
    double m = *std::max_element(r.non_intersecting.begin(), r.non_intersecting.end());
    r.holds_non_intersecting = r.pota <= r.poa * m * (1 + slack);
  }
  return r;
}

// n parallel links with c(x) = x and one commodity of rate 1.
inline RoutingInstance Fig1Instance(int n) {
  if (n < 1) throw BadParams("fig1 needs n >= 1");
  RoutingInstance inst;
  inst.num_nodes = 2;
  Commodity c{0, 1, 1.0, {}};
  for (int e = 0; e < n; ++e) {
    inst.edges.push_back({0, 1, CostFunction::Linear(1.0)});
    c.paths.push_back({e});
  }
  inst.commodities.push_back(c);
  return inst;
}

// m unit commodities between the same two nodes; each has n - 1 private
// linear links plus one shared top link. Coefficients decrease from the top:
// a_k = (1 + delta)^((n - k) / (n - 1)), k = 1..n.
inline RoutingInstance Fig2Instance(int n, int m, double delta) {
  if (n < 2 || m < 1 || !(delta >= 0)) throw BadParams("fig2 needs n >= 2, m >= 1, delta >= 0");
  RoutingInstance inst;
  inst.num_nodes = 2;
  auto coefficient = [&](int k) {
    return std::pow(1.0 + delta, static_cast<double>(n - k) / (n - 1));
  };
  inst.edges.push_back({0, 1, CostFunction::Linear(coefficient(1))});
  for (int i = 0; i < m; ++i) {
    Commodity c{0, 1, 1.0, {{0}}};
    for (int k = 2; k <= n; ++k) {
      c.paths.push_back({static_cast<int>(inst.edges.size())});
      inst.edges.push_back({0, 1, CostFunction::Linear(coefficient(k))});
    }
    inst.commodities.push_back(c);
  }
  return inst;
}

// Two links with x^2 and x^3 carrying rate 2.
inline RoutingInstance PigouPairInstance() {
  RoutingInstance inst;
  inst.num_nodes = 2;
  inst.edges.push_back({0, 1, CostFunction::Polynomial({0, 0, 1})});
  inst.edges.push_back({0, 1, CostFunction::Polynomial({0, 0, 0, 1})});
  inst.commodities.push_back({0, 1, 2.0, {{0}, {1}}});
  return inst;
}

// Edge-disjoint two-hop paths with a common intercept and strictly
// increasing costs: path p uses c(x) = intercept + (p + 1) * x on both hops.
inline RoutingInstance Prop4Instance(int paths = 3, double intercept = 1.0) {
  if (paths < 1 || !(intercept >= 0)) throw BadParams("prop4 needs paths >= 1, intercept >= 0");
  RoutingInstance inst;
  inst.num_nodes = 2 + paths;
  Commodity c{0, 1, 1.0, {}};
  for (int p = 0; p < paths; ++p) {
    int mid = 2 + p;
    int e = static_cast<int>(inst.edges.size());
    inst.edges.push_back({0, mid, CostFunction::Affine(intercept / 2, p + 1.0)});
    inst.edges.push_back({mid, 1, CostFunction::Affine(intercept / 2, p + 1.0)});
    c.paths.push_back({e, e + 1});
  }
  inst.commodities.push_back(c);
  return inst;
}

struct FamilyParams {
  int n = 3;
  int m = 2;
  double delta = 0.1;
};

inline RoutingInstance GenerateFamily(const std::string& kind, const FamilyParams& p = {}) {
  if (kind == "fig1") return Fig1Instance(p.n);
  if (kind == "fig2") return Fig2Instance(p.n, p.m, p.delta);
  if (kind == "pigou") return PigouPairInstance();
  if (kind == "prop4") return Prop4Instance(p.n);
  throw BadParams("unknown family '" + kind + "'");
}

}  // namespace transit

#endif  // TRANSIT_ROUTING_H_
