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

#ifndef TRANSIT_COORDINATION_H_
#define TRANSIT_COORDINATION_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "transit/errors.h"
#include "transit/game.h"
#include "transit/number.h"
#include "transit/transition.h"

namespace transit {

// Undirected simple graph on nodes 0..n-1.
class Graph {
 public:
  Graph() = default;
  Graph(int num_nodes, std::vector<std::pair<int, int>> edges)
      : num_nodes_(num_nodes), neighbours_(num_nodes) {
    if (num_nodes < 0) throw InvalidInput("negative node count");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes) {
        throw InvalidInput("edge endpoint out of range");
      }
      if (u == v) throw InvalidInput("self-loop at node " + std::to_string(u));
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
        throw InvalidInput("duplicate edge " + std::to_string(u) + "-" +
                           std::to_string(v));
      }
      edges_.push_back({u, v});
      neighbours_[u].push_back(v);
      neighbours_[v].push_back(u);
    }
    for (auto& list : neighbours_) std::sort(list.begin(), list.end());
  }

  int num_nodes() const { return num_nodes_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbours(int v) const { return neighbours_[v]; }
  int degree(int v) const { return static_cast<int>(neighbours_[v].size()); }
  bool Adjacent(int u, int v) const {
    return std::binary_search(neighbours_[u].begin(), neighbours_[u].end(), v);
  }

  // Connected components as sorted node lists, ordered by smallest node.
  std::vector<std::vector<int>> Components() const {
    std::vector<int> label(num_nodes_, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < num_nodes_; ++s) {
      if (label[s] >= 0) continue;
      std::vector<int> comp = {s}, stack = {s};
      label[s] = static_cast<int>(out.size());
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbours_[v]) {
          if (label[w] < 0) {
            label[w] = label[s];
            comp.push_back(w);
            stack.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(comp);
    }
    return out;
  }

  bool IsCycle() const {
    if (num_nodes_ < 3) return false;
    for (int v = 0; v < num_nodes_; ++v) {
      if (degree(v) != 2) return false;
    }
    return Components().size() == 1;
  }
  bool IsClique() const {
    return num_edges() == num_nodes_ * (num_nodes_ - 1) / 2;
  }
  bool IsForest() const {
    return num_edges() + static_cast<int>(Components().size()) == num_nodes_;
  }

  static Graph Cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
    return Graph(n, e);
  }
  static Graph Clique(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    }
    return Graph(n, e);
  }
  static Graph Star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= leaves; ++v) e.push_back({0, v});
    return Graph(leaves + 1, e);
  }

 private:
  int num_nodes_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> neighbours_;
};

// Colour per node.
using Coloring = std::vector<int>;

struct GraphColoringInstance {
  Graph graph;
  // Allowed colours per node; empty means the default {1, 2}.
  std::vector<std::vector<int>> colour_sets;

  explicit GraphColoringInstance(Graph g,
                                 std::vector<std::vector<int>> colours = {})
      : graph(std::move(g)), colour_sets(std::move(colours)) {
    if (colour_sets.empty()) {
      colour_sets.assign(graph.num_nodes(), {1, 2});
    }
    if (static_cast<int>(colour_sets.size()) != graph.num_nodes()) {
      throw InvalidInput("need one colour set per node");
    }
    for (auto& c : colour_sets) {
      if (c.empty()) throw InvalidInput("empty colour set");
      std::sort(c.begin(), c.end());
      if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
        throw InvalidInput("colour set repeats a colour");
      }
    }
  }

  int num_nodes() const { return graph.num_nodes(); }

  bool TwoColour() const {
    for (const auto& c : colour_sets) {
      if (c != std::vector<int>{1, 2}) return false;
    }
    return true;
  }
  bool CommonColours() const {
    for (const auto& c : colour_sets) {
      if (c != colour_sets[0]) return false;
    }
    return true;
  }

  void CheckColoring(const Coloring& col) const {
    if (static_cast<int>(col.size()) != num_nodes()) {
      throw InvalidInput("colouring has the wrong length");
    }
    for (int v = 0; v < num_nodes(); ++v) {
      if (!std::binary_search(colour_sets[v].begin(), colour_sets[v].end(), col[v])) {
        throw InvalidInput("node " + std::to_string(v) + " uses a colour outside its set");
      }
    }
  }

  int SameColour(const Coloring& col, int v, int colour) const {
    int same = 0;
    for (int w : graph.neighbours(v)) same += col[w] == colour;
    return same;
  }

  // Colours in v's set maximizing same-coloured neighbours.
  std::vector<int> BestColours(const Coloring& col, int v) const {
    int best = -1;
    std::vector<int> out;
    for (int c : colour_sets[v]) {
      int same = SameColour(col, v, c);
      if (same > best) {
        best = same;
        out = {c};
      } else if (same == best) {
        out.push_back(c);
      }
    }
    return out;
  }
  bool IsBestResponse(const Coloring& col, int v) const {
    int current = SameColour(col, v, col[v]);
    for (int c : colour_sets[v]) {
      if (SameColour(col, v, c) > current) return false;
    }
    return true;
  }
  bool IsNashEquilibrium(const Coloring& col) const {
    for (int v = 0; v < num_nodes(); ++v) {
      if (!IsBestResponse(col, v)) return false;
    }
    return true;
  }
  int SocialWelfare(const Coloring& col) const {
    int total = 0;
    for (auto [u, v] : graph.edges()) total += col[u] == col[v] ? 2 : 0;
    return total;
  }
};

inline Game<Rational> CoordinationToGame(const GraphColoringInstance& inst) {
  std::vector<int> shape;
  for (const auto& c : inst.colour_sets) shape.push_back(static_cast<int>(c.size()));
  CountProfiles(shape);
  int n = inst.num_nodes();
  return Game<Rational>::FromFunction(
      Convention::kMaximize, shape, [&](const Profile& p) {
        Coloring col(n);
        for (int v = 0; v < n; ++v) col[v] = inst.colour_sets[v][p[v]];
        std::vector<Rational> u(n);
        for (int v = 0; v < n; ++v) u[v] = inst.SameColour(col, v, col[v]);
        return u;
      });
}

inline Profile ColoringToProfile(const GraphColoringInstance& inst,
                                 const Coloring& col) {
  inst.CheckColoring(col);
  std::vector<int> p;
  for (int v = 0; v < inst.num_nodes(); ++v) {
    const auto& set = inst.colour_sets[v];
    p.push_back(static_cast<int>(std::lower_bound(set.begin(), set.end(), col[v]) - set.begin()));
  }
  return Profile(p);
}

// Least same-colour count a stable transition allows at a node of degree d.
inline int StableThreshold(int degree) {
  return degree == 0 ? -1 : (degree - 1) / 2;
}
inline int NashThreshold(int degree) { return (degree + 1) / 2; }

inline bool CheckStableTransitionFast(const GraphColoringInstance& inst,
                                      const Coloring& col) {
  if (!inst.TwoColour()) throw NotTwoColour("fast check needs colour sets {1,2}");
  inst.CheckColoring(col);
  const Graph& g = inst.graph;
  int n = g.num_nodes();
  std::vector<int> same(n);
  for (int v = 0; v < n; ++v) {
    same[v] = inst.SameColour(col, v, col[v]);
    if (same[v] < StableThreshold(g.degree(v))) return false;
  }
  auto best = [&](int v) { return 2 * same[v] >= g.degree(v); };
  for (int v = 0; v < n; ++v) {
    if (same[v] != StableThreshold(g.degree(v)) || best(v)) continue;
    bool helped = false;
    for (int w : g.neighbours(v)) {
      if (col[w] != col[v] && !best(w)) {
        helped = true;
        break;
      }
    }
    if (!helped) return false;
  }
  return true;
}

// Definition-level stability check computed on the graph. Also verifies that
// the colouring is a transition of the pure equilibria.
inline bool CheckStableTransitionExact(const GraphColoringInstance& inst,
                                       const Coloring& col,
                                       StableVariant variant = StableVariant::kStrict) {
  inst.CheckColoring(col);
  if (!inst.CommonColours()) {
    // Monochromatic colourings need not exist; fall back to the game.
    Game<Rational> game = CoordinationToGame(inst);
    SolutionSet ne = EnumeratePureNe(game);
    if (ne.empty()) return false;
    if (!IsTransition(ne, ColoringToProfile(inst, col))) return false;
  }
  const Graph& g = inst.graph;
  int n = g.num_nodes();
  std::vector<char> best(n);
  for (int v = 0; v < n; ++v) best[v] = inst.IsBestResponse(col, v);
  Coloring moved = col;
  for (int i = 0; i < n; ++i) {
    if (best[i]) continue;
    bool helped = false;
    // Only neighbours can change i's best responses.
    for (int j : g.neighbours(i)) {
      if (variant == StableVariant::kStrict && best[j]) continue;
      for (int alt : inst.BestColours(col, j)) {
        if (alt == col[j]) continue;
        moved[j] = alt;
        helped = inst.IsBestResponse(moved, i);
        moved[j] = col[j];
        if (helped) break;
      }
      if (helped) break;
    }
    if (!helped) return false;
  }
  return true;
}

enum class Topology { kCycle, kClique, kForest };

inline std::optional<Topology> ParseTopology(const std::string& s) {
  if (s == "cycle") return Topology::kCycle;
  if (s == "clique") return Topology::kClique;
  if (s == "forest") return Topology::kForest;
  return std::nullopt;
}

namespace internal {

// Stable-not-NE colouring of one tree rooted at `root` (degree >= 1).
inline void ColourTree(const Graph& g, int root, Coloring& col) {
  std::vector<int> parent(g.num_nodes(), -1);
  std::vector<int> order = {root};
  parent[root] = root;
  for (size_t k = 0; k < order.size(); ++k) {
    for (int w : g.neighbours(order[k])) {
      if (parent[w] < 0) {
        parent[w] = order[k];
        order.push_back(w);
      }
    }
  }
  auto children = [&](int v) {
    std::vector<int> out;
    for (int w : g.neighbours(v)) {
      if (parent[w] == v && w != root) out.push_back(w);
    }
    return out;
  };
  // Colours a subtree monochromatically with its root's colour.
  auto paint = [&](int v, int colour) {
    std::vector<int> stack = {v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      col[x] = colour;
      for (int c : children(x)) stack.push_back(c);
    }
  };
  col[root] = 1;
  std::vector<int> kids = children(root);
  int keep = StableThreshold(g.degree(root));
  for (size_t k = 0; k < kids.size(); ++k) {
    int x = kids[k];
    if (static_cast<int>(k) < keep) {
      paint(x, 1);
      continue;
    }
    col[x] = 2;
    std::vector<int> grand = children(x);
    int same = static_cast<int>(grand.size()) / 2;
    for (size_t q = 0; q < grand.size(); ++q) {
      paint(grand[q], static_cast<int>(q) < same ? 2 : 1);
    }
  }
}

}  // namespace internal

inline std::optional<Coloring> ConstructStNotNe(const GraphColoringInstance& inst,
                                                Topology topology) {
  if (!inst.TwoColour()) throw NotTwoColour("constructions use colour sets {1,2}");
  const Graph& g = inst.graph;
  int n = g.num_nodes();
  Coloring col(n, 1);
  switch (topology) {
    case Topology::kCycle: {
      if (!g.IsCycle()) throw TopologyMismatch("graph is not a cycle");
      if (n < 4) return std::nullopt;
      int prev = -1, at = 0;
      for (int step = 0; step < n; ++step) {
        col[at] = step % 2 == 0 ? 1 : 2;
        int next = g.neighbours(at)[0] == prev ? g.neighbours(at)[1] : g.neighbours(at)[0];
        prev = at;
        at = next;
      }
      return col;
    }
    case Topology::kClique: {
      if (!g.IsClique()) throw TopologyMismatch("graph is not a clique");
      if (n % 2 != 0 || n == 0) return std::nullopt;
      for (int v = n / 2; v < n; ++v) col[v] = 2;
      return col;
    }
    case Topology::kForest: {
      if (!g.IsForest()) throw TopologyMismatch("graph is not a forest");
      bool any = false;
      for (const auto& comp : g.Components()) {
        if (comp.size() < 2) continue;
        int root = comp[0];
        for (int v : comp) {
          if (g.degree(v) > g.degree(root)) root = v;
        }
        internal::ColourTree(g, root, col);
        any = true;
      }
      if (!any) return std::nullopt;
      return col;
    }
  }
  return std::nullopt;
}

struct CoordinationBoundsReport {
  int num_nodes = 0;
  int num_edges = 0;
  int max_welfare = 0;
  int worst_ne_welfare = 0;
  int worst_stable_welfare = 0;
  Coloring worst_ne, worst_stable;
  Rational poa, posta;
  Rational posta_bound;
  bool poa_holds = true;
  bool posta_holds = true;
  // Every stable transition meets the floor((deg-1)/2) floor, every NE the
  // ceil(deg/2) floor.
  bool observation5_stable = true;
  bool observation5_ne = true;
  std::uint64_t num_colorings = 0, num_ne = 0, num_stable = 0;
  bool AllHold() const {
    return poa_holds && posta_holds && observation5_stable && observation5_ne;
  }
};

// Exhaustive check over all two-colourings (bit v set = colour 2).
inline CoordinationBoundsReport EfficiencyBoundsFromMasks(
    int n, const std::vector<std::uint32_t>& adjacency, int num_edges) {
  if (n > 30) throw TooLarge("too many nodes for colouring enumeration");
  if (num_edges == 0) throw UndefinedPrice("graph without edges has zero welfare");
  std::uint64_t count = std::uint64_t{1} << n;
  if (count > ProfileCap()) throw TooLarge("colouring space exceeds the cap");
  CoordinationBoundsReport r;
  r.num_nodes = n;
  r.num_edges = num_edges;
  r.max_welfare = 2 * num_edges;
  r.worst_ne_welfare = r.max_welfare;
  r.worst_stable_welfare = r.max_welfare;
  std::vector<int> degree(n), same(n);
  for (int v = 0; v < n; ++v) degree[v] = std::popcount(adjacency[v]);
  std::uint32_t worst_ne_mask = 0, worst_stable_mask = 0;
  for (std::uint64_t m = 0; m < count; ++m) {
    std::uint32_t mask = static_cast<std::uint32_t>(m);
    int welfare = 0;
    bool ne = true, floor_ok = true;
    std::uint32_t non_best = 0;
    for (int v = 0; v < n; ++v) {
      std::uint32_t others = (mask >> v & 1u) ? ~mask : mask;
      same[v] = degree[v] - std::popcount(adjacency[v] & others);
      welfare += same[v];
      if (2 * same[v] < degree[v]) {
        ne = false;
        non_best |= 1u << v;
      }
      if (same[v] < StableThreshold(degree[v])) floor_ok = false;
    }
    // Strict definition: a non-best-responding helper j must exist whose
    // switch makes v best respond; only an opposite neighbour flipping helps.
    bool stable = true;
    for (int v = 0; v < n && stable; ++v) {
      if (!(non_best >> v & 1u)) continue;
      std::uint32_t opposite = adjacency[v] & ((mask >> v & 1u) ? ~mask : mask);
      if ((opposite & non_best) == 0 || 2 * (same[v] + 1) < degree[v]) {
        stable = false;
      }
    }
    if (stable && !floor_ok) r.observation5_stable = false;
    ++r.num_colorings;
    if (ne) {
      ++r.num_ne;
      for (int v = 0; v < n; ++v) {
        if (same[v] < NashThreshold(degree[v])) r.observation5_ne = false;
      }
      if (welfare < r.worst_ne_welfare) {
        r.worst_ne_welfare = welfare;
        worst_ne_mask = mask;
      }
    }
    if (stable) {
      ++r.num_stable;
      if (welfare < r.worst_stable_welfare) {
        r.worst_stable_welfare = welfare;
        worst_stable_mask = mask;
      }
    }
  }
  auto decode = [&](std::uint32_t mask) {
    Coloring col(n);
    for (int v = 0; v < n; ++v) col[v] = (mask >> v & 1u) ? 2 : 1;
    return col;
  };
  r.worst_ne = decode(worst_ne_mask);
  r.worst_stable = decode(worst_stable_mask);
  r.poa = Rational(r.worst_ne_welfare, r.max_welfare);
  r.posta = Rational(r.worst_stable_welfare, r.max_welfare);
  r.posta_bound = Rational(1, 2) - Rational(n, 2 * num_edges);
  r.poa_holds = r.poa >= Rational(1, 2);
  r.posta_holds = r.posta >= r.posta_bound;
  return r;
}

inline std::vector<std::uint32_t> AdjacencyMasks(const Graph& g) {
  if (g.num_nodes() > 32) throw TooLarge("too many nodes for bitmask adjacency");
  std::vector<std::uint32_t> adj(g.num_nodes(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return adj;
}

inline CoordinationBoundsReport EfficiencyBounds(const GraphColoringInstance& inst) {
  if (!inst.TwoColour()) throw NotTwoColour("bounds need colour sets {1,2}");
  const Graph& g = inst.graph;
  return EfficiencyBoundsFromMasks(g.num_nodes(), AdjacencyMasks(g), g.num_edges());
}

}  // namespace transit

#endif  // TRANSIT_COORDINATION_H_
