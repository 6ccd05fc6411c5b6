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

#ifndef TRANSIT_CONGESTION_H_
#define TRANSIT_CONGESTION_H_

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transit/efficiency.h"
#include "transit/errors.h"
#include "transit/game.h"
#include "transit/transition.h"

namespace transit {

template <typename T>
struct CongestionGame {
  int num_resources = 0;
  // costs[j][x - 1] = c_j(x) for x = 1..n.
  std::vector<std::vector<T>> costs;
  // strategies[i][k] = resources used by strategy k of player i.
  std::vector<std::vector<std::vector<int>>> strategies;
  Convention convention = Convention::kMinimize;

  int num_players() const { return static_cast<int>(strategies.size()); }

  void Validate() const {
    int n = num_players();
    if (n == 0) throw InvalidInput("congestion game without players");
    if (static_cast<int>(costs.size()) != num_resources) {
      throw InvalidInput("expected one cost table per resource");
    }
    for (int j = 0; j < num_resources; ++j) {
      if (static_cast<int>(costs[j].size()) != n) {
        throw InvalidInput("cost table of resource " + std::to_string(j) +
                           " must list c(1..n)");
      }
      for (const T& c : costs[j]) {
        if (c < T(0)) throw InvalidInput("costs must be nonnegative");
      }
    }
    for (int i = 0; i < n; ++i) {
      if (strategies[i].empty()) {
        throw InvalidInput("player " + std::to_string(i) + " has no strategies");
      }
      for (const auto& s : strategies[i]) {
        if (s.empty()) throw InvalidInput("strategies must be nonempty subsets");
        std::vector<int> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
          throw InvalidInput("strategy repeats a resource");
        }
        for (int j : s) {
          if (j < 0 || j >= num_resources) {
            throw InvalidInput("resource index out of range");
          }
        }
      }
    }
  }

  std::vector<int> shape() const {
    std::vector<int> out;
    for (const auto& s : strategies) out.push_back(static_cast<int>(s.size()));
    return out;
  }

  // n_j(s) for every resource.
  std::vector<int> Loads(const Profile& s) const {
    std::vector<int> loads(num_resources, 0);
    for (int i = 0; i < num_players(); ++i) {
      for (int j : strategies[i][s[i]]) ++loads[j];
    }
    return loads;
  }
};

template <typename T>
Game<T> CongestionToGame(const CongestionGame<T>& cg) {
  cg.Validate();
  int n = cg.num_players();
  return Game<T>::FromFunction(cg.convention, cg.shape(), [&](const Profile& s) {
    std::vector<int> loads = cg.Loads(s);
    std::vector<T> out(n, T(0));
    for (int i = 0; i < n; ++i) {
      for (int j : cg.strategies[i][s[i]]) out[i] += cg.costs[j][loads[j] - 1];
    }
    return out;
  });
}

namespace internal {

template <typename T, typename Cmp>
bool AllPairs(const CongestionGame<T>& cg, Cmp holds) {
  int n = cg.num_players();
  for (const auto& c : cg.costs) {
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; x + y <= n; ++y) {
        if (!holds(c[x + y - 1], T(c[x - 1] + c[y - 1]))) return false;
      }
    }
  }
  return true;
}

}  // namespace internal

template <typename T>
bool IsSubadditive(const CongestionGame<T>& cg) {
  return internal::AllPairs(cg, [](const T& a, const T& b) { return Le(a, b); });
}

template <typename T>
bool IsSuperadditive(const CongestionGame<T>& cg) {
  return internal::AllPairs(cg, [](const T& a, const T& b) { return Ge(a, b); });
}

template <typename T>
bool IsNondecreasing(const CongestionGame<T>& cg) {
  for (const auto& c : cg.costs) {
    for (size_t x = 1; x < c.size(); ++x) {
      if (Lt(c[x], c[x - 1])) return false;
    }
  }
  return true;
}

template <typename T>
struct MergeLemmaReport {
  bool holds = true;
  // The lemma's hypothesis; a violation with this set is a real failure.
  bool expected_to_hold = false;
  T rhs{};
  T max_lhs{};
  std::optional<Profile> counterexample;
  std::uint64_t violations = 0;
  std::uint64_t merges = 0;
};

// Checks sw(t) <= sum of sw(s) over D for every merge t of D.
template <typename T>
MergeLemmaReport<T> VerifyMergeLemma(const CongestionGame<T>& cg,
                                     const SolutionSet& d) {
  if (cg.convention != Convention::kMinimize) {
    throw PreconditionFailed("the merge bound is stated for social cost");
  }
  Game<T> game = CongestionToGame(cg);
  d.RequireNonEmpty();
  MergeLemmaReport<T> r;
  r.expected_to_hold = IsSubadditive(cg);
  for (const Profile& s : d.members()) r.rhs += SocialValue(game, s);
  bool first = true;
  TransitionSet(d).ForEach([&](const Profile& t) {
    T value = SocialValue(game, t);
    ++r.merges;
    if (first || value > r.max_lhs) r.max_lhs = value;
    first = false;
    if (Gt(value, r.rhs)) {
      ++r.violations;
      if (!r.counterexample) r.counterexample = t;
    }
  });
  r.holds = r.violations == 0;
  return r;
}

// n players, n identical links with c(x) = x.
template <typename T>
CongestionGame<T> ParallelLinks(int n) {
  if (n < 1) throw BadParams("need at least one player");
  CongestionGame<T> cg;
  cg.num_resources = n;
  for (int j = 0; j < n; ++j) {
    std::vector<T> c;
    for (int x = 1; x <= n; ++x) c.push_back(T(x));
    cg.costs.push_back(c);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> s;
    for (int j = 0; j < n; ++j) s.push_back({j});
    cg.strategies.push_back(s);
  }
  return cg;
}

template <typename T>
bool IsParallelLinks(const CongestionGame<T>& cg) {
  int n = cg.num_players();
  if (cg.num_resources != n) return false;
  CongestionGame<T> reference = ParallelLinks<T>(n);
  return cg.costs == reference.costs && cg.strategies == reference.strategies;
}

template <typename T>
struct Theorem2Report {
  int m = 0;
  Measure<T> m_pota, poa;
  T bound{};
  bool holds = false;
  bool parallel_links = false;
  // Parallel-link closed form (m^2 + n - m) / n and whether it matched.
  T expected{};
  bool matches_formula = true;
};

// m-pota <= m * poa for D = pure NE of a subadditive cost congestion game.
template <typename T>
Theorem2Report<T> VerifyTheorem2(const CongestionGame<T>& cg, int m) {
  if (cg.convention != Convention::kMinimize) {
    throw PreconditionFailed("the bound is stated for social cost");
  }
  if (!IsSubadditive(cg)) throw PreconditionFailed("cost functions are not subadditive");
  int n = cg.num_players();
  if (m < 1 || m > n) throw BadParams("m must be in 1..n");
  Game<T> game = CongestionToGame(cg);
  SolutionSet ne = EnumeratePureNe(game);
  ne.RequireNonEmpty();
  PriceReport<T> prices = ComputePrices(game, ne);
  Theorem2Report<T> r;
  r.m = m;
  r.m_pota = prices.m_pota[m - 1];
  r.poa = prices.poa;
  r.bound = T(m) * prices.poa.value;
  r.holds = Le(r.m_pota.value, r.bound);
  r.parallel_links = IsParallelLinks(cg);
  if (r.parallel_links) {
    r.expected = T(m * m + n - m) / T(n);
    r.matches_formula = Eq(r.m_pota.value, r.expected);
  }
  return r;
}

// Exact potential test: every unilateral four-cycle has zero total gain.
template <typename T>
bool IsExactPotentialGame(const Game<T>& game, std::string* witness = nullptr) {
  int n = game.num_players();
  Profile s{std::vector<int>(n, 0)};
  do {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int a = s[i] + 1; a < game.num_strategies(i); ++a) {
          for (int b = s[j] + 1; b < game.num_strategies(j); ++b) {
            Profile x = s, y = s, z = s;
            x[i] = a;
            z[j] = b;
            y[i] = a;
            y[j] = b;
            // s -> x (i moves) -> y (j moves) -> z (i back) -> s (j back).
            T cycle = (game.Payoff(x, i) - game.Payoff(s, i)) +
                      (game.Payoff(y, j) - game.Payoff(x, j)) +
                      (game.Payoff(z, i) - game.Payoff(y, i)) +
                      (game.Payoff(s, j) - game.Payoff(z, j));
            if (!Eq(cycle, T(0))) {
              if (witness) {
                *witness = "players " + std::to_string(i) + "," +
                           std::to_string(j) + " at " + s.ToString();
              }
              return false;
            }
          }
        }
      }
    }
  } while (NextProfile(s, game.shape()));
  return true;
}

}  // namespace transit

#endif  // TRANSIT_CONGESTION_H_
