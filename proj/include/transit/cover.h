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

#ifndef TRANSIT_COVER_H_
#define TRANSIT_COVER_H_

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "transit/errors.h"
#include "transit/game.h"

namespace transit {

using Bitset = boost::dynamic_bitset<>;

// Unweighted set cover over elements 0..universe_size-1.
struct CoverInstance {
  int universe_size = 0;
  std::vector<Bitset> sets;
  // Caller-side identifier of each set (e.g. index of the solution in D).
  std::vector<int> set_ids;

  void Add(Bitset set, int id) {
    sets.push_back(std::move(set));
    set_ids.push_back(id);
  }
  bool Feasible() const {
    Bitset all(universe_size);
    for (const Bitset& s : sets) all |= s;
    return static_cast<int>(all.count()) == universe_size;
  }
};

struct CoverResult {
  // Indices into CoverInstance::sets, in selection order.
  std::vector<int> chosen;
  bool optimal = false;
  std::int64_t nodes = 0;
  int size() const { return static_cast<int>(chosen.size()); }
};

inline CoverInstance MakeCoverInstance(
    int universe_size, const std::vector<std::vector<int>>& sets) {
  CoverInstance ci;
  ci.universe_size = universe_size;
  for (size_t k = 0; k < sets.size(); ++k) {
    Bitset b(universe_size);
    for (int e : sets[k]) {
      if (e < 0 || e >= universe_size) throw InvalidInput("element out of range");
      b.set(e);
    }
    ci.Add(std::move(b), static_cast<int>(k));
  }
  return ci;
}

// Largest uncovered gain first, ties to the lowest index.
inline CoverResult GreedyCover(const CoverInstance& ci) {
  CoverResult result;
  Bitset uncovered(ci.universe_size);
  uncovered.set();
  while (uncovered.any()) {
    int best = -1;
    size_t best_gain = 0;
    for (size_t k = 0; k < ci.sets.size(); ++k) {
      size_t gain = (ci.sets[k] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(k);
      }
    }
    if (best < 0) throw Infeasible("set cover instance has no cover");
    result.chosen.push_back(best);
    uncovered -= ci.sets[best];
  }
  result.optimal = result.chosen.size() <= 1;
  return result;
}

namespace internal {

class CoverSearch {
 public:
  CoverSearch(const CoverInstance& ci, std::int64_t node_cap)
      : ci_(ci), node_cap_(node_cap) {
    containing_.resize(ci.universe_size);
    for (size_t k = 0; k < ci.sets.size(); ++k) {
      for (int e = 0; e < ci.universe_size; ++e) {
        if (ci.sets[k].test(e)) containing_[e].push_back(static_cast<int>(k));
      }
    }
  }

  CoverResult Run(CoverResult incumbent) {
    best_ = incumbent.chosen;
    Bitset uncovered(ci_.universe_size);
    uncovered.set();
    std::vector<int> chosen;
    Recurse(uncovered, chosen);
    CoverResult out;
    out.chosen = best_;
    out.optimal = !aborted_;
    out.nodes = nodes_;
    return out;
  }

 private:
  void Recurse(const Bitset& uncovered, std::vector<int>& chosen) {
    if (aborted_) return;
    if (++nodes_ > node_cap_) {
      aborted_ = true;
      return;
    }
    size_t remaining = uncovered.count();
    if (remaining == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    size_t max_gain = 0;
    for (const Bitset& s : ci_.sets) {
      max_gain = std::max(max_gain, (s & uncovered).count());
    }
    if (max_gain == 0) return;
    size_t lower = chosen.size() + (remaining + max_gain - 1) / max_gain;
    if (lower >= best_.size()) return;
    int pivot = -1;
    size_t pivot_options = 0;
    for (int e = 0; e < ci_.universe_size; ++e) {
      if (!uncovered.test(e)) continue;
      if (pivot < 0 || containing_[e].size() < pivot_options) {
        pivot = e;
        pivot_options = containing_[e].size();
      }
    }
    std::vector<std::pair<size_t, int>> branches;
    for (int k : containing_[pivot]) {
      branches.push_back({(ci_.sets[k] & uncovered).count(), k});
    }
    std::stable_sort(branches.begin(), branches.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [gain, k] : branches) {
      chosen.push_back(k);
      Recurse(uncovered - ci_.sets[k], chosen);
      chosen.pop_back();
      if (aborted_) return;
    }
  }

  const CoverInstance& ci_;
  std::int64_t node_cap_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> best_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace internal

// Branch and bound seeded by the greedy cover. When the node cap is hit the
// best cover found so far is returned with optimal = false.
inline CoverResult ExactCover(const CoverInstance& ci,
                              std::int64_t node_cap = 1'000'000) {
  CoverResult greedy = GreedyCover(ci);
  if (greedy.size() <= 1) {
    greedy.optimal = true;
    return greedy;
  }
  return internal::CoverSearch(ci, node_cap).Run(greedy);
}

// Reference solver: subsets in increasing size, lexicographic within a size.
inline CoverResult ExhaustiveCover(const CoverInstance& ci) {
  int k = static_cast<int>(ci.sets.size());
  Bitset full(ci.universe_size);
  full.set();
  if (ci.universe_size == 0) return {{}, true, 0};
  for (int size = 1; size <= k; ++size) {
    std::vector<int> idx(size);
    for (int j = 0; j < size; ++j) idx[j] = j;
    while (true) {
      Bitset cover(ci.universe_size);
      for (int j : idx) cover |= ci.sets[j];
      if (cover == full) return {idx, true, 0};
      int j = size - 1;
      while (j >= 0 && idx[j] == k - size + j) --j;
      if (j < 0) break;
      ++idx[j];
      for (int q = j + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  throw Infeasible("set cover instance has no cover");
}

// Coverage of `t` by each solution; solutions covering nothing are dropped.
inline CoverInstance ReduceToCover(const SolutionSet& d, const Profile& t) {
  d.RequireNonEmpty();
  CheckProfile(t, d.shape());
  CoverInstance ci;
  ci.universe_size = t.size();
  for (int k = 0; k < d.size(); ++k) {
    Bitset covers(t.size());
    for (int i = 0; i < t.size(); ++i) {
      if (d[k][i] == t[i]) covers.set(i);
    }
    if (covers.any()) ci.Add(std::move(covers), k);
  }
  if (!ci.Feasible()) {
    throw NotATransition(t.ToString() + " is not a transition of '" +
                         d.label() + "'");
  }
  return ci;
}

// Encodes a set cover instance as a solution set over binary players: solution
// k plays 1 exactly at the elements of set k, and t is the all-ones profile.
// Identical sets collapse into one solution; `set_of_solution` maps back.
struct EncodedCover {
  SolutionSet solutions;
  Profile target;
  std::vector<int> set_of_solution;
};

inline EncodedCover SetCoverToSolutions(const CoverInstance& ci) {
  std::vector<Profile> members;
  std::vector<int> origin;
  for (size_t k = 0; k < ci.sets.size(); ++k) {
    std::vector<int> choices(ci.universe_size, 0);
    for (int e = 0; e < ci.universe_size; ++e) choices[e] = ci.sets[k].test(e);
    Profile p(std::move(choices));
    if (std::find(members.begin(), members.end(), p) != members.end()) continue;
    members.push_back(std::move(p));
    origin.push_back(static_cast<int>(k));
  }
  std::vector<int> shape(ci.universe_size, 2);
  return {SolutionSet(shape, std::move(members), "set-cover"),
          Profile(std::vector<int>(ci.universe_size, 1)), std::move(origin)};
}

}  // namespace transit

#endif  // TRANSIT_COVER_H_
