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

#ifndef TRANSIT_TRANSITION_H_
#define TRANSIT_TRANSITION_H_

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "transit/cover.h"
#include "transit/errors.h"
#include "transit/game.h"

namespace transit {

// T(D): the product of the per-player projections of D.
class TransitionSet {
 public:
  explicit TransitionSet(const SolutionSet& d) : shape_(d.shape()) {
    d.RequireNonEmpty();
    projections_.resize(d.num_players());
    for (int i = 0; i < d.num_players(); ++i) {
      std::set<int> values;
      for (const Profile& p : d.members()) values.insert(p[i]);
      projections_[i].assign(values.begin(), values.end());
    }
  }

  const std::vector<std::vector<int>>& projections() const {
    return projections_;
  }

  bool Contains(const Profile& s) const {
    if (s.size() != static_cast<int>(projections_.size())) return false;
    for (int i = 0; i < s.size(); ++i) {
      if (!std::binary_search(projections_[i].begin(), projections_[i].end(),
                              s[i])) {
        return false;
      }
    }
    return true;
  }

  std::uint64_t size() const {
    std::vector<int> sizes;
    for (const auto& proj : projections_) sizes.push_back(proj.size());
    return CountProfiles(sizes);
  }

  // Visits members in lexicographic order.
  template <typename F>
  void ForEach(F&& visit) const {
    size();
    int n = static_cast<int>(projections_.size());
    std::vector<int> pos(n, 0);
    Profile s{std::vector<int>(n)};
    for (int i = 0; i < n; ++i) s[i] = projections_[i][0];
    while (true) {
      visit(static_cast<const Profile&>(s));
      int i = n - 1;
      for (; i >= 0; --i) {
        if (++pos[i] < static_cast<int>(projections_[i].size())) {
          s[i] = projections_[i][pos[i]];
          break;
        }
        pos[i] = 0;
        s[i] = projections_[i][0];
      }
      if (i < 0) return;
    }
  }

  std::vector<Profile> Materialize() const {
    std::vector<Profile> out;
    out.reserve(size());
    ForEach([&](const Profile& s) { out.push_back(s); });
    return out;
  }

 private:
  std::vector<int> shape_;
  std::vector<std::vector<int>> projections_;
};

inline bool IsTransition(const SolutionSet& d, const Profile& s) {
  d.RequireNonEmpty();
  CheckProfile(s, d.shape());
  for (int i = 0; i < s.size(); ++i) {
    bool found = false;
    for (const Profile& p : d.members()) {
      if (p[i] == s[i]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Transition set of an arbitrary list of profiles.
inline std::vector<Profile> MergeSet(const std::vector<Profile>& profiles) {
  if (profiles.empty()) throw EmptySolutionSet("merge of an empty list");
  std::vector<int> shape(profiles[0].size(), 0);
  for (const Profile& p : profiles) {
    if (p.size() != static_cast<int>(shape.size())) {
      throw InvalidInput("profiles of different lengths");
    }
    for (int i = 0; i < p.size(); ++i) shape[i] = std::max(shape[i], p[i] + 1);
  }
  std::set<Profile> unique(profiles.begin(), profiles.end());
  SolutionSet d(shape, {unique.begin(), unique.end()}, "merge");
  return TransitionSet(d).Materialize();
}

enum class DegreeMode { kExact, kGreedy };

struct DegreeWitness {
  Profile profile;
  int degree = 0;
  // Indices into D.
  std::vector<int> witnesses;
  bool exact = false;
};

inline DegreeWitness TransitionDegree(const SolutionSet& d, const Profile& s,
                                      DegreeMode mode = DegreeMode::kExact) {
  CoverInstance ci = ReduceToCover(d, s);
  CoverResult cover =
      mode == DegreeMode::kExact ? ExactCover(ci) : GreedyCover(ci);
  DegreeWitness w;
  w.profile = s;
  w.degree = cover.size();
  for (int k : cover.chosen) w.witnesses.push_back(ci.set_ids[k]);
  std::sort(w.witnesses.begin(), w.witnesses.end());
  w.exact = mode == DegreeMode::kExact && cover.optimal;
  return w;
}

// Visits every profile of T(D, m) in lexicographic order.
template <typename F>
void ForEachMTransition(const SolutionSet& d, int m, F&& visit) {
  if (m < 1) throw BadParams("m must be at least 1");
  TransitionSet t(d);
  t.ForEach([&](const Profile& s) {
    if (m >= s.size() || d.Contains(s) ||
        TransitionDegree(d, s).degree <= m) {
      visit(s);
    }
  });
}

inline std::vector<Profile> MTransitionSet(const SolutionSet& d, int m) {
  std::vector<Profile> out;
  ForEachMTransition(d, m, [&](const Profile& s) { out.push_back(s); });
  return out;
}

enum class StableVariant { kStrict, kWeak };

inline const char* StableVariantName(StableVariant v) {
  return v == StableVariant::kStrict ? "strict" : "weak";
}

// Stability test assuming s is already known to be a transition.
template <typename T>
bool IsStableProfile(const Game<T>& game, const Profile& s,
                     StableVariant variant) {
  int n = game.num_players();
  std::vector<char> best(n);
  std::vector<std::vector<int>> responses(n);
  for (int j = 0; j < n; ++j) {
    responses[j] = BestResponses(game, j, s);
    best[j] = std::binary_search(responses[j].begin(), responses[j].end(), s[j]);
  }
  Profile moved = s;
  for (int i = 0; i < n; ++i) {
    if (best[i]) continue;
    bool helped = false;
    for (int j = 0; j < n && !helped; ++j) {
      if (j == i) continue;
      if (variant == StableVariant::kStrict && best[j]) continue;
      for (int alt : responses[j]) {
        if (alt == s[j]) continue;
        moved[j] = alt;
        helped = IsBestResponse(game, i, moved);
        moved[j] = s[j];
        if (helped) break;
      }
    }
    if (!helped) return false;
  }
  return true;
}

template <typename T>
bool IsStableTransition(const Game<T>& game, const SolutionSet& d,
                        const Profile& s,
                        StableVariant variant = StableVariant::kStrict) {
  if (!IsTransition(d, s)) return false;
  return IsStableProfile(game, s, variant);
}

template <typename T>
std::vector<Profile> StableTransitionSet(
    const Game<T>& game, const SolutionSet& d,
    StableVariant variant = StableVariant::kStrict) {
  std::vector<Profile> out;
  TransitionSet(d).ForEach([&](const Profile& s) {
    if (IsStableProfile(game, s, variant)) out.push_back(s);
  });
  return out;
}

}  // namespace transit

#endif  // TRANSIT_TRANSITION_H_
