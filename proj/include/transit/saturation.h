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

#ifndef TRANSIT_SATURATION_H_
#define TRANSIT_SATURATION_H_

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "transit/errors.h"
#include "transit/game.h"
#include "transit/transition.h"

namespace transit {

// True iff `s` is a transition of the members of `d` listed in `subset`.
inline bool IsTransitionOfSubset(const SolutionSet& d,
                                 const std::vector<int>& subset,
                                 const Profile& s) {
  if (subset.empty()) return false;
  for (int i = 0; i < s.size(); ++i) {
    bool found = false;
    for (int k : subset) {
      if (d[k][i] == s[i]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// No member of the subset is a transition of the other members.
inline bool IsIndependent(const SolutionSet& d, const std::vector<int>& subset) {
  std::vector<int> others;
  for (size_t a = 0; a < subset.size(); ++a) {
    others.clear();
    for (size_t b = 0; b < subset.size(); ++b) {
      if (b != a) others.push_back(subset[b]);
    }
    if (IsTransitionOfSubset(d, others, d[subset[a]])) return false;
  }
  return true;
}

struct SaturationResult {
  int m = 0;
  std::vector<int> basis;
};

// Grows an independent set greedily in `order` (default: index order) and
// reports its size as the saturation degree.
inline SaturationResult SaturationDegree(const SolutionSet& d,
                                         std::vector<int> order = {}) {
  d.RequireNonEmpty();
  if (order.empty()) {
    order.resize(d.size());
    std::iota(order.begin(), order.end(), 0);
  }
  SaturationResult result;
  for (int k : order) {
    result.basis.push_back(k);
    if (!IsIndependent(d, result.basis)) result.basis.pop_back();
  }
  result.m = static_cast<int>(result.basis.size());
  return result;
}

// Reference value: the largest transition degree over T(D), which is the
// least m with T(D, m) = T(D).
inline int MinimumSaturationDegree(const SolutionSet& d) {
  int worst = 1;
  TransitionSet(d).ForEach([&](const Profile& s) {
    if (!d.Contains(s)) worst = std::max(worst, TransitionDegree(d, s).degree);
  });
  return worst;
}

// Sizes of all inclusion-maximal independent subsets (exhaustive, |D| <= 20).
inline std::set<int> MaximalIndependentSetSizes(const SolutionSet& d) {
  int k = d.size();
  if (k > 20) throw TooLarge("too many solutions for subset enumeration");
  std::vector<char> independent(1u << k, 0);
  std::vector<int> subset;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    subset.clear();
    for (int b = 0; b < k; ++b) {
      if (mask >> b & 1u) subset.push_back(b);
    }
    independent[mask] = IsIndependent(d, subset);
  }
  std::set<int> sizes;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (!independent[mask]) continue;
    bool maximal = true;
    for (int b = 0; b < k && maximal; ++b) {
      if (!(mask >> b & 1u) && independent[mask | (1u << b)]) maximal = false;
    }
    if (maximal) sizes.insert(__builtin_popcount(mask));
  }
  return sizes;
}

}  // namespace transit

#endif  // TRANSIT_SATURATION_H_
