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

#ifndef TRANSIT_TESTS_TEST_UTIL_H_
#define TRANSIT_TESTS_TEST_UTIL_H_

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "transit/game.h"
#include "transit/number.h"

namespace transit::testing {

using R = Rational;

inline Game<R> TwoByTwo(std::vector<R> payoffs) {
  return Game<R>(Convention::kMaximize, {2, 2}, std::move(payoffs));
}

// Rows I, II against columns 1, 2 with (a, a) on the diagonal.
inline Game<R> Matrix2(R a = 1) { return TwoByTwo({a, a, 0, 0, 0, 0, a, a}); }

inline Game<R> Matrix5(R eps, R a) { return TwoByTwo({eps, eps, 0, 0, 0, 0, a, a}); }

inline Game<R> Matrix6(R a, R b, R c) {
  return TwoByTwo({a, a, a / c, b / c, b / c, a / c, b, b});
}

// Three binary players; (0,0,0) pays (a, 0, 0), everything else b to all.
inline Game<R> Example2(R a, R b) {
  return Game<R>::FromFunction(Convention::kMaximize, {2, 2, 2}, [&](const Profile& s) {
    if (s[0] == 0 && s[1] == 0 && s[2] == 0) return std::vector<R>{a, 0, 0};
    return std::vector<R>{b, b, b};
  });
}

// n players over n strategies; u_i = alpha_i ^ (players sharing i's choice).
inline Game<R> MatchingStrategy(const std::vector<int>& alpha) {
  int n = static_cast<int>(alpha.size());
  return Game<R>::FromFunction(Convention::kMaximize, std::vector<int>(n, n),
                               [&](const Profile& s) {
                                 std::vector<R> u(n);
                                 for (int i = 0; i < n; ++i) {
                                   int same = 0;
                                   for (int j = 0; j < n; ++j) same += s[j] == s[i];
                                   R v = 1;
                                   for (int k = 0; k < same; ++k) v *= alpha[i];
                                   u[i] = v;
                                 }
                                 return u;
                               });
}

template <typename Rng>
Game<R> RandomGame(Rng& rng, const std::vector<int>& shape, int max_payoff = 5,
                   Convention c = Convention::kMaximize, int min_payoff = 0) {
  std::uniform_int_distribution<int> payoff(min_payoff, max_payoff);
  std::uint64_t count = CountProfiles(shape) * shape.size();
  std::vector<R> p(count);
  for (auto& v : p) v = payoff(rng);
  return Game<R>(c, shape, std::move(p));
}

// `size` distinct random profiles.
template <typename Rng>
SolutionSet RandomSolutions(Rng& rng, const std::vector<int>& shape, int size) {
  std::set<std::vector<int>> seen;
  std::vector<Profile> members;
  std::uint64_t total = CountProfiles(shape);
  size = static_cast<int>(std::min<std::uint64_t>(size, total));
  while (static_cast<int>(members.size()) < size) {
    std::vector<int> c(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) {
      c[i] = std::uniform_int_distribution<int>(0, shape[i] - 1)(rng);
    }
    if (seen.insert(c).second) members.push_back(Profile(c));
  }
  return SolutionSet(shape, members, "random");
}

inline Profile P(std::initializer_list<int> c) { return Profile(c); }

}  // namespace transit::testing

#endif  // TRANSIT_TESTS_TEST_UTIL_H_
