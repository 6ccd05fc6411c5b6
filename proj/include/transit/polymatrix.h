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

#ifndef TRANSIT_POLYMATRIX_H_
#define TRANSIT_POLYMATRIX_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "transit/efficiency.h"
#include "transit/errors.h"
#include "transit/game.h"
#include "transit/transition.h"

namespace transit {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// u_i(s) = sum over j != i of U_{i,j}(s_i, s_j). Missing pairs are zero.
template <typename T>
struct PolymatrixGame {
  std::vector<int> shape;
  std::map<std::pair<int, int>, Matrix<T>> matrices;

  int num_players() const { return static_cast<int>(shape.size()); }

  T Entry(int i, int j, int a, int b) const {
    auto it = matrices.find({i, j});
    return it == matrices.end() ? T(0) : it->second[a][b];
  }

  Matrix<T> Get(int i, int j) const {
    auto it = matrices.find({i, j});
    if (it != matrices.end()) return it->second;
    return Matrix<T>(shape[i], std::vector<T>(shape[j], T(0)));
  }

  void Validate() const {
    if (shape.empty()) throw InvalidInput("polymatrix game without players");
    for (const auto& [key, m] : matrices) {
      auto [i, j] = key;
      if (i < 0 || j < 0 || i >= num_players() || j >= num_players() || i == j) {
        throw InvalidInput("bad matrix key " + std::to_string(i) + "," +
                           std::to_string(j));
      }
      if (static_cast<int>(m.size()) != shape[i]) {
        throw InvalidInput("matrix rows do not match player " + std::to_string(i));
      }
      for (const auto& row : m) {
        if (static_cast<int>(row.size()) != shape[j]) {
          throw InvalidInput("matrix columns do not match player " +
                             std::to_string(j));
        }
      }
    }
  }

  bool Nonnegative() const {
    for (const auto& [key, m] : matrices) {
      for (const auto& row : m) {
        for (const T& v : row) {
          if (v < T(0)) return false;
        }
      }
    }
    return true;
  }
};

template <typename T>
Game<T> PolymatrixToGame(const PolymatrixGame<T>& pg) {
  pg.Validate();
  int n = pg.num_players();
  return Game<T>::FromFunction(Convention::kMaximize, pg.shape,
                               [&](const Profile& s) {
                                 std::vector<T> u(n, T(0));
                                 for (const auto& [key, m] : pg.matrices) {
                                   u[key.first] += m[s[key.first]][s[key.second]];
                                 }
                                 return u;
                               });
}

struct SymmetryReport {
  bool part1 = false;
  bool part2 = false;
  bool regular = false;
  bool symmetric() const { return part1 && part2; }
  std::vector<std::string> witnesses;
};

// Both symmetry parts over the whole game, and regularity over T(D) and D.
template <typename T>
SymmetryReport CheckSymmetryAndRegularity(const PolymatrixGame<T>& pg,
                                          const SolutionSet& d) {
  pg.Validate();
  int n = pg.num_players();
  SymmetryReport r;
  r.part1 = true;
  for (int i = 0; i < n && r.part1; ++i) {
    Matrix<T> first;
    int first_j = -1;
    for (int j = 0; j < n && r.part1; ++j) {
      if (j == i) continue;
      Matrix<T> m = pg.Get(i, j);
      if (first_j < 0) {
        first = m;
        first_j = j;
      } else if (m != first) {
        r.part1 = false;
        r.witnesses.push_back("part1: U_" + std::to_string(i) + "," +
                              std::to_string(first_j) + " != U_" +
                              std::to_string(i) + "," + std::to_string(j));
      }
    }
  }

  Game<T> game = PolymatrixToGame(pg);
  std::vector<T> sw = SocialValues(game);
  r.part2 = true;
  for (std::uint64_t a = 0; a < game.num_profiles() && r.part2; ++a) {
    for (std::uint64_t b = 0; b < game.num_profiles() && r.part2; ++b) {
      if (!Ge(sw[a], sw[b])) continue;
      for (int i = 0; i < n; ++i) {
        if (!Ge(game.Payoff(a, i), game.Payoff(b, i))) {
          r.part2 = false;
          r.witnesses.push_back("part2: player " + std::to_string(i) + " at " +
                                game.ProfileAt(a).ToString() + " vs " +
                                game.ProfileAt(b).ToString());
          break;
        }
      }
    }
  }

  d.RequireNonEmpty();
  // Largest entry of each U_{i,j}.
  std::map<std::pair<int, int>, T> peak;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix<T> m = pg.Get(i, j);
      T best = m[0][0];
      for (const auto& row : m) {
        for (const T& v : row) best = std::max<T>(best, v);
      }
      peak[{i, j}] = best;
    }
  }
  r.regular = true;
  TransitionSet(d).ForEach([&](const Profile& t) {
    if (!r.regular) return;
    for (const Profile& s : d.members()) {
      for (int i = 0; i < n; ++i) {
        if (t[i] == s[i]) continue;
        T lhs(0);
        for (int k = 0; k < n; ++k) {
          if (k == i || t[k] == s[k]) continue;
          lhs += pg.Entry(i, k, s[i], t[k]);
        }
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          if (Lt(lhs, T(2 * peak[{i, j}]))) {
            r.regular = false;
            r.witnesses.push_back("regularity: t=" + t.ToString() + " s=" +
                                  s.ToString() + " i=" + std::to_string(i) +
                                  " j=" + std::to_string(j));
            return;
          }
        }
      }
    }
  });
  return r;
}

inline bool IsSymmetricProfile(const Profile& s) {
  for (int i = 1; i < s.size(); ++i) {
    if (s[i] != s[0]) return false;
  }
  return true;
}

template <typename T>
struct Theorem1Report {
  int m = 0;
  Measure<T> m_posta, poa;
  T bound{};
  bool holds = true;
  // True when ST(D) within T(D,m) is empty and nothing is asserted.
  bool vacuous = false;
};

// m-posta >= poa / m for a symmetric D of a nonnegative symmetric regular
// polymatrix game.
template <typename T>
Theorem1Report<T> VerifyTheorem1(const PolymatrixGame<T>& pg,
                                 const SolutionSet& d, int m,
                                 StableVariant variant = StableVariant::kStrict) {
  d.RequireNonEmpty();
  if (m < 1 || m > pg.num_players()) throw BadParams("m must be in 1..n");
  std::vector<std::string> failed;
  if (!pg.Nonnegative()) failed.push_back("nonnegative");
  for (const Profile& s : d.members()) {
    if (!IsSymmetricProfile(s)) {
      failed.push_back("symmetric D (" + s.ToString() + ")");
      break;
    }
  }
  SymmetryReport check = CheckSymmetryAndRegularity(pg, d);
  if (!check.part1) failed.push_back("symmetry part 1");
  if (!check.part2) failed.push_back("symmetry part 2");
  if (!check.regular) failed.push_back("regularity");
  if (!failed.empty()) {
    std::string msg = "hypotheses violated:";
    for (const auto& f : failed) msg += " " + f;
    throw PreconditionFailed(msg);
  }
  Game<T> game = PolymatrixToGame(pg);
  PriceReport<T> prices = ComputePrices(game, d, variant);
  Theorem1Report<T> r;
  r.m = m;
  r.m_posta = prices.m_posta[m - 1];
  r.poa = prices.poa;
  r.bound = prices.poa.value / T(m);
  r.vacuous = !r.m_posta.defined;
  r.holds = r.vacuous || Ge(r.m_posta.value, r.bound);
  return r;
}

struct PolymatrixGeneratorOptions {
  int num_players = 3;
  int num_strategies = 2;
  int max_entry = 3;
  int max_attempts = 100000;
};

template <typename T>
struct GeneratedPolymatrix {
  PolymatrixGame<T> game;
  SolutionSet solutions;
  int attempts = 0;
};

// Rejection sampling: per-player matrix U_i shared by all opponents, so part
// 1 holds by construction; D is a random nonempty set of symmetric profiles.
template <typename T, typename Rng>
GeneratedPolymatrix<T> GeneratePolymatrix(const PolymatrixGeneratorOptions& opt,
                                          Rng& rng) {
  int n = opt.num_players, k = opt.num_strategies;
  if (n < 2 || k < 1) throw BadParams("need n >= 2 players and k >= 1 strategies");
  std::uniform_int_distribution<int> entry(0, opt.max_entry);
  std::uniform_int_distribution<int> mask_dist(1, (1 << k) - 1);
  for (int attempt = 1; attempt <= opt.max_attempts; ++attempt) {
    PolymatrixGame<T> pg;
    pg.shape.assign(n, k);
    for (int i = 0; i < n; ++i) {
      Matrix<T> u(k, std::vector<T>(k));
      for (auto& row : u) {
        for (auto& v : row) v = T(entry(rng));
      }
      for (int j = 0; j < n; ++j) {
        if (j != i) pg.matrices[{i, j}] = u;
      }
    }
    // An all-zero game has no defined prices.
    bool positive = false;
    for (const auto& [key, m] : pg.matrices) {
      for (const auto& row : m) {
        for (const T& v : row) positive = positive || Gt(v, T(0));
      }
    }
    if (!positive) continue;
    int mask = mask_dist(rng);
    std::vector<Profile> members;
    for (int a = 0; a < k; ++a) {
      if (mask >> a & 1) members.push_back(Profile(std::vector<int>(n, a)));
    }
    SolutionSet d(pg.shape, members, "symmetric");
    SymmetryReport check = CheckSymmetryAndRegularity(pg, d);
    if (check.symmetric() && check.regular) return {pg, d, attempt};
  }
  throw Infeasible("no polymatrix instance passed the hypothesis checks");
}

}  // namespace transit

#endif  // TRANSIT_POLYMATRIX_H_
