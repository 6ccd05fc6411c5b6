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

#ifndef TRANSIT_GAME_H_
#define TRANSIT_GAME_H_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "transit/errors.h"
#include "transit/number.h"

namespace transit {

enum class Convention { kMaximize, kMinimize };

inline const char* ConventionName(Convention c) {
  return c == Convention::kMaximize ? "max" : "min";
}

// One strategy index per player.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<int> choices) : choices_(std::move(choices)) {}
  Profile(std::initializer_list<int> choices) : choices_(choices) {}

  int size() const { return static_cast<int>(choices_.size()); }
  int operator[](int i) const { return choices_[i]; }
  int& operator[](int i) { return choices_[i]; }
  const std::vector<int>& choices() const { return choices_; }
  auto begin() const { return choices_.begin(); }
  auto end() const { return choices_.end(); }

  std::string ToString() const {
    std::string out = "(";
    for (int i = 0; i < size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(choices_[i]);
    }
    return out + ")";
  }

  friend auto operator<=>(const Profile&, const Profile&) = default;
  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<int> choices_;
};

// Number of profiles of a shape, throwing TooLarge above `cap`.
inline std::uint64_t CountProfiles(const std::vector<int>& shape,
                                   std::uint64_t cap = ProfileCap()) {
  std::uint64_t count = 1;
  for (int size : shape) {
    if (size <= 0) throw InvalidInput("empty strategy set");
    if (count > cap / static_cast<std::uint64_t>(size)) {
      throw TooLarge("profile space exceeds cap of " + std::to_string(cap));
    }
    count *= size;
  }
  return count;
}

// Odometer step in lexicographic order, last player fastest.
inline bool NextProfile(Profile& p, const std::vector<int>& shape) {
  for (int i = p.size() - 1; i >= 0; --i) {
    if (++p[i] < shape[i]) return true;
    p[i] = 0;
  }
  return false;
}

inline void CheckProfile(const Profile& p, const std::vector<int>& shape) {
  if (p.size() != static_cast<int>(shape.size())) {
    throw InvalidInput("profile " + p.ToString() + " has wrong length");
  }
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= shape[i]) {
      throw InvalidInput("profile " + p.ToString() + " out of range");
    }
  }
}

// Finite strategic-form game stored as a dense payoff tensor.
template <typename T>
class Game {
 public:
  using Scalar = T;

  Game(Convention convention, std::vector<int> shape, std::vector<T> payoffs)
      : convention_(convention),
        shape_(std::move(shape)),
        payoffs_(std::move(payoffs)) {
    if (shape_.empty()) throw InvalidInput("a game needs at least one player");
    num_profiles_ = CountProfiles(shape_);
    if (payoffs_.size() != num_profiles_ * shape_.size()) {
      throw InvalidInput("payoff tensor has " +
                         std::to_string(payoffs_.size()) + " entries, expected " +
                         std::to_string(num_profiles_ * shape_.size()));
    }
    strides_.assign(shape_.size(), 1);
    for (int i = static_cast<int>(shape_.size()) - 2; i >= 0; --i) {
      strides_[i] = strides_[i + 1] * shape_[i + 1];
    }
    for (size_t i = 0; i < shape_.size(); ++i) {
      player_names_.push_back(std::to_string(i));
      std::vector<std::string> names;
      for (int k = 0; k < shape_[i]; ++k) names.push_back(std::to_string(k));
      strategy_names_.push_back(std::move(names));
    }
  }

  static Game FromFunction(
      Convention convention, const std::vector<int>& shape,
      const std::function<std::vector<T>(const Profile&)>& payoff) {
    std::uint64_t count = CountProfiles(shape);
    std::vector<T> payoffs;
    payoffs.reserve(count * shape.size());
    Profile p{std::vector<int>(shape.size(), 0)};
    do {
      std::vector<T> values = payoff(p);
      if (values.size() != shape.size()) {
        throw InvalidInput("payoff function returned wrong arity");
      }
      for (auto& v : values) payoffs.push_back(std::move(v));
    } while (NextProfile(p, shape));
    return Game(convention, shape, std::move(payoffs));
  }

  Convention convention() const { return convention_; }
  int num_players() const { return static_cast<int>(shape_.size()); }
  int num_strategies(int player) const { return shape_[player]; }
  const std::vector<int>& shape() const { return shape_; }
  std::uint64_t num_profiles() const { return num_profiles_; }

  std::uint64_t Index(const Profile& p) const {
    std::uint64_t index = 0;
    for (int i = 0; i < num_players(); ++i) index += strides_[i] * p[i];
    return index;
  }

  Profile ProfileAt(std::uint64_t index) const {
    std::vector<int> choices(shape_.size());
    for (int i = 0; i < num_players(); ++i) {
      choices[i] = static_cast<int>(index / strides_[i]);
      index %= strides_[i];
    }
    return Profile(std::move(choices));
  }

  const T& Payoff(std::uint64_t index, int player) const {
    return payoffs_[index * shape_.size() + player];
  }
  const T& Payoff(const Profile& p, int player) const {
    return Payoff(Index(p), player);
  }
  const std::vector<T>& payoffs() const { return payoffs_; }

  // Payoff of `player` when it switches to `strategy` in profile `p`.
  const T& DeviationPayoff(const Profile& p, int player, int strategy) const {
    std::uint64_t index = Index(p) +
                          strides_[player] * (strategy - p[player]);
    return Payoff(index, player);
  }

  // True iff `a` is strictly preferred to `b` under the convention.
  bool Better(const T& a, const T& b) const {
    return convention_ == Convention::kMaximize ? Gt(a, b) : Lt(a, b);
  }

  const std::vector<std::string>& player_names() const { return player_names_; }
  const std::vector<std::vector<std::string>>& strategy_names() const {
    return strategy_names_;
  }
  void set_names(std::vector<std::string> players,
                 std::vector<std::vector<std::string>> strategies) {
    if (players.size() != shape_.size() || strategies.size() != shape_.size()) {
      throw InvalidInput("name lists do not match the player count");
    }
    for (size_t i = 0; i < shape_.size(); ++i) {
      if (static_cast<int>(strategies[i].size()) != shape_[i]) {
        throw InvalidInput("strategy names do not match player " +
                           std::to_string(i));
      }
    }
    player_names_ = std::move(players);
    strategy_names_ = std::move(strategies);
  }

  template <typename U, typename F>
  Game<U> Convert(F&& convert) const {
    std::vector<U> payoffs;
    payoffs.reserve(payoffs_.size());
    for (const T& v : payoffs_) payoffs.push_back(convert(v));
    Game<U> out(convention_, shape_, std::move(payoffs));
    out.set_names(player_names_, strategy_names_);
    return out;
  }

 private:
  Convention convention_;
  std::vector<int> shape_;
  std::vector<T> payoffs_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t num_profiles_ = 0;
  std::vector<std::string> player_names_;
  std::vector<std::vector<std::string>> strategy_names_;
};

// Finite list of distinct profiles designated as solutions.
class SolutionSet {
 public:
  SolutionSet(std::vector<int> shape, std::vector<Profile> members,
              std::string label = "user")
      : shape_(std::move(shape)),
        members_(std::move(members)),
        label_(std::move(label)) {
    std::set<Profile> seen;
    for (const Profile& p : members_) {
      CheckProfile(p, shape_);
      if (!seen.insert(p).second) {
        throw InvalidInput("duplicate solution " + p.ToString());
      }
    }
  }

  const std::vector<int>& shape() const { return shape_; }
  int num_players() const { return static_cast<int>(shape_.size()); }
  const std::vector<Profile>& members() const { return members_; }
  const Profile& operator[](int k) const { return members_[k]; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::string& label() const { return label_; }

  void RequireNonEmpty() const {
    if (members_.empty()) {
      throw EmptySolutionSet("solution set '" + label_ + "' is empty");
    }
  }

  bool Contains(const Profile& p) const {
    return std::find(members_.begin(), members_.end(), p) != members_.end();
  }

  SolutionSet Subset(const std::vector<int>& indices,
                     std::string label = "subset") const {
    std::vector<Profile> chosen;
    for (int k : indices) chosen.push_back(members_[k]);
    return SolutionSet(shape_, std::move(chosen), std::move(label));
  }

 private:
  std::vector<int> shape_;
  std::vector<Profile> members_;
  std::string label_;
};

template <typename T>
std::vector<int> BestResponses(const Game<T>& game, int player,
                               const Profile& opponents) {
  std::vector<int> best = {0};
  const T* best_value = &game.DeviationPayoff(opponents, player, 0);
  for (int k = 1; k < game.num_strategies(player); ++k) {
    const T& value = game.DeviationPayoff(opponents, player, k);
    if (game.Better(value, *best_value)) {
      best = {k};
      best_value = &value;
    } else if (!game.Better(*best_value, value)) {
      best.push_back(k);
    }
  }
  if constexpr (!NumTraits<T>::kExact) {
    // Tolerance ties are not transitive; recompute against the true best.
    std::vector<int> filtered;
    for (int k = 0; k < game.num_strategies(player); ++k) {
      if (!game.Better(*best_value, game.DeviationPayoff(opponents, player, k))) {
        filtered.push_back(k);
      }
    }
    return filtered;
  }
  return best;
}

template <typename T>
bool IsBestResponse(const Game<T>& game, int player, const Profile& p) {
  const T& current = game.Payoff(p, player);
  for (int k = 0; k < game.num_strategies(player); ++k) {
    if (game.Better(game.DeviationPayoff(p, player, k), current)) return false;
  }
  return true;
}

// Largest unilateral improvement of `player` at `p` (0 when best responding).
template <typename T>
T DeviationGain(const Game<T>& game, int player, const Profile& p) {
  const T& current = game.Payoff(p, player);
  T gain(0);
  for (int k = 0; k < game.num_strategies(player); ++k) {
    const T& value = game.DeviationPayoff(p, player, k);
    T diff = game.convention() == Convention::kMaximize ? T(value - current)
                                                        : T(current - value);
    if (diff > gain) gain = diff;
  }
  return gain;
}

template <typename T>
bool IsEpsilonEquilibrium(const Game<T>& game, const Profile& p,
                          const T& epsilon) {
  for (int i = 0; i < game.num_players(); ++i) {
    if (Gt(DeviationGain(game, i, p), epsilon)) return false;
  }
  return true;
}

template <typename T>
SolutionSet EnumeratePureNe(const Game<T>& game, const T& epsilon = T(0)) {
  if (epsilon < T(0)) throw BadParams("epsilon must be nonnegative");
  std::vector<Profile> members;
  Profile p{std::vector<int>(game.num_players(), 0)};
  do {
    if (IsEpsilonEquilibrium(game, p, epsilon)) members.push_back(p);
  } while (NextProfile(p, game.shape()));
  std::string label = epsilon == T(0) ? "pure-NE"
                                      : "eps-NE(" + ToString(epsilon) + ")";
  if (members.empty()) label += " (empty)";
  return SolutionSet(game.shape(), std::move(members), label);
}

// Sum of payoffs: welfare under kMaximize, social cost under kMinimize.
template <typename T>
T SocialValue(const Game<T>& game, std::uint64_t index) {
  T total(0);
  for (int i = 0; i < game.num_players(); ++i) total += game.Payoff(index, i);
  return total;
}

template <typename T>
T SocialValue(const Game<T>& game, const Profile& p) {
  return SocialValue(game, game.Index(p));
}

template <typename T>
std::vector<T> SocialValues(const Game<T>& game) {
  std::vector<T> values;
  values.reserve(game.num_profiles());
  for (std::uint64_t k = 0; k < game.num_profiles(); ++k) {
    values.push_back(SocialValue(game, k));
  }
  return values;
}

template <typename T>
SolutionSet MakeSolutionSet(const Game<T>& game, std::vector<Profile> members,
                            std::string label = "user") {
  return SolutionSet(game.shape(), std::move(members), std::move(label));
}

// True iff every player's payoff vector is the same.
template <typename T>
bool HasIdenticalUtilities(const Game<T>& game) {
  for (std::uint64_t k = 0; k < game.num_profiles(); ++k) {
    for (int i = 1; i < game.num_players(); ++i) {
      if (!Eq(game.Payoff(k, i), game.Payoff(k, 0))) return false;
    }
  }
  return true;
}

}  // namespace transit

#endif  // TRANSIT_GAME_H_
