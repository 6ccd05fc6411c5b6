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

#ifndef TRANSIT_EFFICIENCY_H_
#define TRANSIT_EFFICIENCY_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transit/errors.h"
#include "transit/game.h"
#include "transit/number.h"
#include "transit/transition.h"

namespace transit {

// A real value that may be undefined, with the profile that attains it.
template <typename T>
struct Measure {
  bool defined = false;
  T value{};
  Profile witness;
  std::string note;

  static Measure Of(T v, Profile w = {}) {
    Measure m;
    m.defined = true;
    m.value = std::move(v);
    m.witness = std::move(w);
    return m;
  }
  static Measure Undefined(std::string note) {
    Measure m;
    m.note = std::move(note);
    return m;
  }
};

template <typename T>
struct PriceReport {
  Convention convention = Convention::kMaximize;
  StableVariant variant = StableVariant::kStrict;
  int num_players = 0;
  T optimum{};
  Profile optimum_witness;
  Measure<T> poa, pos, pota, pots, posta, posts;
  // Index m - 1 for m = 1..n.
  std::vector<Measure<T>> m_pota, m_pots, m_posta, m_posts;
  std::uint64_t num_solutions = 0;
  std::uint64_t num_transitions = 0;
  std::uint64_t num_stable = 0;
  std::vector<std::uint64_t> num_m_transitions;
};

namespace internal {

// Tracks the socially worst and best value seen under a convention.
template <typename T>
class Extremes {
 public:
  explicit Extremes(Convention c) : convention_(c) {}
  void Add(const T& value, const Profile& p) {
    bool max = convention_ == Convention::kMaximize;
    if (!any_ || (max ? value < worst_ : value > worst_)) {
      worst_ = value;
      worst_profile_ = p;
    }
    if (!any_ || (max ? value > best_ : value < best_)) {
      best_ = value;
      best_profile_ = p;
    }
    any_ = true;
  }
  void Merge(const Extremes& other) {
    if (!other.any_) return;
    Add(other.worst_, other.worst_profile_);
    Add(other.best_, other.best_profile_);
  }
  bool any() const { return any_; }
  const T& worst() const { return worst_; }
  const T& best() const { return best_; }
  const Profile& worst_profile() const { return worst_profile_; }
  const Profile& best_profile() const { return best_profile_; }

 private:
  Convention convention_;
  bool any_ = false;
  T worst_{}, best_{};
  Profile worst_profile_, best_profile_;
};

// Plain minimum and maximum, independent of the convention.
template <typename T>
struct Range {
  bool any = false;
  T min{}, max{};
  void Add(const T& v) {
    if (!any || v < min) min = v;
    if (!any || v > max) max = v;
    any = true;
  }
};

template <typename T>
void CheckShape(const Game<T>& game, const SolutionSet& d) {
  if (d.shape() != game.shape()) {
    throw InvalidInput("solution set does not match the game's strategy sets");
  }
}

}  // namespace internal

// Every transition of D with its exact transition degree.
inline std::vector<std::pair<Profile, int>> TransitionsWithDegree(
    const SolutionSet& d) {
  std::vector<std::pair<Profile, int>> out;
  TransitionSet(d).ForEach([&](const Profile& s) {
    int degree = d.Contains(s) ? 1 : TransitionDegree(d, s).degree;
    out.push_back({s, degree});
  });
  return out;
}

// Optimum social value with its witness; throws UndefinedPrice if not > 0.
template <typename T>
std::pair<T, Profile> SocialOptimum(const Game<T>& game) {
  internal::Extremes<T> all(game.convention());
  for (std::uint64_t k = 0; k < game.num_profiles(); ++k) {
    all.Add(SocialValue(game, k), game.ProfileAt(k));
  }
  if (!(all.best() > T(0))) {
    throw UndefinedPrice(
        std::string("optimum social ") +
        (game.convention() == Convention::kMaximize ? "welfare" : "cost") +
        " is " + ToString(all.best()) + ", prices need a positive optimum");
  }
  return {all.best(), all.best_profile()};
}

template <typename T>
PriceReport<T> ComputePrices(const Game<T>& game, const SolutionSet& d,
                             StableVariant variant = StableVariant::kStrict) {
  d.RequireNonEmpty();
  internal::CheckShape(game, d);
  PriceReport<T> r;
  r.convention = game.convention();
  r.variant = variant;
  int n = game.num_players();
  r.num_players = n;
  std::tie(r.optimum, r.optimum_witness) = SocialOptimum(game);

  using Ext = internal::Extremes<T>;
  Ext solutions(game.convention());
  for (const Profile& p : d.members()) solutions.Add(SocialValue(game, p), p);
  Ext transitions(game.convention()), stable(game.convention());
  std::vector<Ext> by_degree(n + 1, Ext(game.convention()));
  std::vector<Ext> stable_by_degree(n + 1, Ext(game.convention()));
  std::vector<std::uint64_t> count_by_degree(n + 1, 0);
  for (const auto& [s, degree] : TransitionsWithDegree(d)) {
    T value = SocialValue(game, s);
    transitions.Add(value, s);
    by_degree[degree].Add(value, s);
    ++count_by_degree[degree];
    ++r.num_transitions;
    if (IsStableProfile(game, s, variant)) {
      stable.Add(value, s);
      stable_by_degree[degree].Add(value, s);
      ++r.num_stable;
    }
  }
  r.num_solutions = d.size();

  auto worst = [&](const Ext& e, const char* what) {
    if (!e.any()) return Measure<T>::Undefined(std::string(what) + " is empty");
    return Measure<T>::Of(e.worst() / r.optimum, e.worst_profile());
  };
  auto best = [&](const Ext& e, const char* what) {
    if (!e.any()) return Measure<T>::Undefined(std::string(what) + " is empty");
    return Measure<T>::Of(e.best() / r.optimum, e.best_profile());
  };
  r.poa = worst(solutions, "D");
  r.pos = best(solutions, "D");
  r.pota = worst(transitions, "T(D)");
  r.pots = best(transitions, "T(D)");
  r.posta = worst(stable, "ST(D)");
  r.posts = best(stable, "ST(D)");
  Ext upto(game.convention()), stable_upto(game.convention());
  std::uint64_t running = 0;
  for (int m = 1; m <= n; ++m) {
    upto.Merge(by_degree[m]);
    stable_upto.Merge(stable_by_degree[m]);
    running += count_by_degree[m];
    r.m_pota.push_back(worst(upto, "T(D,m)"));
    r.m_pots.push_back(best(upto, "T(D,m)"));
    r.m_posta.push_back(worst(stable_upto, "ST(D) within T(D,m)"));
    r.m_posts.push_back(best(stable_upto, "ST(D) within T(D,m)"));
    r.num_m_transitions.push_back(running);
  }
  return r;
}

// Least k >= 1 with num <= k * den; undefined when no such k exists.
template <typename T>
Measure<T> TightestFactor(const T& num, const T& den) {
  if (den > T(0)) {
    T ratio = num / den;
    Measure<T> m = Measure<T>::Of(ratio > T(1) ? ratio : T(1));
    if (!(ratio >= T(1))) m.note = "slack";
    return m;
  }
  if (den == T(0) && !(num > T(0))) {
    Measure<T> m = Measure<T>::Of(T(1));
    if (num < T(0)) m.note = "slack";
    return m;
  }
  return Measure<T>::Undefined("ratio " + ToString(num) + "/" + ToString(den) +
                               " has no finite bound");
}

template <typename T>
Measure<T> MaxFactor(const Measure<T>& a, const Measure<T>& b) {
  if (!a.defined) return a;
  if (!b.defined) return b;
  return a.value >= b.value ? a : b;
}

template <typename T>
struct CoordinationDependence {
  // Per player.
  std::vector<Measure<T>> alpha_lower, alpha_upper, beta;
  // Social welfare over D versus T(D).
  Measure<T> welfare_alpha_lower, welfare_alpha_upper;
  // Social welfare between T(D,k) and T(D,k+1); index k - 1.
  std::vector<Measure<T>> degree_alpha_lower, degree_alpha_upper;
  // Per player between T(D,k) and T(D,k+1): [player][k - 1].
  std::vector<std::vector<Measure<T>>> player_degree_alpha_lower,
      player_degree_alpha_upper;
};

template <typename T>
CoordinationDependence<T> ComputeCoordinationDependence(const Game<T>& game,
                                                        const SolutionSet& d) {
  d.RequireNonEmpty();
  internal::CheckShape(game, d);
  int n = game.num_players();
  using R = internal::Range<T>;
  std::vector<R> on_d(n), on_t(n);
  std::vector<std::vector<R>> by_degree(n, std::vector<R>(n + 1));
  std::vector<R> sw_by_degree(n + 1);
  R sw_d, sw_t;
  for (const Profile& p : d.members()) {
    sw_d.Add(SocialValue(game, p));
    for (int i = 0; i < n; ++i) on_d[i].Add(game.Payoff(p, i));
  }
  for (const auto& [s, degree] : TransitionsWithDegree(d)) {
    T value = SocialValue(game, s);
    sw_t.Add(value);
    sw_by_degree[degree].Add(value);
    for (int i = 0; i < n; ++i) {
      on_t[i].Add(game.Payoff(s, i));
      by_degree[i][degree].Add(game.Payoff(s, i));
    }
  }
  CoordinationDependence<T> c;
  for (int i = 0; i < n; ++i) {
    c.alpha_lower.push_back(TightestFactor(on_d[i].min, on_t[i].min));
    c.alpha_upper.push_back(TightestFactor(on_t[i].max, on_d[i].max));
    Measure<T> beta = Measure<T>::Of(T(1));
    for (const Profile& s : d.members()) {
      for (const Profile& t : d.members()) {
        if (!(SocialValue(game, s) >= SocialValue(game, t))) continue;
        beta = MaxFactor(beta, TightestFactor(game.Payoff(t, i), game.Payoff(s, i)));
      }
    }
    c.beta.push_back(beta);
  }
  c.welfare_alpha_lower = TightestFactor(sw_d.min, sw_t.min);
  c.welfare_alpha_upper = TightestFactor(sw_t.max, sw_d.max);

  // Cumulative ranges over T(D,k).
  auto cumulative = [&](const std::vector<R>& per_degree) {
    std::vector<R> out(n + 1);
    R acc;
    for (int k = 1; k <= n; ++k) {
      if (per_degree[k].any) {
        acc.Add(per_degree[k].min);
        acc.Add(per_degree[k].max);
      }
      out[k] = acc;
    }
    return out;
  };
  std::vector<R> sw_upto = cumulative(sw_by_degree);
  c.player_degree_alpha_lower.resize(n);
  c.player_degree_alpha_upper.resize(n);
  std::vector<std::vector<R>> player_upto(n);
  for (int i = 0; i < n; ++i) player_upto[i] = cumulative(by_degree[i]);
  for (int k = 1; k < n; ++k) {
    c.degree_alpha_lower.push_back(
        TightestFactor(sw_upto[k].min, sw_upto[k + 1].min));
    c.degree_alpha_upper.push_back(
        TightestFactor(sw_upto[k + 1].max, sw_upto[k].max));
    for (int i = 0; i < n; ++i) {
      c.player_degree_alpha_lower[i].push_back(
          TightestFactor(player_upto[i][k].min, player_upto[i][k + 1].min));
      c.player_degree_alpha_upper[i].push_back(
          TightestFactor(player_upto[i][k + 1].max, player_upto[i][k].max));
    }
  }
  return c;
}

template <typename T>
struct BoundRow {
  std::string name;
  std::string anchor;
  std::string inequality;
  std::vector<std::pair<std::string, Measure<T>>> constants;
  Measure<T> lhs, rhs;
  bool skipped = false;
  std::string reason;
  bool holds = true;
  T slack{};
  // Set when the statement also claims equality exactly when its hypothesis
  // is tight; false means that claim was contradicted.
  std::optional<bool> equality_consistent;
};

template <typename T>
struct BoundReport {
  PriceReport<T> prices;
  CoordinationDependence<T> dependence;
  std::vector<BoundRow<T>> rows;
  bool AllHold() const {
    for (const auto& row : rows) {
      if (!row.skipped && !row.holds) return false;
    }
    return true;
  }
};

namespace internal {

template <typename T>
BoundRow<T> MakeRow(std::string name, std::string anchor, std::string inequality,
                    const Measure<T>& lhs, const Measure<T>& rhs, bool lhs_ge_rhs,
                    std::vector<std::pair<std::string, Measure<T>>> constants) {
  BoundRow<T> row;
  row.name = std::move(name);
  row.anchor = std::move(anchor);
  row.inequality = std::move(inequality);
  row.constants = std::move(constants);
  row.lhs = lhs;
  row.rhs = rhs;
  for (const auto& [label, value] : row.constants) {
    if (!value.defined) {
      row.skipped = true;
      row.reason = "constant " + label + " undefined: " + value.note;
      return row;
    }
  }
  if (!lhs.defined || !rhs.defined) {
    row.skipped = true;
    row.reason = !lhs.defined ? lhs.note : rhs.note;
    return row;
  }
  row.slack = lhs_ge_rhs ? T(lhs.value - rhs.value) : T(rhs.value - lhs.value);
  row.holds = lhs_ge_rhs ? Ge(lhs.value, rhs.value) : Le(lhs.value, rhs.value);
  return row;
}

template <typename T>
BoundRow<T> SkippedRow(std::string name, std::string anchor,
                       std::string inequality, std::string reason) {
  BoundRow<T> row;
  row.name = std::move(name);
  row.anchor = std::move(anchor);
  row.inequality = std::move(inequality);
  row.skipped = true;
  row.reason = std::move(reason);
  return row;
}

template <typename T>
Measure<T> Scaled(const Measure<T>& price, const Measure<T>& factor,
                  bool divide) {
  if (!price.defined || !factor.defined) {
    return Measure<T>::Undefined(!price.defined ? price.note : factor.note);
  }
  return Measure<T>::Of(divide ? T(price.value / factor.value)
                               : T(price.value * factor.value));
}

template <typename T>
Measure<T> Product(const std::vector<Measure<T>>& factors, int count) {
  Measure<T> out = Measure<T>::Of(T(1));
  for (int k = 0; k < count; ++k) {
    if (!factors[k].defined) return factors[k];
    out.value *= factors[k].value;
  }
  return out;
}

}  // namespace internal

// Instantiates each conditional bound with the tightest constants and checks
// the concluded inequality against the computed prices.
template <typename T>
BoundReport<T> CheckBoundObservations(
    const Game<T>& game, const SolutionSet& d,
    StableVariant variant = StableVariant::kStrict) {
  using internal::MakeRow;
  using internal::Scaled;
  BoundReport<T> report;
  report.prices = ComputePrices(game, d, variant);
  report.dependence = ComputeCoordinationDependence(game, d);
  const PriceReport<T>& p = report.prices;
  const CoordinationDependence<T>& c = report.dependence;
  auto& rows = report.rows;
  int n = game.num_players();
  bool utility = game.convention() == Convention::kMaximize;

  // Transitions contain D, so transition prices are never better.
  rows.push_back(MakeRow<T>("observation1.anarchy", "transitions contain solutions",
                            utility ? "pota <= poa" : "pota >= poa", p.pota,
                            p.poa, !utility, {}));
  rows.push_back(MakeRow<T>("observation1.stability",
                            "transitions contain solutions",
                            utility ? "pots >= pos" : "pots <= pos", p.pots,
                            p.pos, utility, {}));
  for (int m = 1; m <= n; ++m) {
    std::string ms = std::to_string(m);
    rows.push_back(MakeRow<T>("observation1.anarchy.m=" + ms,
                              "limited transitions contain solutions",
                              utility ? "m-pota <= poa" : "m-pota >= poa",
                              p.m_pota[m - 1], p.poa, !utility, {}));
    rows.push_back(MakeRow<T>("observation1.stability.m=" + ms,
                              "limited transitions contain solutions",
                              utility ? "m-pots >= pos" : "m-pots <= pos",
                              p.m_pots[m - 1], p.pos, utility, {}));
  }
  if (!utility) {
    for (const char* name :
         {"observation2.lower", "observation2.upper", "observation3",
          "proposition1.lower", "proposition1.upper", "proposition2"}) {
      rows.push_back(internal::SkippedRow<T>(
          name, "dependence bounds", "",
          "stated for utility maximization; game uses the cost convention"));
    }
    return report;
  }

  {
    auto row = MakeRow<T>("observation2.lower", "welfare dependence, lower",
                          "pota >= poa / alpha", p.pota,
                          Scaled(p.poa, c.welfare_alpha_lower, true), true,
                          {{"alpha", c.welfare_alpha_lower}});
    if (!row.skipped) {
      bool tight = c.welfare_alpha_lower.note.empty();
      row.equality_consistent = Eq(row.lhs.value, row.rhs.value) == tight;
      row.holds = row.holds && *row.equality_consistent;
    }
    rows.push_back(row);
  }
  {
    auto row = MakeRow<T>("observation2.upper", "welfare dependence, upper",
                          "pots <= alpha * pos", p.pots,
                          Scaled(p.pos, c.welfare_alpha_upper, false), false,
                          {{"alpha", c.welfare_alpha_upper}});
    if (!row.skipped) {
      bool tight = c.welfare_alpha_upper.note.empty();
      row.equality_consistent = Eq(row.lhs.value, row.rhs.value) == tight;
      row.holds = row.holds && *row.equality_consistent;
    }
    rows.push_back(row);
  }
  for (int m = 2; m <= n; ++m) {
    std::string ms = std::to_string(m);
    Measure<T> lower = internal::Product(c.degree_alpha_lower, m - 1);
    Measure<T> upper = internal::Product(c.degree_alpha_upper, m - 1);
    auto low_row = MakeRow<T>("observation3.lower.m=" + ms,
                              "welfare dependence on transition degree, lower",
                              "m-pota >= poa / prod(alpha_k)", p.m_pota[m - 1],
                              Scaled(p.poa, lower, true), true,
                              {{"prod_alpha", lower}});
    auto up_row = MakeRow<T>("observation3.upper.m=" + ms,
                             "welfare dependence on transition degree, upper",
                             "m-pots <= prod(alpha_k) * pos", p.m_pots[m - 1],
                             Scaled(p.pos, upper, false), false,
                             {{"prod_alpha", upper}});
    bool low_tight = true, up_tight = true;
    for (int k = 0; k < m - 1; ++k) {
      low_tight = low_tight && c.degree_alpha_lower[k].note.empty();
      up_tight = up_tight && c.degree_alpha_upper[k].note.empty();
    }
    if (!low_row.skipped) {
      low_row.equality_consistent = Eq(low_row.lhs.value, low_row.rhs.value) == low_tight;
      low_row.holds = low_row.holds && *low_row.equality_consistent;
    }
    if (!up_row.skipped) {
      up_row.equality_consistent = Eq(up_row.lhs.value, up_row.rhs.value) == up_tight;
      up_row.holds = up_row.holds && *up_row.equality_consistent;
    }
    rows.push_back(low_row);
    rows.push_back(up_row);
  }

  Measure<T> alpha_lower = Measure<T>::Of(T(1));
  Measure<T> alpha_upper = Measure<T>::Of(T(1));
  Measure<T> beta = Measure<T>::Of(T(1));
  for (int i = 0; i < n; ++i) {
    alpha_lower = MaxFactor(alpha_lower, c.alpha_lower[i]);
    alpha_upper = MaxFactor(alpha_upper, c.alpha_upper[i]);
    beta = MaxFactor(beta, c.beta[i]);
  }
  Measure<T> ab_lower = Scaled(alpha_lower, beta, false);
  Measure<T> ab_upper = Scaled(alpha_upper, beta, false);
  rows.push_back(MakeRow<T>("proposition1.lower",
                            "per-player dependence and variation, lower",
                            "pota >= poa / (alpha * beta)", p.pota,
                            Scaled(p.poa, ab_lower, true), true,
                            {{"alpha", alpha_lower}, {"beta", beta}}));
  rows.push_back(MakeRow<T>("proposition1.upper",
                            "per-player dependence and variation, upper",
                            "pots <= alpha * beta * pos", p.pots,
                            Scaled(p.pos, ab_upper, false), false,
                            {{"alpha", alpha_upper}, {"beta", beta}}));
  for (int m = 2; m <= n; ++m) {
    std::string ms = std::to_string(m);
    std::vector<Measure<T>> lower_k, upper_k;
    for (int k = 0; k < m - 1; ++k) {
      Measure<T> lo = Measure<T>::Of(T(1)), hi = Measure<T>::Of(T(1));
      for (int i = 0; i < n; ++i) {
        lo = MaxFactor(lo, c.player_degree_alpha_lower[i][k]);
        hi = MaxFactor(hi, c.player_degree_alpha_upper[i][k]);
      }
      lower_k.push_back(lo);
      upper_k.push_back(hi);
    }
    Measure<T> lower = Scaled(internal::Product(lower_k, m - 1), beta, false);
    Measure<T> upper = Scaled(internal::Product(upper_k, m - 1), beta, false);
    rows.push_back(MakeRow<T>("proposition2.lower.m=" + ms,
                              "per-player degree dependence, lower",
                              "m-pota >= poa / (prod(alpha_k) * beta)",
                              p.m_pota[m - 1], Scaled(p.poa, lower, true), true,
                              {{"prod_alpha_beta", lower}}));
    rows.push_back(MakeRow<T>("proposition2.upper.m=" + ms,
                              "per-player degree dependence, upper",
                              "m-pots <= prod(alpha_k) * beta * pos",
                              p.m_pots[m - 1], Scaled(p.pos, upper, false),
                              false, {{"prod_alpha_beta", upper}}));
  }
  return report;
}

// The two-player implication that forces pots = pos for D = pure NE.
template <typename T>
bool TwoPlayerPotsCondition(const Game<T>& game, std::string* witness = nullptr) {
  if (game.num_players() != 2) {
    throw WrongArity("two-player condition needs exactly 2 players, got " +
                     std::to_string(game.num_players()));
  }
  int a = game.num_strategies(0), b = game.num_strategies(1);
  for (int x = 0; x < a; ++x) {
    for (int xp = 0; xp < a; ++xp) {
      for (int y = 0; y < b; ++y) {
        for (int yp = 0; yp < b; ++yp) {
          Profile xy{x, y}, xpy{xp, y}, xyp{x, yp};
          bool premise = !game.Better(game.Payoff(xy, 0), game.Payoff(xpy, 0)) &&
                         !game.Better(game.Payoff(xy, 1), game.Payoff(xyp, 1));
          if (!premise) continue;
          T sw = SocialValue(game, xy);
          bool conclusion = !game.Better(sw, SocialValue(game, xpy)) ||
                            !game.Better(sw, SocialValue(game, xyp));
          if (!conclusion) {
            if (witness) {
              *witness = "x=" + std::to_string(x) + " x'=" + std::to_string(xp) +
                         " y=" + std::to_string(y) + " y'=" + std::to_string(yp);
            }
            return false;
          }
        }
      }
    }
  }
  return true;
}

template <typename T>
struct TwoPlayerReport {
  bool condition = false;
  std::string witness;
  // Only meaningful when the condition holds.
  bool asserted = false;
  bool holds = true;
  Measure<T> pots, pos;
};

template <typename T>
TwoPlayerReport<T> CheckTwoPlayerPots(const Game<T>& game) {
  TwoPlayerReport<T> r;
  r.condition = TwoPlayerPotsCondition(game, &r.witness);
  if (!r.condition) return r;
  SolutionSet ne = EnumeratePureNe(game);
  if (ne.empty()) return r;
  PriceReport<T> prices = ComputePrices(game, ne);
  r.asserted = true;
  r.pots = prices.pots;
  r.pos = prices.pos;
  r.holds = Eq(prices.pots.value, prices.pos.value);
  return r;
}

template <typename T>
std::vector<T> DefaultLambdaGrid() {
  std::vector<T> grid;
  for (int k = 0; k < 64; ++k) {
    double lambda = 2.0 * std::pow(1.0 / 1024.0, (63.0 - k) / 63.0);
    grid.push_back(FromDouble<T>(lambda));
  }
  return grid;
}

template <typename T>
struct SmoothnessReport {
  T alpha{}, beta{}, lambda{}, mu{}, bound{};
  T pota{};
  int feasible_lambdas = 0;
  bool holds = true;
};

// Tightest extensive-smoothness constants over T(NE) and the resulting
// certified lower bound on pota (D = pure NE).
template <typename T>
SmoothnessReport<T> ExtensiveSmoothness(
    const Game<T>& game, const std::vector<T>& lambda_grid = DefaultLambdaGrid<T>()) {
  if (game.convention() != Convention::kMaximize) {
    throw PreconditionFailed("extensive smoothness is stated for utility games");
  }
  for (const T& v : game.payoffs()) {
    if (v < T(0)) throw PreconditionFailed("extensive smoothness needs nonnegative utilities");
  }
  SolutionSet ne = EnumeratePureNe(game);
  ne.RequireNonEmpty();
  int n = game.num_players();
  std::vector<Profile> trans = TransitionSet(ne).Materialize();
  auto [opt, opt_profile] = SocialOptimum(game);
  SmoothnessReport<T> r;

  // Condition 1.
  bool any_ratio = false;
  T alpha(0);
  for (int i = 0; i < n; ++i) {
    for (const Profile& s : trans) {
      for (const Profile& d : ne.members()) {
        if (d[i] != s[i]) continue;
        const T& den = game.Payoff(d, i);
        if (den == T(0)) continue;
        T ratio = game.Payoff(s, i) / den;
        if (!any_ratio || ratio < alpha) alpha = ratio;
        any_ratio = true;
      }
    }
  }
  r.alpha = !any_ratio ? T(1) : (alpha < T(0) ? T(0) : alpha);

  std::vector<Profile> optima;
  for (std::uint64_t k = 0; k < game.num_profiles(); ++k) {
    if (Eq(SocialValue(game, k), opt)) optima.push_back(game.ProfileAt(k));
  }
  // Condition 2.
  any_ratio = false;
  T beta(0);
  for (const Profile& star : optima) {
    for (int i = 0; i < n; ++i) {
      internal::Range<T> values;
      for (const Profile& t : trans) {
        values.Add(game.DeviationPayoff(t, i, star[i]));
      }
      if (values.max == T(0)) continue;
      T ratio = values.min / values.max;
      if (!any_ratio || ratio < beta) beta = ratio;
      any_ratio = true;
    }
  }
  r.beta = !any_ratio ? T(1) : beta;

  // Condition 3 per lambda.
  std::vector<std::pair<T, T>> pairs;  // (sum over deviations, sw(t))
  for (const Profile& star : optima) {
    for (const Profile& t : trans) {
      T sum(0);
      for (int i = 0; i < n; ++i) sum += game.DeviationPayoff(t, i, star[i]);
      pairs.push_back({sum, SocialValue(game, t)});
    }
  }
  T ab = r.alpha * r.beta;
  bool found = false;
  for (const T& lambda : lambda_grid) {
    bool feasible = true;
    T mu(0);
    for (const auto& [sum, sw] : pairs) {
      T need = lambda * opt - sum;
      if (sw > T(0)) {
        T candidate = need / sw;
        if (candidate > mu) mu = candidate;
      } else if (need > T(0)) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    ++r.feasible_lambdas;
    T bound = ab * lambda / (T(1) + ab * mu);
    if (!found || bound > r.bound) {
      r.bound = bound;
      r.lambda = lambda;
      r.mu = mu;
    }
    found = true;
  }
  if (!found) throw Infeasible("no feasible (lambda, mu) on the grid");
  T worst = SocialValue(game, trans[0]);
  for (const Profile& t : trans) worst = std::min<T>(worst, SocialValue(game, t));
  r.pota = worst / opt;
  r.holds = Le(r.bound, r.pota);
  return r;
}

// Best-response sets that do not depend on the opponents.
template <typename T>
bool HasIndependentBestResponses(const Game<T>& game) {
  for (int i = 0; i < game.num_players(); ++i) {
    std::vector<int> first;
    bool have = false;
    Profile p{std::vector<int>(game.num_players(), 0)};
    do {
      if (p[i] != 0) continue;
      std::vector<int> br = BestResponses(game, i, p);
      if (!have) {
        first = br;
        have = true;
      } else if (br != first) {
        return false;
      }
    } while (NextProfile(p, game.shape()));
  }
  return true;
}

template <typename T>
bool HasConstantSocialValue(const Game<T>& game) {
  T first = SocialValue(game, std::uint64_t{0});
  for (std::uint64_t k = 1; k < game.num_profiles(); ++k) {
    if (!Eq(SocialValue(game, k), first)) return false;
  }
  return true;
}

}  // namespace transit

#endif  // TRANSIT_EFFICIENCY_H_
