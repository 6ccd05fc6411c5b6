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

#ifndef TRANSIT_DECOMPOSITION_H_
#define TRANSIT_DECOMPOSITION_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transit/congestion.h"
#include "transit/efficiency.h"
#include "transit/errors.h"
#include "transit/game.h"
#include "transit/transition.h"

namespace transit {

// A game G with a potential game P such that G - P is zero-sum.
template <typename T>
struct DecompositionCertificate {
  Game<T> g;
  Game<T> p;
  // When P is given as a congestion game.
  std::optional<CongestionGame<T>> congestion;
};

enum class AlphaMode { kSearch, kGiven };

template <typename T>
struct DecompositionReport {
  int m = 1;
  T epsilon{};
  // Tightest hypothesis constants: lower ones for the anarchy ratios, upper
  // ones for the stability ratios.
  Measure<T> alpha_ne_lower, alpha_ne_upper, alpha_m_lower, alpha_m_upper;
  std::optional<T> given_alpha;
  std::uint64_t num_eps_ne = 0;
  std::vector<BoundRow<T>> rows;
  bool AllHold() const {
    for (const auto& row : rows) {
      if (!row.skipped && !row.holds) return false;
    }
    return true;
  }
};

template <typename T>
T MaxDeviation(const Game<T>& g, const Game<T>& p) {
  T eps(0);
  for (size_t k = 0; k < g.payoffs().size(); ++k) {
    T diff = Abs<T>(g.payoffs()[k] - p.payoffs()[k]);
    if (diff > eps) eps = diff;
  }
  return eps;
}

template <typename T>
void ValidateCertificate(const DecompositionCertificate<T>& cert) {
  const Game<T>& g = cert.g;
  const Game<T>& p = cert.p;
  if (g.shape() != p.shape() || g.convention() != p.convention()) {
    throw CertificateInvalid("G and P differ in shape or convention");
  }
  for (std::uint64_t k = 0; k < g.num_profiles(); ++k) {
    T residual(0);
    for (int i = 0; i < g.num_players(); ++i) {
      residual += g.Payoff(k, i) - p.Payoff(k, i);
    }
    if (!Eq(residual, T(0))) {
      throw CertificateInvalid("G - P is not zero-sum at " +
                               g.ProfileAt(k).ToString());
    }
  }
  std::string witness;
  if (!IsExactPotentialGame(p, &witness)) {
    throw CertificateInvalid("P fails the exact potential test: " + witness);
  }
  if (cert.congestion) {
    Game<T> induced = CongestionToGame(*cert.congestion);
    if (induced.shape() != p.shape()) {
      throw CertificateInvalid("congestion form of P has a different shape");
    }
    for (size_t k = 0; k < p.payoffs().size(); ++k) {
      if (!Eq(induced.payoffs()[k], p.payoffs()[k])) {
        throw CertificateInvalid("congestion form does not induce P");
      }
    }
  }
}

namespace internal {

// min over `from` of max over `to` of |sw(a)/sw(b)| (or max-min when
// `upper`), skipping b with sw(b) = 0.
template <typename T>
Measure<T> RatioSearch(const Game<T>& game, const std::vector<Profile>& from,
                       const std::vector<Profile>& to, bool upper) {
  bool any = false;
  Measure<T> out = Measure<T>::Undefined("no usable pair");
  for (const Profile& a : from) {
    T sa = SocialValue(game, a);
    bool found = false;
    T inner{};
    for (const Profile& b : to) {
      T sb = SocialValue(game, b);
      if (sb == T(0)) continue;
      T ratio = Abs<T>(sa / sb);
      if (!found || (upper ? ratio < inner : ratio > inner)) inner = ratio;
      found = true;
    }
    if (!found) {
      return Measure<T>::Undefined("every reference profile has zero welfare");
    }
    if (!any || (upper ? inner > out.value : inner < out.value)) {
      out = Measure<T>::Of(inner, a);
    }
    any = true;
  }
  return out;
}

template <typename T>
Measure<T> PriceRatio(const Measure<T>& a, const Measure<T>& b) {
  if (!a.defined || !b.defined) {
    return Measure<T>::Undefined(!a.defined ? a.note : b.note);
  }
  if (b.value == T(0)) return Measure<T>::Undefined("reference price is 0");
  return Measure<T>::Of(Abs<T>(a.value / b.value));
}

}  // namespace internal

template <typename T>
DecompositionReport<T> VerifyDecompositionBounds(
    const DecompositionCertificate<T>& cert, int m,
    AlphaMode mode = AlphaMode::kSearch, std::optional<T> given_alpha = {}) {
  ValidateCertificate(cert);
  const Game<T>& g = cert.g;
  const Game<T>& p = cert.p;
  int n = g.num_players();
  if (m < 1 || m > n) throw BadParams("m must be in 1..n");
  if (mode == AlphaMode::kGiven && (!given_alpha || !(*given_alpha > T(0)))) {
    throw BadParams("alpha_mode=given needs a positive alpha");
  }
  DecompositionReport<T> r;
  r.m = m;
  if (mode == AlphaMode::kGiven) r.given_alpha = given_alpha;
  r.epsilon = MaxDeviation(g, p);

  SolutionSet ne_p = EnumeratePureNe(p);
  ne_p.RequireNonEmpty();
  SolutionSet eps_ne_p = EnumeratePureNe(p, T(2 * r.epsilon));
  r.num_eps_ne = eps_ne_p.size();
  r.alpha_ne_lower = internal::RatioSearch(p, eps_ne_p.members(), ne_p.members(), false);
  r.alpha_ne_upper = internal::RatioSearch(p, eps_ne_p.members(), ne_p.members(), true);
  std::vector<Profile> eps_m = MTransitionSet(eps_ne_p, m);
  std::vector<Profile> ne_m = MTransitionSet(ne_p, m);
  r.alpha_m_lower = internal::RatioSearch(p, eps_m, ne_m, false);
  r.alpha_m_upper = internal::RatioSearch(p, eps_m, ne_m, true);

  PriceReport<T> prices_p = ComputePrices(p, ne_p);
  SolutionSet ne_g = EnumeratePureNe(g);
  std::optional<PriceReport<T>> prices_g;
  if (!ne_g.empty()) prices_g = ComputePrices(g, ne_g);

  auto lower_alpha = [&](const Measure<T>& searched) {
    if (mode == AlphaMode::kSearch) return searched;
    if (!searched.defined || Gt(*given_alpha, searched.value)) {
      return Measure<T>::Undefined("given alpha " + ToString(*given_alpha) +
                                   " does not satisfy the hypothesis");
    }
    return Measure<T>::Of(*given_alpha);
  };
  auto row = [&](std::string name, std::string ineq, auto pick, const Measure<T>& alpha,
                 bool lhs_ge_rhs) {
    if (!prices_g) {
      r.rows.push_back(internal::SkippedRow<T>(std::move(name), "decomposition ratio",
                                               std::move(ineq), "G has no pure NE"));
      return;
    }
    Measure<T> lhs = internal::PriceRatio(pick(*prices_g), pick(prices_p));
    r.rows.push_back(internal::MakeRow<T>(std::move(name), "decomposition ratio",
                                          std::move(ineq), lhs, alpha, lhs_ge_rhs,
                                          {{"alpha", alpha}}));
  };
  row("decomposition.poa", "|poa_G / poa_P| >= alpha",
      [](const PriceReport<T>& x) { return x.poa; }, lower_alpha(r.alpha_ne_lower), true);
  row("decomposition.pos", "|pos_G / pos_P| <= alpha",
      [](const PriceReport<T>& x) { return x.pos; }, r.alpha_ne_upper, false);
  row("decomposition.m_pota", "|m-pota_G / m-pota_P| >= alpha",
      [&](const PriceReport<T>& x) { return x.m_pota[m - 1]; },
      lower_alpha(r.alpha_m_lower), true);
  row("decomposition.m_pots", "|m-pots_G / m-pots_P| <= alpha",
      [&](const PriceReport<T>& x) { return x.m_pots[m - 1]; }, r.alpha_m_upper,
      false);

  std::string corollary = "m-pota_G >= (alpha / m) * poa_P";
  if (!cert.congestion || cert.congestion->convention != Convention::kMaximize ||
      !IsSuperadditive(*cert.congestion)) {
    r.rows.push_back(internal::SkippedRow<T>(
        "decomposition.corollary", "superadditive congestion potential", corollary,
        "P is not given as a utility congestion game with superadditive functions"));
  } else if (!prices_g) {
    r.rows.push_back(internal::SkippedRow<T>("decomposition.corollary",
                                             "superadditive congestion potential",
                                             corollary, "G has no pure NE"));
  } else {
    Measure<T> alpha = lower_alpha(r.alpha_m_lower);
    Measure<T> rhs = alpha.defined && prices_p.poa.defined
                         ? Measure<T>::Of(T(alpha.value / T(m) * prices_p.poa.value))
                         : Measure<T>::Undefined("alpha or poa_P undefined");
    r.rows.push_back(internal::MakeRow<T>(
        "decomposition.corollary", "superadditive congestion potential", corollary,
        prices_g->m_pota[m - 1], rhs, true, {{"alpha", alpha}}));
  }
  return r;
}

template <typename T>
struct IdenticalUtilityReport {
  PriceReport<T> prices;
  bool holds = false;
};

// pos = pots = 1 for D = pure NE of an identical-utility game.
template <typename T>
IdenticalUtilityReport<T> VerifyIdenticalUtility(const Game<T>& game) {
  if (!HasIdenticalUtilities(game)) {
    throw NotIdenticalUtility("players' payoff vectors differ");
  }
  SolutionSet ne = EnumeratePureNe(game);
  IdenticalUtilityReport<T> r;
  r.prices = ComputePrices(game, ne);
  r.holds = Eq(r.prices.pos.value, T(1)) && Eq(r.prices.pots.value, T(1));
  return r;
}

}  // namespace transit

#endif  // TRANSIT_DECOMPOSITION_H_
