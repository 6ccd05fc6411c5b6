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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"
#include "transit/congestion.h"
#include "transit/decomposition.h"
#include "transit/oracle.h"
#include "transit/polymatrix.h"

namespace transit {
namespace {

using ::transit::testing::Matrix2;
using ::transit::testing::Matrix6;
using ::transit::testing::P;
using ::transit::testing::R;

CongestionGame<R> RandomCongestion(std::mt19937& rng, int n, int resources,
                                   int strategies, bool concave) {
  CongestionGame<R> cg;
  cg.num_resources = resources;
  for (int j = 0; j < resources; ++j) {
    std::vector<R> c;
    int base = 1 + static_cast<int>(rng() % 4);
    for (int x = 1; x <= n; ++x) {
      // Slowly growing tables when `concave`, quadratic otherwise.
      c.push_back(concave ? R(base) + R(static_cast<int>(rng() % 2) * (x - 1), 2)
                          : R(base * x * x));
    }
    std::sort(c.begin(), c.end());
    cg.costs.push_back(c);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> s;
    for (int k = 0; k < strategies; ++k) {
      std::vector<int> set;
      for (int j = 0; j < resources; ++j) {
        if (rng() % 2) set.push_back(j);
      }
      if (set.empty()) set.push_back(static_cast<int>(rng() % resources));
      s.push_back(set);
    }
    cg.strategies.push_back(s);
  }
  return cg;
}

TEST(CongestionTest, MatchesIndependentPayoffs) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    CongestionGame<R> cg = RandomCongestion(rng, 3, 3, 2, trial % 2);
    Game<R> a = CongestionToGame(cg);
    Game<R> b = oracle::DenseFromCongestion(cg);
    EXPECT_EQ(a.payoffs(), b.payoffs());
  }
}

TEST(CongestionTest, ValidationRejectsBadInput) {
  CongestionGame<R> cg = ParallelLinks<R>(2);
  cg.costs[0].pop_back();
  EXPECT_THROW(CongestionToGame(cg), InvalidInput);
  cg = ParallelLinks<R>(2);
  cg.strategies[0][0] = {0, 0};
  EXPECT_THROW(CongestionToGame(cg), InvalidInput);
  cg = ParallelLinks<R>(2);
  cg.strategies[1][1] = {5};
  EXPECT_THROW(CongestionToGame(cg), InvalidInput);
}

TEST(CongestionTest, Additivity) {
  CongestionGame<R> links = ParallelLinks<R>(3);
  EXPECT_TRUE(IsSubadditive(links));
  EXPECT_TRUE(IsSuperadditive(links));
  EXPECT_TRUE(IsNondecreasing(links));
  links.costs[0] = {R(1), R(4), R(9)};
  EXPECT_FALSE(IsSubadditive(links));
  EXPECT_TRUE(IsSuperadditive(links));
}

TEST(CongestionTest, ParallelLinksPrices) {
  Game<R> g = CongestionToGame(ParallelLinks<R>(4));
  SolutionSet ne = EnumeratePureNe(g);
  EXPECT_EQ(ne.size(), 24);
  PriceReport<R> r = ComputePrices(g, ne);
  EXPECT_EQ(r.optimum, R(4));
  EXPECT_EQ(r.poa.value, R(1));
  EXPECT_EQ(r.pota.value, R(4));
  EXPECT_EQ(r.m_pota[1].value, R(2));
  EXPECT_EQ(r.m_pota[2].value, R(5, 2));
}

TEST(CongestionTest, LinearBoundHoldsForParallelLinks) {
  for (int n = 2; n <= 4; ++n) {
    CongestionGame<R> cg = ParallelLinks<R>(n);
    for (int m = 1; m <= n; ++m) {
      Theorem2Report<R> r = VerifyTheorem2(cg, m);
      EXPECT_TRUE(r.holds) << "n=" << n << " m=" << m;
      EXPECT_TRUE(r.parallel_links);
    }
  }
}

TEST(CongestionTest, ClosedFormMatchesWhenMIsOneOrN) {
  for (int n = 2; n <= 4; ++n) {
    CongestionGame<R> cg = ParallelLinks<R>(n);
    EXPECT_TRUE(VerifyTheorem2(cg, 1).matches_formula);
    EXPECT_TRUE(VerifyTheorem2(cg, n).matches_formula);
    EXPECT_EQ(VerifyTheorem2(cg, n).m_pota.value, R(n));
  }
}

TEST(CongestionTest, WorstLimitedTransitionFillsLinksToCapacity) {
  // Every equilibrium puts one player per link, so a degree-m transition has
  // at most m players on a link; the worst one fills floor(n/m) links.
  for (int n = 2; n <= 5; ++n) {
    CongestionGame<R> cg = ParallelLinks<R>(n);
    for (int m = 1; m <= n; ++m) {
      int q = n / m, rem = n % m;
      R cost(q * m * m + rem * rem);
      EXPECT_EQ(VerifyTheorem2(cg, m).m_pota.value, cost / R(n)) << n << "," << m;
    }
  }
}

TEST(CongestionTest, Theorem2RejectsSuperlinearCosts) {
  CongestionGame<R> cg = ParallelLinks<R>(2);
  cg.costs[0] = {R(1), R(4)};
  EXPECT_THROW(VerifyTheorem2(cg, 1), PreconditionFailed);
  EXPECT_THROW(VerifyTheorem2(ParallelLinks<R>(2), 3), BadParams);
}

TEST(CongestionTest, MergeBoundOnParallelLinks) {
  CongestionGame<R> cg = ParallelLinks<R>(3);
  SolutionSet ne = EnumeratePureNe(CongestionToGame(cg));
  MergeLemmaReport<R> r = VerifyMergeLemma(cg, ne);
  EXPECT_TRUE(r.expected_to_hold);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.merges, 27u);
}

TEST(CongestionTest, MergeBoundCanFailWithoutSubadditivity) {
  CongestionGame<R> cg = ParallelLinks<R>(2);
  cg.costs = {{R(1), R(10)}, {R(1), R(10)}};
  SolutionSet d({2, 2}, {P({0, 1}), P({1, 0})});
  MergeLemmaReport<R> r = VerifyMergeLemma(cg, d);
  EXPECT_FALSE(r.expected_to_hold);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample.has_value());
}

TEST(CongestionTest, PotentialGames) {
  EXPECT_TRUE(IsExactPotentialGame(CongestionToGame(ParallelLinks<R>(3))));
  EXPECT_TRUE(IsExactPotentialGame(Matrix2()));
  Game<R> mp = testing::TwoByTwo({1, -1, -1, 1, -1, 1, 1, -1});
  std::string witness;
  EXPECT_FALSE(IsExactPotentialGame(mp, &witness));
  EXPECT_FALSE(witness.empty());
}

PolymatrixGame<R> SharedMatrixGame(int n, const Matrix<R>& u) {
  PolymatrixGame<R> pg;
  pg.shape.assign(n, static_cast<int>(u.size()));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) pg.matrices[{i, j}] = u;
    }
  }
  return pg;
}

TEST(PolymatrixTest, MatchesIndependentPayoffs) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    PolymatrixGame<R> pg;
    pg.shape = {2, 3, 2};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j || rng() % 4 == 0) continue;
        Matrix<R> m(pg.shape[i], std::vector<R>(pg.shape[j]));
        for (auto& row : m) {
          for (auto& v : row) v = R(static_cast<int>(rng() % 5));
        }
        pg.matrices[{i, j}] = m;
      }
    }
    EXPECT_EQ(PolymatrixToGame(pg).payoffs(), oracle::DenseFromPolymatrix(pg).payoffs());
  }
}

TEST(PolymatrixTest, ConstantMatrixIsSymmetric) {
  PolymatrixGame<R> pg = SharedMatrixGame(3, {{R(1), R(1)}, {R(1), R(1)}});
  SymmetryReport r = CheckSymmetryAndRegularity(pg, SolutionSet({2, 2, 2}, {P({0, 0, 0})}));
  EXPECT_TRUE(r.symmetric());
  EXPECT_TRUE(r.regular);
}

TEST(PolymatrixTest, UnequalCoordinationBreaksMonotonicity) {
  // (0,0,1) has welfare 4 and (0,1,1) welfare 2, yet player 2 prefers the
  // latter.
  PolymatrixGame<R> pg = SharedMatrixGame(3, {{R(2), R(0)}, {R(0), R(1)}});
  SymmetryReport r = CheckSymmetryAndRegularity(pg, SolutionSet({2, 2, 2}, {P({0, 0, 0})}));
  EXPECT_TRUE(r.part1);
  EXPECT_FALSE(r.part2);
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(PolymatrixTest, Theorem1HoldsOnGeneratedInstances) {
  std::mt19937 rng(53);
  PolymatrixGeneratorOptions opt;
  for (int trial = 0; trial < 30; ++trial) {
    opt.num_players = 2 + trial % 3;
    opt.num_strategies = 2;
    opt.max_entry = opt.num_players == 4 ? 1 : 3;
    GeneratedPolymatrix<R> gen = GeneratePolymatrix<R>(opt, rng);
    for (int m = 1; m <= opt.num_players; ++m) {
      Theorem1Report<R> r = VerifyTheorem1(gen.game, gen.solutions, m);
      EXPECT_TRUE(r.holds) << "trial " << trial << " m=" << m;
    }
  }
}

TEST(PolymatrixTest, Theorem1RejectsAsymmetricSolutions) {
  PolymatrixGame<R> pg = SharedMatrixGame(2, {{R(2), R(0)}, {R(0), R(1)}});
  SolutionSet d({2, 2}, {P({0, 1})});
  EXPECT_THROW(VerifyTheorem1(pg, d, 1), PreconditionFailed);
}

TEST(PolymatrixTest, ValidationRejectsWrongShapes) {
  PolymatrixGame<R> pg = SharedMatrixGame(2, {{R(1), R(0)}, {R(0), R(1)}});
  pg.matrices[{0, 1}] = {{R(1)}};
  EXPECT_THROW(PolymatrixToGame(pg), InvalidInput);
}

TEST(DecompositionTest, IdentityDecomposition) {
  Game<R> p = Matrix2();
  DecompositionCertificate<R> cert{p, p, std::nullopt};
  DecompositionReport<R> r = VerifyDecompositionBounds(cert, 1);
  EXPECT_EQ(r.epsilon, R(0));
  EXPECT_TRUE(r.AllHold());
}

TEST(DecompositionTest, ZeroSumPerturbation) {
  Game<R> p = Matrix6(4, 3, 2);
  std::vector<R> zs = {R(1, 10), R(-1, 10), R(-1, 10), R(1, 10),
                       R(-1, 10), R(1, 10), R(1, 10), R(-1, 10)};
  std::vector<R> gp = p.payoffs();
  for (size_t k = 0; k < gp.size(); ++k) gp[k] += zs[k];
  DecompositionCertificate<R> cert{Game<R>(Convention::kMaximize, {2, 2}, gp), p,
                                   std::nullopt};
  for (int m = 1; m <= 2; ++m) {
    DecompositionReport<R> r = VerifyDecompositionBounds(cert, m);
    EXPECT_EQ(r.epsilon, R(1, 10));
    EXPECT_TRUE(r.AllHold()) << "m=" << m;
  }
}

TEST(DecompositionTest, RejectsInvalidCertificates) {
  Game<R> mp = testing::TwoByTwo({1, -1, -1, 1, -1, 1, 1, -1});
  DecompositionCertificate<R> not_potential{mp, mp, std::nullopt};
  EXPECT_THROW(VerifyDecompositionBounds(not_potential, 1), CertificateInvalid);
  Game<R> shifted = testing::TwoByTwo({2, 1, 0, 0, 0, 0, 1, 1});
  DecompositionCertificate<R> not_zero_sum{shifted, Matrix2(), std::nullopt};
  EXPECT_THROW(VerifyDecompositionBounds(not_zero_sum, 1), CertificateInvalid);
  DecompositionCertificate<R> ok{Matrix2(), Matrix2(), std::nullopt};
  EXPECT_THROW(VerifyDecompositionBounds(ok, 1, AlphaMode::kGiven), BadParams);
}

TEST(IdenticalUtilityTest, OptimumIsAlwaysStableTransition) {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    Game<R> g = Game<R>::FromFunction(
        Convention::kMaximize, {2, 3, 2}, [&](const Profile&) {
          R v(1 + static_cast<int>(rng() % 6));
          return std::vector<R>(3, v);
        });
    EXPECT_TRUE(VerifyIdenticalUtility(g).holds);
  }
  EXPECT_THROW(VerifyIdenticalUtility(Matrix6(4, 3, 2)), NotIdenticalUtility);
}

}  // namespace
}  // namespace transit
