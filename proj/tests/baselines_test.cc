// Copyright 2026 The Authors.
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

#include "fastsm/baselines.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "fastsm/generators.h"
#include "fastsm/objectives.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fastsm {
namespace {

constexpr double kOneMinusInvE = 1.0 - 0.36787944117144233;

std::vector<double> RandomWeights(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> w(n);
  for (double& x : w) x = rng.Uniform(1.0, 10.0);
  return w;
}

std::vector<ElementId> TopK(const std::vector<double>& w, int k) {
  std::vector<ElementId> ids(w.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(),
                   [&](ElementId a, ElementId b) { return w[a] > w[b]; });
  ids.resize(k);
  return ids;
}

TEST(LazyGreedyTest, ModularPicksTopK) {
  const auto w = RandomWeights(30, 1);
  Modular f(w);
  QueryLedger ledger;
  const RunResult r = LazyGreedy(Oracle(f), 7, ledger);
  EXPECT_EQ(r.solution, TopK(w, 7));
}

TEST(LazyGreedyTest, StarPicksCenter) {
  MaxCover f(testing::StarGraph(4));
  QueryLedger ledger;
  const RunResult r = LazyGreedy(Oracle(f), 1, ledger);
  EXPECT_EQ(r.solution, (std::vector<ElementId>{0}));
  EXPECT_EQ(r.value, 4.0);
}

TEST(LazyGreedyTest, ClassicalGuaranteeAgainstBruteForce) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    MaxCover f = testing::SmallCover(seed);
    const double opt = BruteForceOpt(f, 5).second;
    QueryLedger ledger;
    const RunResult r = LazyGreedy(Oracle(f), 5, ledger);
    EXPECT_GE(r.value, kOneMinusInvE * opt - kTolerance) << seed;
  }
}

TEST(LazyGreedyTest, MatchesReferenceGreedy) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto objectives = testing::AllObjectives(40, 1000 + seed);
    const auto& f = *objectives[seed % objectives.size()];
    QueryLedger lazy_ledger, ref_ledger;
    const RunResult lazy = LazyGreedy(Oracle(f), 8, lazy_ledger);
    const RunResult ref = ReferenceGreedy(Oracle(f), 8, ref_ledger);
    EXPECT_EQ(lazy.solution, ref.solution) << f.Describe();
    EXPECT_EQ(lazy.value, ref.value);
    EXPECT_LE(lazy.queries, ref.queries);
  }
}

TEST(LazyGreedyTest, FewerQueriesOnSkewedMarginals) {
  MaxCover f(std::make_shared<const Graph>(GenerateBarabasiAlbert(300, 1, 3)));
  QueryLedger lazy_ledger, ref_ledger;
  const RunResult lazy = LazyGreedy(Oracle(f), 20, lazy_ledger);
  const RunResult ref = ReferenceGreedy(Oracle(f), 20, ref_ledger);
  EXPECT_LT(lazy.queries, ref.queries);
  // Reference greedy queries n + (n - 1) + ... + (n - k + 1).
  EXPECT_EQ(ref.queries, 20 * 300 - 19 * 20 / 2);
}

TEST(LazyGreedyTest, EveryQueryIsItsOwnRound) {
  MaxCover inner(testing::ErGraph(100, 0.05, 2));
  testing::CountingObjective f(inner);
  QueryLedger ledger;
  const RunResult r = LazyGreedy(Oracle(f), 10, ledger);
  EXPECT_EQ(r.queries, f.gains());
  EXPECT_EQ(r.rounds, r.queries);
  for (auto q : ledger.per_round_queries()) EXPECT_EQ(q, 1);
}

TEST(LazyGreedyTest, RejectsBadK) {
  MaxCover f(testing::PathGraph());
  QueryLedger ledger;
  EXPECT_THROW(LazyGreedy(Oracle(f), 0, ledger), std::invalid_argument);
  EXPECT_THROW(LazyGreedy(Oracle(f), 4, ledger), std::invalid_argument);
}

TEST(LtlgTest, SampleSize) {
  EXPECT_EQ(LtlgConfig::SampleSize(500, 50, 0.1),
            static_cast<std::int64_t>(std::ceil(10 * std::log(10.0))));
  EXPECT_EQ(LtlgConfig::SampleSize(10, 10, 0.9), 1);
}

TEST(LtlgTest, FullSampleIsExactGreedy) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    MaxCover f(testing::ErGraph(40, 0.1, seed));
    LtlgConfig cfg;
    cfg.epsilon = 1e-9;
    cfg.seed = seed;
    QueryLedger a, b;
    const RunResult ltlg = ParallelLtlg(Oracle(f), 6, cfg, a);
    const RunResult greedy = ReferenceGreedy(Oracle(f), 6, b);
    EXPECT_EQ(ltlg.value, greedy.value) << seed;
  }
}

TEST(LtlgTest, ModularMeanNearTopK) {
  const auto w = RandomWeights(100, 5);
  Modular f(w);
  double top = 0.0;
  for (ElementId a : TopK(w, 10)) top += w[a];
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    LtlgConfig cfg;
    cfg.seed = seed;
    QueryLedger ledger;
    sum += ParallelLtlg(Oracle(f), 10, cfg, ledger).value;
  }
  EXPECT_GE(sum / 100, 0.98 * top);
  EXPECT_LE(sum / 100, top + 1e-9);
}

TEST(LtlgTest, ExpectationGuarantee) {
  double ratio = 0.0;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    MaxCover f = testing::SmallCover(trial % 20);
    const double opt = BruteForceOpt(f, 5).second;
    LtlgConfig cfg;
    cfg.seed = trial;
    QueryLedger ledger;
    ratio += ParallelLtlg(Oracle(f), 5, cfg, ledger).value / opt;
  }
  EXPECT_GE(ratio / 200, kOneMinusInvE - 0.1);
}

TEST(LtlgTest, RoundsNeverExceedSampleSize) {
  MaxCover inner(testing::ErGraph(500, 0.01, 4));
  testing::CountingObjective f(inner);
  LtlgConfig cfg;
  QueryLedger ledger;
  const RunResult r = ParallelLtlg(Oracle(f), 50, cfg, ledger);
  const auto s = LtlgConfig::SampleSize(500, 50, cfg.epsilon);
  for (auto q : ledger.per_round_queries()) EXPECT_LE(q, s);
  EXPECT_EQ(r.rounds, 50);
  EXPECT_EQ(r.queries, f.gains());
  EXPECT_EQ(r.solution.size(), 50u);
}

TEST(RandomBaselineTest, FullSetIsExact) {
  MaxCover f(testing::ErGraph(20, 0.2, 1));
  std::vector<ElementId> all(20);
  std::iota(all.begin(), all.end(), 0);
  QueryLedger ledger;
  const RunResult r = RandomBaseline(Oracle(f), 20, 5, 3, ledger);
  EXPECT_EQ(r.value, f.Value(all));
  EXPECT_EQ(r.queries, 5);
  EXPECT_EQ(r.rounds, 1);
}

TEST(RandomBaselineTest, ModularMeanMatchesExpectation) {
  const auto w = RandomWeights(60, 8);
  Modular f(w);
  const int k = 6, trials = 2000;
  const double mean_w = std::accumulate(w.begin(), w.end(), 0.0) / 60;
  double var_w = 0.0;
  for (double x : w) var_w += (x - mean_w) * (x - mean_w);
  var_w /= 60;
  // Variance of a sum of k draws without replacement.
  const double var_sum = k * var_w * (60.0 - k) / (60.0 - 1);
  const double se = std::sqrt(var_sum / trials);
  QueryLedger ledger;
  const RunResult r = RandomBaseline(Oracle(f), k, trials, 11, ledger);
  EXPECT_NEAR(r.value, k * mean_w, 3 * se);
}

TEST(RandomBaselineTest, SingleTrialIsOneSet) {
  MaxCover f(testing::ErGraph(30, 0.1, 2));
  QueryLedger ledger;
  const RunResult r = RandomBaseline(Oracle(f), 4, 1, 7, ledger);
  EXPECT_EQ(r.value, f.Value(r.solution));
  EXPECT_THROW(RandomBaseline(Oracle(f), 4, 0, 7, ledger), std::invalid_argument);
}

TEST(BruteForceTest, Examples) {
  MaxCover path(testing::PathGraph());
  const auto [set, value] = BruteForceOpt(path, 1);
  EXPECT_EQ(set, (std::vector<ElementId>{1}));
  EXPECT_EQ(value, 2.0);
  const auto w = RandomWeights(12, 3);
  Modular modular(w);
  auto top = TopK(w, 4);
  std::sort(top.begin(), top.end());
  EXPECT_EQ(BruteForceOpt(modular, 4).first, top);
  EXPECT_EQ(BruteForceOpt(modular, 1).first,
            (std::vector<ElementId>{TopK(w, 1)[0]}));
}

TEST(BruteForceTest, LexicographicTieBreakAndGuard) {
  Modular flat(std::vector<double>(8, 1.0));
  EXPECT_EQ(BruteForceOpt(flat, 3).first, (std::vector<ElementId>{0, 1, 2}));
  Modular big(std::vector<double>(100, 1.0));
  EXPECT_THROW(BruteForceOpt(big, 10), std::invalid_argument);
  EXPECT_THROW(BruteForceOpt(flat, 9), std::invalid_argument);
}

}  // namespace
}  // namespace fastsm
