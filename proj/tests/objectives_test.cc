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

#include "fastsm/objectives.h"

#include <cmath>
#include <memory>
#include <vector>

#include "fastsm/generators.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fastsm {
namespace {

using testing::MakeGraph;
using testing::StarGraph;

std::shared_ptr<const Graph> Directed(
    int n, const std::vector<std::tuple<int, int, double>>& edges) {
  GraphBuilder b(n, /*directed=*/true, /*weighted=*/true);
  for (const auto& [u, v, w] : edges) b.AddEdge(u, v, w);
  return std::make_shared<const Graph>(std::move(b).Build());
}

std::shared_ptr<const Graph> Weighted(
    int n, const std::vector<std::tuple<int, int, double>>& edges) {
  GraphBuilder b(n, /*directed=*/false, /*weighted=*/true);
  for (const auto& [u, v, w] : edges) b.AddEdge(u, v, w);
  return std::make_shared<const Graph>(std::move(b).Build());
}

double F(const Objective& f, std::vector<ElementId> s) { return f.Value(s); }

TEST(MaxCoverTest, Examples) {
  MaxCover star(StarGraph(4));
  EXPECT_EQ(F(star, {}), 0.0);
  EXPECT_EQ(F(star, {0}), 4.0);
  MaxCover triangle(MakeGraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  for (ElementId v = 0; v < 3; ++v) EXPECT_EQ(F(triangle, {v}), 2.0);
  MaxCover path(testing::PathGraph());
  EXPECT_EQ(F(path, {1}), 2.0);
  EXPECT_EQ(F(path, {0, 1, 2}), 3.0);
}

TEST(MaxCoverTest, RejectsDirectedGraph) {
  EXPECT_THROW(MaxCover(Directed(2, {{0, 1, 1.0}})), std::invalid_argument);
}

TEST(WeightedDirectedCoverTest, Examples) {
  WeightedDirectedCover one(Directed(2, {{0, 1, 5.0}}));
  EXPECT_EQ(F(one, {}), 0.0);
  EXPECT_EQ(F(one, {1}), 5.0);
  WeightedDirectedCover two(Directed(3, {{0, 1, 2.0}, {1, 2, 3.0}}));
  EXPECT_EQ(F(two, {1}), 5.0);
  // Each edge is counted once even with both endpoints chosen.
  EXPECT_EQ(F(two, {0, 1, 2}), 5.0);
}

TEST(WeightedDirectedCoverTest, RejectsUndirectedOrUnweighted) {
  EXPECT_THROW(WeightedDirectedCover(StarGraph(2)), std::invalid_argument);
  EXPECT_THROW(WeightedDirectedCover(Weighted(2, {{0, 1, 1.0}})),
               std::invalid_argument);
}

TEST(MovieRecommendationTest, Examples) {
  auto make = [](double rating) {
    auto r = std::make_shared<RatingsMatrix>();
    r->users = 1;
    r->movies = 1;
    r->ratings = {rating};
    r->genres = {{0}};
    r->num_genres = 1;
    return r;
  };
  MovieRecommendation low(make(3.0), 1.0, 1.0);
  EXPECT_EQ(F(low, {}), 0.0);
  EXPECT_EQ(F(low, {0}), 4.0);
  MovieRecommendation high(make(5.0), 1.0, 1.0);
  EXPECT_EQ(F(high, {0}), 7.0);
}

TEST(MovieRecommendationTest, DefaultWeights) {
  auto r = std::make_shared<RatingsMatrix>();
  r->users = 2;
  r->movies = 2;
  r->ratings = {1.0, 4.0, 2.0, 5.0};  // column sums 3 and 9
  r->genres = {{0}, {0, 1}};
  r->num_genres = 2;
  MovieRecommendation f(r);
  EXPECT_EQ(f.alpha(), 4.5);
  EXPECT_EQ(f.beta(), 1.0);
  // 9 + 4.5 * 2 genres + 1 user above 4.5.
  EXPECT_EQ(F(f, {1}), 19.0);
}

TEST(MovieRecommendationTest, ValidatesMatrix) {
  auto r = std::make_shared<RatingsMatrix>();
  r->users = 1;
  r->movies = 1;
  r->ratings = {-1.0};
  r->genres = {{0}};
  r->num_genres = 1;
  EXPECT_THROW(MovieRecommendation{r}, std::invalid_argument);
  r->ratings = {1.0};
  r->genres = {{3}};
  EXPECT_THROW(MovieRecommendation{r}, std::invalid_argument);
}

TEST(RevenueTest, Examples) {
  Revenue single(Weighted(2, {{0, 1, 1.0}}), 0.9);
  EXPECT_EQ(F(single, {}), 0.0);
  EXPECT_DOUBLE_EQ(F(single, {1}), 1.0);
  // Node 0 linked to 1 and 2 with weight 2. With S = {1, 2} only node 0 has
  // neighbors in S, so f = (2 + 2)^0.5 = 2.
  Revenue fork(Weighted(3, {{0, 1, 2.0}, {0, 2, 2.0}}), 0.5);
  EXPECT_DOUBLE_EQ(F(fork, {1, 2}), 2.0);
}

TEST(RevenueTest, SingletonIsSumOfPoweredWeights) {
  auto g = std::make_shared<const Graph>(
      WithUniformWeights(GenerateErdosRenyi(30, 0.2, 3), 1.0, 2.0, 4));
  Revenue f(g, 0.7);
  for (ElementId a = 0; a < 30; ++a) {
    double expected = 0.0;
    for (double w : g->neighbor_weights(a)) expected += std::pow(w, 0.7);
    EXPECT_NEAR(F(f, {a}), expected, 1e-12) << a;
  }
}

TEST(RevenueTest, RejectsBadParameters) {
  EXPECT_THROW(Revenue(StarGraph(2), 1.0), std::invalid_argument);
  EXPECT_THROW(Revenue(StarGraph(2), 0.0), std::invalid_argument);
  EXPECT_THROW(Revenue(Directed(2, {{0, 1, 1.0}})), std::invalid_argument);
}

TEST(InfluenceTest, Examples) {
  Influence star(StarGraph(4), 0.5);
  EXPECT_EQ(F(star, {}), 0.0);
  EXPECT_DOUBLE_EQ(F(star, {0}), 3.0);
  Influence isolated(MakeGraph(1, {}), 0.5);
  EXPECT_EQ(F(isolated, {0}), 1.0);
}

TEST(InfluenceTest, BoundedByNodeCount) {
  auto g = testing::ErGraph(40, 0.2, 6);
  Influence f(g, 0.3);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto s = testing::RandomSubset(40, static_cast<int>(rng.UniformInt(41)), rng);
    EXPECT_LE(f.Value(s), 40.0 + 1e-9);
  }
  std::vector<ElementId> all(40);
  for (int i = 0; i < 40; ++i) all[i] = i;
  EXPECT_DOUBLE_EQ(f.Value(all), 40.0);
  EXPECT_THROW(Influence(g, 0.0), std::invalid_argument);
  EXPECT_THROW(Influence(g, 1.0), std::invalid_argument);
}

TEST(ModularTest, SumsWeights) {
  Modular f({1.0, 2.0, 4.0});
  EXPECT_EQ(F(f, {0, 2}), 5.0);
  EXPECT_THROW(Modular({-1.0}), std::invalid_argument);
}

// Monotonicity and submodularity over 1000 random triples per objective and
// size, with prefix-context marginals checked against set values.
class ObjectivePropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(ObjectivePropertyTest, MonotoneSubmodularAndConsistent) {
  const int n = GetParam();
  const auto objectives = testing::AllObjectives(n, 100 + n);
  ASSERT_EQ(objectives.size(), 5u);
  for (const auto& f : objectives) {
    const auto report = testing::CheckSubmodularTriples(*f, 1000, 7);
    EXPECT_EQ(report.triples, 1000);
    EXPECT_EQ(report.monotonicity_violations, 0) << f->Describe();
    EXPECT_EQ(report.submodularity_violations, 0) << f->Describe();
    EXPECT_LE(report.worst_gain_mismatch, 1e-12) << f->Describe();
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, ObjectivePropertyTest, ::testing::Values(10, 50));

// Gain against prefixes of a context with repeats and parallel preparation.
TEST(PrefixContextTest, RepeatsAndPoolMatchSerial) {
  ThreadPool pool(4);
  for (const auto& f : testing::AllObjectives(50, 9)) {
    Rng rng(3);
    std::vector<ElementId> context;
    for (int i = 0; i < 60; ++i) {
      context.push_back(static_cast<ElementId>(rng.UniformInt(50)));
    }
    const auto serial = f->Prepare(context, nullptr);
    const auto parallel = f->Prepare(context, &pool);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = static_cast<ElementId>(rng.UniformInt(50));
      const auto p = static_cast<std::int32_t>(rng.UniformInt(61));
      if (serial->InPrefix(a, p)) continue;
      std::vector<ElementId> prefix;
      for (int i = 0; i < p; ++i) {
        if (std::find(prefix.begin(), prefix.end(), context[i]) == prefix.end()) {
          prefix.push_back(context[i]);
        }
      }
      std::vector<ElementId> with = prefix;
      with.push_back(a);
      const double expected = f->Value(with) - f->Value(prefix);
      EXPECT_NEAR(serial->Gain(a, p), expected,
                  1e-12 * std::max(1.0, f->Value(with)))
          << f->Describe();
      EXPECT_EQ(serial->Gain(a, p), parallel->Gain(a, p)) << f->Describe();
    }
  }
}

}  // namespace
}  // namespace fastsm
