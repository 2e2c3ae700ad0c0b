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


// Reference algorithms: lazy greedy, parallel lazier-than-lazy greedy, the
// random-subset baseline, and exhaustive search for small instances.

#ifndef FASTSM_BASELINES_H_
#define FASTSM_BASELINES_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "fastsm/oracle.h"
#include "fastsm/run_result.h"

namespace fastsm {

// Exact greedy with stale-bound re-evaluation. Every query is its own
// adaptive round. Ties go to the lowest id. Throws std::invalid_argument
// unless 1 <= k <= n.
RunResult LazyGreedy(const Oracle& oracle, int k, QueryLedger& ledger);

// Plain greedy that re-evaluates every candidate each step. Kept as the
// reference lazy greedy must agree with.
RunResult ReferenceGreedy(const Oracle& oracle, int k, QueryLedger& ledger);

struct LtlgConfig {
  double epsilon = 0.1;
  std::uint64_t seed = 0;

  // ceil((n / k) ln(1 / epsilon)), at least 1.
  static std::int64_t SampleSize(int n, int k, double epsilon);
};

// Stochastic greedy with lazy updates. Each step samples s candidates from
// the non-members, queries the one with the best stale value, and takes it
// if its fresh marginal still reaches the second-best stale value. Otherwise
// the remaining samples are queried in the same round and the best fresh
// marginal wins.
RunResult ParallelLtlg(const Oracle& oracle, int k, const LtlgConfig& cfg,
                       QueryLedger& ledger);

// Mean of f over `trials` uniform k-subsets, queried in one round. The
// returned solution is the first trial's set.
RunResult RandomBaseline(const Oracle& oracle, int k, int trials,
                         std::uint64_t seed, QueryLedger& ledger);

// Largest number of subsets BruteForceOpt will enumerate.
inline constexpr double kBruteForceLimit = 1e7;

// Exact maximizer over all k-subsets; ties go to the lexicographically
// smallest subset. Uncharged. Throws std::invalid_argument when C(n, k)
// exceeds kBruteForceLimit or k is outside [1, n].
std::pair<std::vector<ElementId>, double> BruteForceOpt(
    const Objective& objective, int k);

}  // namespace fastsm

#endif  // FASTSM_BASELINES_H_
