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
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "fastsm/rng.h"

namespace fastsm {
namespace {

void CheckK(int k, int n, const char* who) {
  if (k < 1 || k > n) {
    throw std::invalid_argument(std::string(who) + ": need 1 <= k <= n, got k=" +
                                std::to_string(k) + ", n=" + std::to_string(n));
  }
}

// One marginal against a prepared solution context, as its own round.
double QueryOne(const Oracle& oracle, const PrefixContext& prepared,
                ElementId a, QueryLedger& ledger,
                RoundPolicy policy = RoundPolicy::kNewRound) {
  const MarginalQuery q{a, prepared.context_size()};
  return oracle.BatchMarginals(prepared, std::span<const MarginalQuery>(&q, 1),
                               ledger, policy)[0];
}

RunResult Finish(const char* name, const Solution& s, const QueryLedger& ledger,
                 std::int64_t queries_at_start, std::int64_t rounds_at_start) {
  RunResult r;
  r.algorithm = name;
  r.solution.assign(s.elements().begin(), s.elements().end());
  r.value = s.value();
  r.queries = ledger.total_queries() - queries_at_start;
  r.rounds = ledger.rounds() - rounds_at_start;
  return r;
}

}  // namespace

RunResult LazyGreedy(const Oracle& oracle, int k, QueryLedger& ledger) {
  const int n = oracle.size();
  CheckK(k, n, "LazyGreedy");
  const std::int64_t q0 = ledger.total_queries(), r0 = ledger.rounds();
  Solution s(n);
  LazyBoundCache cache(n);
  struct Entry {
    double bound;
    ElementId id;
  };
  // Highest bound first, then lowest id.
  auto lower = [](const Entry& a, const Entry& b) {
    return a.bound != b.bound ? a.bound < b.bound : a.id > b.id;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> heap(lower);
  auto prepared = oracle.Prepare(s.elements());
  for (ElementId a = 0; a < n; ++a) {
    const double g = QueryOne(oracle, *prepared, a, ledger);
    cache.Update(a, g, 0);
    heap.push({g, a});
  }
  while (s.size() < k && !heap.empty()) {
    const Entry top = heap.top();
    heap.pop();
    if (cache.version(top.id) == s.size()) {
      s.Add(top.id);
      s.set_value(s.value() + top.bound);
      prepared = oracle.Prepare(s.elements());
      continue;
    }
    const double g = QueryOne(oracle, *prepared, top.id, ledger);
    cache.Update(top.id, g, s.size());
    heap.push({g, top.id});
  }
  s.Refresh(oracle.objective());
  return Finish("lazy_greedy", s, ledger, q0, r0);
}

RunResult ReferenceGreedy(const Oracle& oracle, int k, QueryLedger& ledger) {
  const int n = oracle.size();
  CheckK(k, n, "ReferenceGreedy");
  const std::int64_t q0 = ledger.total_queries(), r0 = ledger.rounds();
  Solution s(n);
  while (s.size() < k) {
    const auto prepared = oracle.Prepare(s.elements());
    ElementId best = -1;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (ElementId a = 0; a < n; ++a) {
      if (s.Contains(a)) continue;
      const double g = QueryOne(oracle, *prepared, a, ledger);
      if (g > best_gain) {
        best_gain = g;
        best = a;
      }
    }
    s.Add(best);
    s.Refresh(oracle.objective());
  }
  return Finish("reference_greedy", s, ledger, q0, r0);
}

std::int64_t LtlgConfig::SampleSize(int n, int k, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("LTLG: epsilon must lie in (0, 1)");
  }
  CheckK(k, n, "LTLG");
  const double s =
      std::ceil(static_cast<double>(n) / k * std::log(1.0 / epsilon) - 1e-9);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(s));
}

RunResult ParallelLtlg(const Oracle& oracle, int k, const LtlgConfig& cfg,
                       QueryLedger& ledger) {
  const int n = oracle.size();
  const std::int64_t sample_size = LtlgConfig::SampleSize(n, k, cfg.epsilon);
  const std::int64_t q0 = ledger.total_queries(), r0 = ledger.rounds();
  Rng rng(cfg.seed);
  Solution s(n);
  std::vector<double> stale(n, std::numeric_limits<double>::infinity());
  // Non-members, kept in id order so sampling is reproducible.
  std::vector<ElementId> rest(n);
  for (ElementId a = 0; a < n; ++a) rest[a] = a;

  while (s.size() < k) {
    const std::vector<ElementId> sample = rng.Sample(
        std::span<const ElementId>(rest), static_cast<std::size_t>(sample_size));
    // Best and second-best stale values among the sample.
    std::vector<ElementId> by_stale = sample;
    std::sort(by_stale.begin(), by_stale.end(), [&](ElementId a, ElementId b) {
      return stale[a] != stale[b] ? stale[a] > stale[b] : a < b;
    });
    const auto prepared = oracle.Prepare(s.elements());
    const ElementId lead = by_stale[0];
    const double lead_gain = QueryOne(oracle, *prepared, lead, ledger);
    stale[lead] = lead_gain;
    const double runner_up = by_stale.size() > 1
                                 ? stale[by_stale[1]]
                                 : -std::numeric_limits<double>::infinity();
    ElementId chosen = lead;
    if (lead_gain < runner_up - kTolerance) {
      // Lazy test failed: the other samples were being queried concurrently,
      // so their cost lands in the same round.
      std::vector<MarginalQuery> queries;
      for (std::size_t i = 1; i < by_stale.size(); ++i) {
        queries.push_back({by_stale[i], prepared->context_size()});
      }
      const std::vector<double> gains = oracle.BatchMarginals(
          *prepared, queries, ledger, RoundPolicy::kContinueRound);
      double best = lead_gain;
      for (std::size_t i = 0; i < queries.size(); ++i) {
        const ElementId a = queries[i].element;
        stale[a] = gains[i];
        if (gains[i] > best || (gains[i] == best && a < chosen)) {
          best = gains[i];
          chosen = a;
        }
      }
    }
    s.Add(chosen);
    s.Refresh(oracle.objective());
    rest.erase(std::lower_bound(rest.begin(), rest.end(), chosen));
  }
  return Finish("ltlg", s, ledger, q0, r0);
}

RunResult RandomBaseline(const Oracle& oracle, int k, int trials,
                         std::uint64_t seed, QueryLedger& ledger) {
  const int n = oracle.size();
  CheckK(k, n, "RandomBaseline");
  if (trials < 1) throw std::invalid_argument("RandomBaseline: trials must be >= 1");
  const std::int64_t q0 = ledger.total_queries(), r0 = ledger.rounds();
  Rng rng(seed);
  std::vector<ElementId> all(n);
  for (ElementId a = 0; a < n; ++a) all[a] = a;
  std::vector<std::vector<ElementId>> sets(trials);
  for (auto& set : sets) {
    set = rng.Sample(std::span<const ElementId>(all), static_cast<std::size_t>(k));
  }
  const std::vector<double> values = oracle.Values(sets, ledger);
  double total = 0.0;
  for (double v : values) total += v;
  RunResult r;
  r.algorithm = "random";
  r.solution = sets[0];
  r.value = total / trials;
  r.queries = ledger.total_queries() - q0;
  r.rounds = ledger.rounds() - r0;
  return r;
}

std::pair<std::vector<ElementId>, double> BruteForceOpt(
    const Objective& objective, int k) {
  const int n = objective.size();
  CheckK(k, n, "BruteForceOpt");
  double subsets = 1.0;
  for (int i = 0; i < k; ++i) subsets = subsets * (n - i) / (i + 1);
  if (subsets > kBruteForceLimit * (1 + 1e-12)) {
    throw std::invalid_argument("BruteForceOpt: C(n, k) too large to enumerate");
  }
  std::vector<ElementId> current(k);
  for (int i = 0; i < k; ++i) current[i] = i;
  std::vector<ElementId> best = current;
  double best_value = objective.Value(current);
  // Lexicographic enumeration; only a strictly better value replaces.
  for (;;) {
    int i = k - 1;
    while (i >= 0 && current[i] == n - k + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
    const double v = objective.Value(current);
    if (v > best_value) {
      best_value = v;
      best = current;
    }
  }
  return {best, best_value};
}

}  // namespace fastsm
