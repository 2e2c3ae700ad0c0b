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

#include "fastsm/oracle.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <string>

namespace fastsm {

PrefixContext::PrefixContext(int n, std::span<const ElementId> context)
    : context_size_(static_cast<std::int32_t>(context.size())),
      position_(n, kAbsent) {
  for (std::int32_t p = 0; p < context_size_; ++p) {
    std::int32_t& slot = position_[context[p]];
    if (slot == kAbsent) slot = p;
  }
}

void QueryLedger::RecordRound(std::int64_t queries) {
  per_round_.push_back(queries);
  total_queries_ += queries;
}

void QueryLedger::AddToLastRound(std::int64_t queries) {
  if (per_round_.empty()) {
    RecordRound(queries);
    return;
  }
  per_round_.back() += queries;
  total_queries_ += queries;
}

void Solution::Add(ElementId a) {
  if (member_[a]) {
    throw std::invalid_argument("Solution::Add: duplicate element " +
                                std::to_string(a));
  }
  member_[a] = true;
  elements_.push_back(a);
}

void Oracle::CheckIds(std::span<const ElementId> ids) const {
  const int n = size();
  std::vector<bool> seen(n, false);
  for (ElementId a : ids) {
    if (a < 0 || a >= n) {
      throw std::out_of_range("element " + std::to_string(a) +
                              " outside ground set of size " +
                              std::to_string(n));
    }
    if (seen[a]) {
      throw std::invalid_argument("element " + std::to_string(a) +
                                  " repeated in set");
    }
    seen[a] = true;
  }
}

double Oracle::Value(std::span<const ElementId> set,
                     QueryLedger& ledger) const {
  CheckIds(set);
  const double v = objective_->Value(set);
  ledger.RecordRound(1);
  return v;
}

std::vector<double> Oracle::Values(
    const std::vector<std::vector<ElementId>>& sets,
    QueryLedger& ledger) const {
  for (const auto& s : sets) CheckIds(s);
  std::vector<double> out(sets.size());
  ParallelFor(pool_, sets.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = objective_->Value(sets[i]);
  });
  if (!sets.empty()) {
    ledger.RecordRound(static_cast<std::int64_t>(sets.size()));
  }
  return out;
}

double Oracle::Marginal(ElementId a, std::span<const ElementId> set,
                        QueryLedger& ledger) const {
  CheckIds(set);
  if (a < 0 || a >= size()) {
    throw std::out_of_range("element " + std::to_string(a) +
                            " outside ground set");
  }
  if (std::find(set.begin(), set.end(), a) != set.end()) return 0.0;
  const MarginalQuery q{a, static_cast<std::int32_t>(set.size())};
  return BatchMarginals(set, std::span<const MarginalQuery>(&q, 1), ledger)[0];
}

std::unique_ptr<PrefixContext> Oracle::Prepare(
    std::span<const ElementId> context) const {
  for (ElementId a : context) {
    if (a < 0 || a >= size()) {
      throw std::out_of_range("context element " + std::to_string(a) +
                              " outside ground set");
    }
  }
  return objective_->Prepare(context, pool_);
}

std::vector<double> Oracle::BatchMarginals(
    std::span<const ElementId> context, std::span<const MarginalQuery> queries,
    QueryLedger& ledger, RoundPolicy policy) const {
  if (queries.empty()) return {};
  std::int32_t max_prefix = 0;
  for (const MarginalQuery& q : queries) {
    if (q.prefix < 0 || static_cast<std::size_t>(q.prefix) > context.size()) {
      throw std::out_of_range("query prefix " + std::to_string(q.prefix) +
                              " outside context of length " +
                              std::to_string(context.size()));
    }
    max_prefix = std::max(max_prefix, q.prefix);
  }
  // Context elements past the longest prefix can never influence an answer.
  const auto prepared = Prepare(context.first(max_prefix));
  return BatchMarginals(*prepared, queries, ledger, policy);
}

std::vector<double> Oracle::BatchMarginals(const PrefixContext& prepared,
                                           std::span<const MarginalQuery> queries,
                                           QueryLedger& ledger,
                                           RoundPolicy policy) const {
  if (queries.empty()) return {};
  const int n = size();
  for (const MarginalQuery& q : queries) {
    if (q.element < 0 || q.element >= n) {
      throw std::out_of_range("query element " + std::to_string(q.element) +
                              " outside ground set");
    }
    if (q.prefix < 0 || q.prefix > prepared.context_size()) {
      throw std::out_of_range("query prefix " + std::to_string(q.prefix) +
                              " outside prepared context");
    }
  }
  std::vector<double> out(queries.size(), 0.0);
  std::atomic<std::int64_t> executed{0};
  ParallelFor(pool_, queries.size(), [&](std::size_t begin, std::size_t end) {
    std::int64_t local = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const MarginalQuery& q = queries[i];
      if (prepared.InPrefix(q.element, q.prefix)) continue;
      out[i] = prepared.Gain(q.element, q.prefix);
      ++local;
    }
    executed.fetch_add(local, std::memory_order_relaxed);
  });
  if (policy == RoundPolicy::kNewRound) {
    ledger.RecordRound(executed.load());
  } else {
    ledger.AddToLastRound(executed.load());
  }
  return out;
}

std::vector<double> Oracle::Singletons(QueryLedger& ledger) const {
  std::vector<MarginalQuery> queries(size());
  for (int a = 0; a < size(); ++a) queries[a] = {a, 0};
  return BatchMarginals(std::span<const ElementId>(), queries, ledger);
}

double TopKSum(std::span<const double> values, int k) {
  std::vector<double> sorted(values.begin(), values.end());
  k = std::min<int>(k, static_cast<int>(sorted.size()));
  std::partial_sort(sorted.begin(), sorted.begin() + k, sorted.end(),
                    std::greater<double>());
  double sum = 0.0;
  for (int i = 0; i < k; ++i) sum += sorted[i];
  return sum;
}

double Oracle::TopKSingletonSum(int k, QueryLedger& ledger) const {
  if (k <= 0 || k > size()) {
    throw std::invalid_argument("TopKSingletonSum: need 1 <= k <= n, got k=" +
                                std::to_string(k));
  }
  const std::vector<double> singles = Singletons(ledger);
  return TopKSum(singles, k);
}

}  // namespace fastsm
