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

// Black-box access to a monotone submodular set function f over the ground
// set {0, ..., n-1}, with query and adaptive-round accounting.
//
// Every algorithm in this library talks to its objective through Oracle,
// never directly: Oracle is the only place where queries are charged. A query
// is one marginal f_T(a) = f(T + a) - f(T) (or one set value f(T)); an
// adaptive round is one batch of queries whose inputs were all fixed before
// the batch started.

#ifndef FASTSM_ORACLE_H_
#define FASTSM_ORACLE_H_

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fastsm/thread_pool.h"

namespace fastsm {

using ElementId = std::int32_t;

// Absolute slack for every value comparison (thresholds use >= t - kTolerance).
inline constexpr double kTolerance = 1e-9;

// Answers marginal queries against every prefix of one fixed context
// sequence c_0, c_1, ...: Gain(a, p) = f_{ {c_0..c_{p-1}} }(a).
//
// Built by Objective::Prepare. Immutable once built; Gain is safe to call from
// many threads at once. The context may contain repeats; only the first
// occurrence of an element matters.
class PrefixContext {
 public:
  static constexpr std::int32_t kAbsent = std::numeric_limits<std::int32_t>::max();

  PrefixContext(int n, std::span<const ElementId> context);
  virtual ~PrefixContext() = default;

  std::int32_t context_size() const { return context_size_; }

  // Position of the first occurrence of a in the context, or kAbsent.
  std::int32_t position(ElementId a) const { return position_[a]; }

  bool InPrefix(ElementId a, std::int32_t prefix) const {
    return position_[a] < prefix;
  }

  // Marginal of a with respect to the first `prefix` context elements.
  // Precondition: !InPrefix(a, prefix).
  virtual double Gain(ElementId a, std::int32_t prefix) const = 0;

 protected:
  std::span<const std::int32_t> positions() const { return position_; }

 private:
  std::int32_t context_size_;
  std::vector<std::int32_t> position_;
};

// Monotone submodular set function with f(empty) = 0. Implementations are
// immutable after construction and safe to share between threads.
class Objective {
 public:
  virtual ~Objective() = default;

  // Ground-set size n.
  virtual int size() const = 0;

  virtual std::string Describe() const = 0;

  // f(set). `set` holds distinct in-range ids.
  virtual double Value(std::span<const ElementId> set) const = 0;

  // Precomputes what is needed to answer Gain(a, p) for every p up to
  // context.size(). May use `pool` (nullable) for the precomputation.
  virtual std::unique_ptr<PrefixContext> Prepare(
      std::span<const ElementId> context, ThreadPool* pool) const = 0;
};

// Query count and adaptive-round count of one run.
class QueryLedger {
 public:
  // Opens a new adaptive round that spent `queries` queries.
  void RecordRound(std::int64_t queries);

  // Charges queries to the most recent round (opening one if none exists).
  void AddToLastRound(std::int64_t queries);

  std::int64_t total_queries() const { return total_queries_; }
  std::int64_t rounds() const {
    return static_cast<std::int64_t>(per_round_.size());
  }
  const std::vector<std::int64_t>& per_round_queries() const {
    return per_round_;
  }

 private:
  std::int64_t total_queries_ = 0;
  std::vector<std::int64_t> per_round_;
};

// Ordered solution: insertion order defines the prefixes A_1, A_2, ...
class Solution {
 public:
  explicit Solution(int n) : member_(n, false) {}

  bool Contains(ElementId a) const { return member_[a]; }

  // Appends a; throws std::invalid_argument on a duplicate.
  void Add(ElementId a);

  std::span<const ElementId> elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }

  // Cached f(elements); maintained by whoever grows the solution.
  double value() const { return value_; }
  void set_value(double v) { value_ = v; }

  // Recomputes the cached value directly from the objective. Not a charged
  // query: the value of the current solution is bookkeeping the algorithms
  // already hold.
  void Refresh(const Objective& f) { value_ = f.Value(elements_); }

 private:
  std::vector<ElementId> elements_;
  std::vector<bool> member_;
  double value_ = 0.0;
};

// Per-element upper bounds on current marginals. A bound computed against a
// solution S stays valid for every superset of S by submodularity, so while
// the solution only grows an element whose bound is below the threshold can
// be dropped without a query.
class LazyBoundCache {
 public:
  explicit LazyBoundCache(int n)
      : bound_(n, std::numeric_limits<double>::infinity()), version_(n, -1) {}

  double bound(ElementId a) const { return bound_[a]; }

  // Solution size at which bound(a) was computed; -1 if never.
  int version(ElementId a) const { return version_[a]; }

  void Update(ElementId a, double marginal, int solution_size) {
    bound_[a] = marginal;
    version_[a] = solution_size;
  }

  bool CanSkip(ElementId a, double threshold) const {
    return bound_[a] < threshold - kTolerance;
  }

 private:
  std::vector<double> bound_;
  std::vector<int> version_;
};

// One marginal query of a batch: f_{context[0, prefix)}(element).
struct MarginalQuery {
  ElementId element;
  std::int32_t prefix;
};

enum class RoundPolicy {
  kNewRound,
  // Charge to the previous round: for work that the parallel model performs
  // concurrently with an earlier batch (see ParallelLtlg).
  kContinueRound,
};

// Charged access to an objective. Batches may fan out over `pool`; results
// never depend on the number of threads.
class Oracle {
 public:
  explicit Oracle(const Objective& objective, ThreadPool* pool = nullptr)
      : objective_(&objective), pool_(pool) {}

  const Objective& objective() const { return *objective_; }
  ThreadPool* pool() const { return pool_; }
  int size() const { return objective_->size(); }

  // f(set): one query, one round. Throws std::out_of_range on a bad id and
  // std::invalid_argument on a repeated id.
  double Value(std::span<const ElementId> set, QueryLedger& ledger) const;

  // f of each set, all in a single round.
  std::vector<double> Values(const std::vector<std::vector<ElementId>>& sets,
                             QueryLedger& ledger) const;

  // f_set(a). Returns 0 without charging when a is already in `set`;
  // otherwise one query, one round.
  double Marginal(ElementId a, std::span<const ElementId> set,
                  QueryLedger& ledger) const;

  // Uncharged: builds the evaluation context for `context`.
  std::unique_ptr<PrefixContext> Prepare(
      std::span<const ElementId> context) const;

  // Evaluates every query in one adaptive round and returns the marginals in
  // input order. Queries whose element already lies in its prefix return 0
  // and are not charged. An empty batch returns {} and is not a round.
  std::vector<double> BatchMarginals(
      std::span<const ElementId> context,
      std::span<const MarginalQuery> queries, QueryLedger& ledger,
      RoundPolicy policy = RoundPolicy::kNewRound) const;

  // Same, against an already prepared context.
  std::vector<double> BatchMarginals(
      const PrefixContext& prepared, std::span<const MarginalQuery> queries,
      QueryLedger& ledger, RoundPolicy policy = RoundPolicy::kNewRound) const;

  // f({a}) for every a: n queries in one round.
  std::vector<double> Singletons(QueryLedger& ledger) const;

  // Sum of the k largest singleton values, an upper bound on OPT. Throws
  // std::invalid_argument unless 1 <= k <= n.
  double TopKSingletonSum(int k, QueryLedger& ledger) const;

 private:
  void CheckIds(std::span<const ElementId> ids) const;

  const Objective* objective_;
  ThreadPool* pool_;
};

// Sum of the k largest entries of `values` (ties are irrelevant to the sum).
double TopKSum(std::span<const double> values, int k);

}  // namespace fastsm

#endif  // FASTSM_ORACLE_H_
