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


// FAST adaptive sequencing for monotone submodular maximization under a
// cardinality constraint, the OPT-guessing wrapper around it, and the plain
// adaptive-sequencing algorithm that assumes OPT is known.
//
// Logarithms are natural throughout.

#ifndef FASTSM_FAST_H_
#define FASTSM_FAST_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fastsm/oracle.h"
#include "fastsm/rng.h"
#include "fastsm/run_result.h"

namespace fastsm {

struct FastConfig {
  double epsilon = 0.025;
  double delta = 0.05;
  int k = 1;
  std::uint64_t seed = 0;
  // Replaces the sample size m in every mode.
  std::optional<std::int64_t> m_override;
  // Inner iterations allowed per outer iteration before failure is declared.
  // Defaults to ceil(ln(n) / epsilon).
  std::optional<int> inner_round_cap;
  // Try v = (sum of the k best singletons) before the guess ladder.
  bool single_guess_first = true;
  // Permits epsilon in (0.1, 1/3). The approximation guarantee is void there.
  bool allow_large_epsilon = false;
  // Skip elements whose cached marginal bound is already below the threshold.
  bool lazy_updates = true;
  // After the guess search, return the highest-valued solution among all
  // probed guesses instead of the one of the largest accepted guess. The
  // latter is always a candidate, so its guarantee carries over.
  bool return_best_probe = true;

  // Throws std::invalid_argument when a field is out of range for ground
  // set size n.
  void Validate(int n) const;
};

// low * (1 - epsilon)^-j for j = 0, 1, ... up to and including the first
// value >= high. Throws std::invalid_argument unless 0 < low and
// 0 < epsilon < 1.
std::vector<double> Geometric(double low, double high, double epsilon);

// Distinct integer positions in [1, max_position]: the floors of
// Geometric(1, max_position, epsilon) with the last one clamped to
// max_position. Always contains 1 and max_position.
std::vector<int> PositionLadder(int max_position, double epsilon);

// ln(ln(k) / epsilon), with k raised to 3 when smaller so the value is
// defined and positive.
double Ell(int k, double epsilon);

enum class SampleMode { kFull, kSingleGuess };

// Number of samples m used to estimate the fraction of surviving elements
// above the threshold:
//   full:         ceil((2 + e) / (e^2 (1 - 3e)) * ln(4 l ln(n) / (delta e^2)))
//   single guess: ceil((2 + e) / (e^2 (1 - 3e)) * ln(2 / delta))
// Throws std::invalid_argument for epsilon outside (0, 1/3), delta outside
// (0, 1), or (full mode) k < 3 or n < 2.
std::int64_t SampleComplexity(double epsilon, double delta, int n, int k,
                              SampleMode mode);

// Resource bounds enforced at run time.
double FastRoundBound(double epsilon, int n, int k);  // e^-2 ln(n) l^2
double FastQueryBoundPerGuess(double epsilon, int n, int k,
                              std::int64_t m);     // 2e^-2 l n + e^-2 ln(n) l^2 m
double VanillaRoundBound(double epsilon, int n);         // e^-2 ln(n)
double VanillaQueryBound(double epsilon, int n, int k);  // e^-2 n k

// Index of the last entry of a ladder of `size` entries on which `pred`
// holds, assuming pred is true on a prefix and false after it. Evaluates pred
// at most ceil(log2(size + 1)) times. With first_known_true, entry 0 is taken
// as true without evaluating it.
template <typename Pred>
std::optional<std::size_t> BinarySearchMax(std::size_t size, Pred&& pred,
                                           bool first_known_true = false) {
  if (size == 0) return std::nullopt;
  std::ptrdiff_t lo = first_known_true ? 0 : -1;
  auto hi = static_cast<std::ptrdiff_t>(size);
  while (hi - lo > 1) {
    const std::ptrdiff_t mid = lo + (hi - lo) / 2;
    if (pred(static_cast<std::size_t>(mid))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (lo < 0) return std::nullopt;
  return static_cast<std::size_t>(lo);
}

// Optional record of what one Fast run did, for tests and diagnostics.
struct FastTrace {
  struct Addition {
    ElementId element;
    double marginal;   // against S plus the sequence prefix before it
    double threshold;
  };
  struct Step {
    int outer;
    std::int64_t x_before;
    std::int64_t x_after;
    bool prefix_path;
    int i_star;  // 0 when the prefix path was not taken
  };
  std::vector<double> thresholds;  // one per outer iteration
  std::vector<Addition> additions;  // preprocessing additions
  std::vector<Step> steps;
};

// Per-run knobs of Fast, resolved from a FastConfig by the callers below.
struct FastOptions {
  double epsilon = 0.025;
  int k = 1;
  std::int64_t m = 1;
  int inner_round_cap = 1;
  // Failure is declared instead of starting an inner iteration that could
  // push ledger.rounds() above round_limit or the run's own query count above
  // query_limit. Negative means unlimited.
  std::int64_t round_limit = -1;
  std::int64_t query_limit = -1;
  bool lazy_updates = true;
  // Known singleton values; they seed the lazy bounds (may be empty).
  std::span<const double> singleton_bounds;
  FastTrace* trace = nullptr;
};

struct FastRun {
  std::vector<ElementId> solution;
  double value = 0.0;
  bool failed = false;
  std::int64_t queries = 0;
  std::int64_t rounds = 0;
};

// One run of FAST with guess v > 0. Throws std::invalid_argument for v <= 0.
FastRun Fast(const Oracle& oracle, double v, const FastOptions& options,
             Rng& rng, QueryLedger& ledger);

// Fast with options derived from cfg (full-mode m, default caps, rng seeded
// from cfg.seed).
FastRun Fast(const Oracle& oracle, double v, const FastConfig& cfg,
             QueryLedger& ledger, FastTrace* trace = nullptr);

struct GuessProbe {
  double guess;
  bool single_guess;
  std::int64_t m;
  std::int64_t queries;
  std::int64_t rounds;
  double value;
  bool accepted;  // f(S_v) >= (1 - 1/e) v
  bool failed;
};

struct FastFullResult {
  RunResult result;
  std::vector<GuessProbe> probes;
  std::size_t ladder_size = 0;
  // Singleton queries spent building the ladder endpoints.
  std::int64_t endpoint_queries = 0;
};

// FAST with a binary search over guesses of OPT.
FastFullResult FastFull(const Oracle& oracle, const FastConfig& cfg,
                        QueryLedger& ledger);

struct VanillaConfig {
  double epsilon = 0.1;
  int k = 1;
  std::uint64_t seed = 0;
  // Declares failure rather than exceed the round and query bounds.
  bool enforce_bounds = true;
};

// Adaptive sequencing with a known OPT value: k i.i.d. draws per iteration,
// the shortest prefix after which an epsilon fraction of survivors drops
// below the threshold. Throws std::invalid_argument for opt_value <= 0.
RunResult AdaptiveSequencing(const Oracle& oracle, double opt_value,
                             const VanillaConfig& cfg, QueryLedger& ledger);

}  // namespace fastsm

#endif  // FASTSM_FAST_H_
