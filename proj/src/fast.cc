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


#include "fastsm/fast.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fastsm {
namespace {

constexpr double kOneMinusInvE = 1.0 - 0.36787944117144233;

double LogN(int n) { return std::log(static_cast<double>(std::max(n, 3))); }

int OuterIterations(double epsilon) {
  return static_cast<int>(std::ceil(1.0 / epsilon - 1e-9));
}

int DefaultInnerCap(double epsilon, int n) {
  return std::max(1, static_cast<int>(std::ceil(LogN(n) / epsilon)));
}

int CeilLog2(std::size_t x) {
  int bits = 0;
  while ((std::size_t{1} << bits) < x) ++bits;
  return bits;
}

bool Passes(double marginal, double threshold) {
  return marginal >= threshold - kTolerance;
}

// Fills `s` with the lowest-id non-members until it has k elements.
void FillLowestIds(Solution& s, int k, int n) {
  for (ElementId a = 0; a < n && s.size() < k; ++a) {
    if (!s.Contains(a)) s.Add(a);
  }
}

std::vector<ElementId> Concat(std::span<const ElementId> a,
                              std::span<const ElementId> b) {
  std::vector<ElementId> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

void FastConfig::Validate(int n) const {
  const double max_epsilon = allow_large_epsilon ? 1.0 / 3.0 : 0.1;
  if (!(epsilon > 0.0 && epsilon <= max_epsilon) ||
      (allow_large_epsilon && epsilon >= 1.0 / 3.0)) {
    throw std::invalid_argument(
        "epsilon must lie in (0, 0.1] (or below 1/3 with allow_large_epsilon)");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  if (k < 1 || k > n) {
    throw std::invalid_argument("k must lie in [1, n], got k=" +
                                std::to_string(k) + ", n=" + std::to_string(n));
  }
  if (m_override && *m_override < 1) {
    throw std::invalid_argument("m_override must be >= 1");
  }
  if (inner_round_cap && *inner_round_cap < 1) {
    throw std::invalid_argument("inner_round_cap must be >= 1");
  }
}

std::vector<double> Geometric(double low, double high, double epsilon) {
  if (!(low > 0.0) || !std::isfinite(low) || !std::isfinite(high)) {
    throw std::invalid_argument("Geometric: need finite 0 < low");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("Geometric: epsilon must lie in (0, 1)");
  }
  std::vector<double> out;
  for (int j = 0;; ++j) {
    const double value = low * std::pow(1.0 - epsilon, -j);
    out.push_back(value);
    if (value >= high) break;
  }
  return out;
}

std::vector<int> PositionLadder(int max_position, double epsilon) {
  if (max_position < 1) {
    throw std::invalid_argument("PositionLadder: max_position must be >= 1");
  }
  std::vector<int> out;
  for (double v : Geometric(1.0, max_position, epsilon)) {
    const int p = std::min(max_position, static_cast<int>(std::floor(v)));
    if (out.empty() || p > out.back()) out.push_back(p);
  }
  return out;
}

double Ell(int k, double epsilon) {
  return std::log(std::log(static_cast<double>(std::max(k, 3))) / epsilon);
}

std::int64_t SampleComplexity(double epsilon, double delta, int n, int k,
                              SampleMode mode) {
  if (!(epsilon > 0.0 && epsilon < 1.0 / 3.0)) {
    throw std::invalid_argument("SampleComplexity: epsilon must lie in (0, 1/3)");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("SampleComplexity: delta must lie in (0, 1)");
  }
  const double scale =
      (2.0 + epsilon) / (epsilon * epsilon * (1.0 - 3.0 * epsilon));
  double log_term;
  if (mode == SampleMode::kSingleGuess) {
    log_term = std::log(2.0 / delta);
  } else {
    if (k < 3 || n < 2) {
      throw std::invalid_argument("SampleComplexity: full mode needs k >= 3, n >= 2");
    }
    log_term = std::log(4.0 * Ell(k, epsilon) * std::log(static_cast<double>(n)) /
                        (delta * epsilon * epsilon));
  }
  return std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil(scale * log_term)));
}

double FastRoundBound(double epsilon, int n, int k) {
  const double ell = Ell(k, epsilon);
  return LogN(n) * ell * ell / (epsilon * epsilon);
}

double FastQueryBoundPerGuess(double epsilon, int n, int k, std::int64_t m) {
  const double ell = Ell(k, epsilon);
  const double inv_sq = 1.0 / (epsilon * epsilon);
  return 2.0 * inv_sq * ell * n +
         inv_sq * LogN(n) * ell * ell * static_cast<double>(m);
}

double VanillaRoundBound(double epsilon, int n) {
  return LogN(n) / (epsilon * epsilon);
}

double VanillaQueryBound(double epsilon, int n, int k) {
  return static_cast<double>(n) * k / (epsilon * epsilon);
}

FastRun Fast(const Oracle& oracle, double v, const FastOptions& options,
             Rng& rng, QueryLedger& ledger) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument("Fast: guess v must be positive");
  }
  const int n = oracle.size();
  const int k = options.k;
  const double eps = options.epsilon;
  if (k < 1 || k > n) throw std::invalid_argument("Fast: need 1 <= k <= n");
  FastTrace* trace = options.trace;

  const std::int64_t queries_at_start = ledger.total_queries();
  const std::int64_t rounds_at_start = ledger.rounds();
  Solution s(n);
  LazyBoundCache bounds(n);
  if (options.lazy_updates) {
    for (std::size_t a = 0; a < options.singleton_bounds.size(); ++a) {
      bounds.Update(static_cast<ElementId>(a), options.singleton_bounds[a], 0);
    }
  }
  bool failed = false;

  // Rounds and queries one inner iteration may spend in the worst case.
  auto would_exceed = [&](std::int64_t x_size) {
    const std::int64_t sample = std::min<std::int64_t>(options.m, x_size);
    const std::size_t ladder = PositionLadder(k - s.size(), eps).size();
    const int searches = CeilLog2(ladder);
    const std::int64_t max_rounds = 2 + searches;
    const std::int64_t max_queries = 2 * x_size + sample * searches;
    if (options.round_limit >= 0 &&
        ledger.rounds() + max_rounds > options.round_limit) {
      return true;
    }
    return options.query_limit >= 0 &&
           ledger.total_queries() - queries_at_start + max_queries >
               options.query_limit;
  };

  const int outer_iterations = OuterIterations(eps);
  for (int outer = 0; outer < outer_iterations && s.size() < k && !failed;
       ++outer) {
    const double t = (1.0 - eps) * (v - s.value()) / k;
    if (trace != nullptr) trace->thresholds.push_back(t);
    if (t <= kTolerance) {
      // Every element clears a non-positive bar.
      FillLowestIds(s, k, n);
      s.Refresh(oracle.objective());
      break;
    }
    std::vector<ElementId> x;
    for (ElementId a = 0; a < n; ++a) {
      if (s.Contains(a)) continue;
      if (options.lazy_updates && bounds.CanSkip(a, t)) continue;
      x.push_back(a);
    }

    int inner = 0;
    while (!x.empty() && s.size() < k) {
      if (++inner > options.inner_round_cap ||
          would_exceed(static_cast<std::int64_t>(x.size()))) {
        failed = true;
        break;
      }
      const auto x_before = static_cast<std::int64_t>(x.size());

      // Preprocessing: every sequence element clearing t against S plus its
      // own prefix joins S.
      std::vector<ElementId> seq = x;
      rng.Shuffle(seq);
      {
        const auto base = static_cast<std::int32_t>(s.size());
        const std::vector<ElementId> context = Concat(s.elements(), seq);
        std::vector<MarginalQuery> queries(seq.size());
        for (std::size_t i = 0; i < seq.size(); ++i) {
          queries[i] = {seq[i], base + static_cast<std::int32_t>(i)};
        }
        const auto prepared = oracle.Prepare(context);
        const std::vector<double> marginal =
            oracle.BatchMarginals(*prepared, queries, ledger);
        for (std::size_t i = 0; i < seq.size() && s.size() < k; ++i) {
          if (!Passes(marginal[i], t)) continue;
          s.Add(seq[i]);
          if (trace != nullptr) trace->additions.push_back({seq[i], marginal[i], t});
        }
        s.Refresh(oracle.objective());
      }
      if (s.size() >= k) {
        if (trace != nullptr) {
          trace->steps.push_back({outer, x_before, 0, false, 0});
        }
        break;
      }

      // Filter against the updated solution.
      std::vector<ElementId> x0;
      {
        std::vector<ElementId> candidates;
        for (ElementId a : x) {
          if (!s.Contains(a)) candidates.push_back(a);
        }
        const auto base = static_cast<std::int32_t>(s.size());
        std::vector<MarginalQuery> queries(candidates.size());
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          queries[i] = {candidates[i], base};
        }
        const std::vector<double> marginal =
            oracle.BatchMarginals(s.elements(), queries, ledger);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          bounds.Update(candidates[i], marginal[i], s.size());
          if (Passes(marginal[i], t)) x0.push_back(candidates[i]);
        }
      }
      if (static_cast<double>(x0.size()) <= (1.0 - eps) * x_before) {
        x = std::move(x0);
        if (trace != nullptr) {
          trace->steps.push_back(
              {outer, x_before, static_cast<std::int64_t>(x.size()), false, 0});
        }
        continue;
      }

      // Prefix path. The sequence restricted to the survivors is itself a
      // uniform permutation of them.
      std::vector<bool> survives(n, false);
      for (ElementId a : x0) survives[a] = true;
      std::vector<ElementId> order;
      order.reserve(x0.size());
      for (ElementId a : seq) {
        if (survives[a]) order.push_back(a);
      }
      const std::vector<ElementId> sample =
          rng.Sample(std::span<const ElementId>(x0),
                     static_cast<std::size_t>(options.m));
      const std::vector<int> ladder = PositionLadder(
          std::min<int>(k - s.size(), static_cast<int>(order.size())), eps);
      const auto base = static_cast<std::int32_t>(s.size());
      const std::vector<ElementId> context = Concat(s.elements(), order);
      const auto prepared = oracle.Prepare(context);
      const double needed = (1.0 - 2.0 * eps) * static_cast<double>(sample.size());
      // Position 1 tests the empty prefix, where all of R already passed the
      // filter.
      const std::size_t best = *BinarySearchMax(
          ladder.size(),
          [&](std::size_t idx) {
            const std::int32_t prefix = base + ladder[idx] - 1;
            std::vector<MarginalQuery> queries(sample.size());
            for (std::size_t j = 0; j < sample.size(); ++j) {
              queries[j] = {sample[j], prefix};
            }
            const std::vector<double> marginal =
                oracle.BatchMarginals(*prepared, queries, ledger);
            std::int64_t passing = 0;
            for (std::size_t j = 0; j < sample.size(); ++j) {
              passing += !prepared->InPrefix(sample[j], prefix) &&
                         Passes(marginal[j], t);
            }
            return static_cast<double>(passing) >= needed - kTolerance;
          },
          /*first_known_true=*/true);
      const int i_star = ladder[best];
      std::vector<bool> appended(n, false);
      for (int i = 0; i < i_star; ++i) {
        s.Add(order[i]);
        appended[order[i]] = true;
      }
      s.Refresh(oracle.objective());
      x.clear();
      for (ElementId a : x0) {
        if (!appended[a]) x.push_back(a);
      }
      if (trace != nullptr) {
        trace->steps.push_back(
            {outer, x_before, static_cast<std::int64_t>(x.size()), true, i_star});
      }
    }
  }

  FastRun run;
  run.solution.assign(s.elements().begin(), s.elements().end());
  run.value = s.value();
  run.failed = failed;
  run.queries = ledger.total_queries() - queries_at_start;
  run.rounds = ledger.rounds() - rounds_at_start;
  return run;
}

FastRun Fast(const Oracle& oracle, double v, const FastConfig& cfg,
             QueryLedger& ledger, FastTrace* trace) {
  const int n = oracle.size();
  cfg.Validate(n);
  FastOptions options;
  options.epsilon = cfg.epsilon;
  options.k = cfg.k;
  options.m = cfg.m_override.value_or(SampleComplexity(
      cfg.epsilon, cfg.delta, std::max(n, 2), std::max(cfg.k, 3),
      SampleMode::kFull));
  options.inner_round_cap =
      cfg.inner_round_cap.value_or(DefaultInnerCap(cfg.epsilon, n));
  options.lazy_updates = cfg.lazy_updates;
  options.trace = trace;
  Rng rng(cfg.seed);
  return Fast(oracle, v, options, rng, ledger);
}

FastFullResult FastFull(const Oracle& oracle, const FastConfig& cfg,
                        QueryLedger& ledger) {
  const int n = oracle.size();
  cfg.Validate(n);
  const int k = cfg.k;
  const std::int64_t queries_at_start = ledger.total_queries();
  const std::int64_t rounds_at_start = ledger.rounds();

  FastFullResult out;
  RunResult& result = out.result;
  result.algorithm = "fast";
  auto finish = [&](std::vector<ElementId> solution, double value, bool failed,
                    double guess) {
    result.solution = std::move(solution);
    result.value = value;
    result.failed = failed;
    result.guess_used = guess;
    result.queries = ledger.total_queries() - queries_at_start;
    result.rounds = ledger.rounds() - rounds_at_start;
    return out;
  };

  if (k == n) {
    std::vector<ElementId> all(n);
    std::iota(all.begin(), all.end(), 0);
    return finish(all, oracle.objective().Value(all), false, 0.0);
  }

  const std::vector<double> singles = oracle.Singletons(ledger);
  out.endpoint_queries = ledger.total_queries() - queries_at_start;
  const double top = TopKSum(singles, k);
  const double best_single = *std::max_element(singles.begin(), singles.end());
  if (!(best_single > kTolerance)) {
    // f vanishes on every singleton, hence everywhere.
    std::vector<ElementId> first(k);
    std::iota(first.begin(), first.end(), 0);
    return finish(first, oracle.objective().Value(first), false, 0.0);
  }

  const int k_for_ell = std::max(k, 3);
  const auto round_limit = rounds_at_start +
      static_cast<std::int64_t>(std::floor(FastRoundBound(cfg.epsilon, n, k)));
  std::uint64_t stream = 0;
  std::vector<FastRun> runs;
  auto probe = [&](double v, bool single_guess) -> bool {
    FastOptions options;
    options.epsilon = cfg.epsilon;
    options.k = k;
    options.m = cfg.m_override.value_or(SampleComplexity(
        cfg.epsilon, cfg.delta, std::max(n, 2), k_for_ell,
        single_guess ? SampleMode::kSingleGuess : SampleMode::kFull));
    options.inner_round_cap =
        cfg.inner_round_cap.value_or(DefaultInnerCap(cfg.epsilon, n));
    options.round_limit = round_limit;
    options.query_limit = static_cast<std::int64_t>(std::floor(
        FastQueryBoundPerGuess(cfg.epsilon, n, k, options.m)));
    options.lazy_updates = cfg.lazy_updates;
    options.singleton_bounds = singles;
    Rng rng(DeriveSeed(cfg.seed, stream++));
    FastRun run = Fast(oracle, v, options, rng, ledger);
    const bool accepted = run.value >= kOneMinusInvE * v - kTolerance;
    out.probes.push_back({v, single_guess, options.m, run.queries, run.rounds,
                          run.value, accepted, run.failed});
    runs.push_back(std::move(run));
    return accepted;
  };

  if (cfg.single_guess_first && probe(top, /*single_guess=*/true)) {
    FastRun& run = runs.back();
    return finish(std::move(run.solution), run.value, run.failed, top);
  }

  const std::vector<double> ladder = Geometric(best_single, top, cfg.epsilon);
  out.ladder_size = ladder.size();
  std::vector<std::ptrdiff_t> run_of_rung(ladder.size(), -1);
  const auto found = BinarySearchMax(ladder.size(), [&](std::size_t idx) {
    const bool accepted = probe(ladder[idx], /*single_guess=*/false);
    run_of_rung[idx] = static_cast<std::ptrdiff_t>(runs.size()) - 1;
    return accepted;
  });
  if (found && !cfg.return_best_probe) {
    FastRun& run = runs[run_of_rung[*found]];
    return finish(std::move(run.solution), run.value, run.failed, ladder[*found]);
  }
  // Best solution seen, earliest on ties.
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].value > runs[best].value) best = i;
  }
  return finish(std::move(runs[best].solution), runs[best].value,
                runs[best].failed, out.probes[best].guess);
}

RunResult AdaptiveSequencing(const Oracle& oracle, double opt_value,
                             const VanillaConfig& cfg, QueryLedger& ledger) {
  if (!(opt_value > 0.0) || !std::isfinite(opt_value)) {
    throw std::invalid_argument("AdaptiveSequencing: opt_value must be positive");
  }
  const int n = oracle.size();
  const int k = cfg.k;
  const double eps = cfg.epsilon;
  if (k < 1 || k > n) throw std::invalid_argument("AdaptiveSequencing: need 1 <= k <= n");
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("AdaptiveSequencing: epsilon must lie in (0, 1)");
  }
  const std::int64_t queries_at_start = ledger.total_queries();
  const std::int64_t rounds_at_start = ledger.rounds();
  const auto round_limit =
      static_cast<std::int64_t>(std::floor(VanillaRoundBound(eps, n)));
  const auto query_limit =
      static_cast<std::int64_t>(std::floor(VanillaQueryBound(eps, n, k)));
  Rng rng(cfg.seed);
  Solution s(n);
  bool failed = false;

  const int outer_iterations = OuterIterations(eps);
  for (int outer = 0; outer < outer_iterations && s.size() < k && !failed;
       ++outer) {
    const double t = (1.0 - eps) * (opt_value - s.value()) / k;
    if (t <= kTolerance) {
      FillLowestIds(s, k, n);
      s.Refresh(oracle.objective());
      break;
    }
    std::vector<ElementId> x(n);
    std::iota(x.begin(), x.end(), 0);
    while (!x.empty() && s.size() < k) {
      const auto x_size = static_cast<std::int64_t>(x.size());
      if (cfg.enforce_bounds &&
          (ledger.rounds() - rounds_at_start + 1 > round_limit ||
           ledger.total_queries() - queries_at_start + k * x_size > query_limit)) {
        failed = true;
        break;
      }
      std::vector<ElementId> seq(k);
      for (ElementId& a : seq) a = x[rng.UniformInt(x.size())];
      // |X_i| for every i in [k], all in one round.
      const std::vector<ElementId> context = Concat(s.elements(), seq);
      const auto base = static_cast<std::int32_t>(s.size());
      std::vector<MarginalQuery> queries;
      queries.reserve(static_cast<std::size_t>(k) * x.size());
      for (int i = 0; i < k; ++i) {
        for (ElementId a : x) queries.push_back({a, base + i});
      }
      const auto prepared = oracle.Prepare(context);
      const std::vector<double> marginal =
          oracle.BatchMarginals(*prepared, queries, ledger);
      auto survives = [&](int i, std::size_t j) {
        const ElementId a = x[j];
        return !prepared->InPrefix(a, base + i) &&
               Passes(marginal[static_cast<std::size_t>(i) * x.size() + j], t);
      };
      int i_star = -1;  // 0-based: prefix of length i_star, survivors X_{i_star}
      for (int i = 0; i < k && i_star < 0; ++i) {
        std::int64_t count = 0;
        for (std::size_t j = 0; j < x.size(); ++j) count += survives(i, j);
        if (static_cast<double>(count) <= (1.0 - eps) * x_size) i_star = i;
      }
      // With no qualifying position the whole sequence is kept and X shrinks
      // to the survivors of the full prefix.
      const int keep = i_star < 0 ? k : i_star;
      const int survivors_of = i_star < 0 ? k - 1 : i_star;
      for (int i = 0; i < keep && s.size() < k; ++i) {
        if (!s.Contains(seq[i])) s.Add(seq[i]);
      }
      s.Refresh(oracle.objective());
      std::vector<ElementId> next;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (survives(survivors_of, j) && !s.Contains(x[j])) next.push_back(x[j]);
      }
      x = std::move(next);
    }
  }

  RunResult result;
  result.algorithm = "adaptive_sequencing";
  result.solution.assign(s.elements().begin(), s.elements().end());
  result.value = s.value();
  result.queries = ledger.total_queries() - queries_at_start;
  result.rounds = ledger.rounds() - rounds_at_start;
  result.failed = failed;
  result.guess_used = opt_value;
  return result;
}

}  // namespace fastsm
