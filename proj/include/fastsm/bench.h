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


// Benchmark harness: experiment specs and presets, instance construction,
// timed runs, and CSV/JSON result files.

#ifndef FASTSM_BENCH_H_
#define FASTSM_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fastsm/fast.h"
#include "fastsm/oracle.h"
#include "fastsm/run_result.h"
#include "fastsm/thread_pool.h"

namespace fastsm {

// Invalid experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable input or unwritable output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentSpec {
  std::string name = "experiment";

  // max_cover | directed_cover | revenue | influence | movies
  std::string objective = "max_cover";
  // er | sbm | ws | ba | directed_er | random_ratings | file
  std::string generator = "er";

  int n = 500;
  double p = 0.01;  // ER / directed ER edge probability, SBM in-cluster
  double p_out = 0.0;  // SBM cross-cluster probability
  int clusters = 10;
  int cluster_min = 10;
  int cluster_max = 100;
  int ring_neighbors = 2;
  double rewire = 0.1;
  int ba_m = 1;
  bool weighted = false;  // draw U(weight_lo, weight_hi) edge weights
  double weight_lo = 1.0;
  double weight_hi = 2.0;

  double revenue_alpha = 0.9;
  double influence_p = 0.01;
  std::optional<double> movie_alpha;
  std::optional<double> movie_beta;
  int movie_users = 500;
  int movie_genres = 18;

  std::string input_path;   // edge list or ratings file (generator = file)
  std::string genres_path;  // genre file for movies
  bool directed_input = false;
  bool remap_ids = true;

  // fast | lazy_greedy | ltlg | random
  std::vector<std::string> algorithms = {"fast", "lazy_greedy", "ltlg",
                                         "random"};
  std::vector<int> ks = {25, 50, 100};
  std::vector<std::uint64_t> seeds = {0};
  int threads = 1;
  double fast_epsilon = 0.025;
  double fast_delta = 0.05;
  double ltlg_epsilon = 0.1;
  int random_trials = 10;
  bool warmup = true;

  // Checks everything that does not need the instance. Throws ConfigError.
  void Validate() const;
};

// Names accepted by Preset(), in display order.
std::vector<std::string> PresetNames();

// Throws ConfigError for an unknown name.
ExperimentSpec Preset(const std::string& name);

// `key = value` lines, `#` comments. A `preset` key, if present, must come
// first and seeds the remaining fields. Lists are comma separated; seeds
// also accept `a..b`. Throws ConfigError naming the offending line.
ExperimentSpec ParseSpec(const std::string& text);
ExperimentSpec LoadSpec(const std::string& path);

// Parses "1,2,3" or "0..19" (inclusive). Throws ConfigError.
std::vector<std::uint64_t> ParseSeedList(const std::string& text);

struct Instance {
  std::shared_ptr<const Objective> objective;
  std::vector<std::string> warnings;
  int n() const { return objective->size(); }
};

// Builds the objective for one seed. Generated instances depend only on the
// spec and the seed; file-backed ones ignore the seed.
Instance BuildInstance(const ExperimentSpec& spec, std::uint64_t seed);

// Ground-set size the spec yields for `seed`, without building edges.
int InstanceSize(const ExperimentSpec& spec, std::uint64_t seed);

// Runs one algorithm by id. FAST runs are checked against their round and
// per-guess query bounds; a violation throws std::logic_error.
RunResult RunAlgorithm(const std::string& algorithm, const Oracle& oracle,
                       int k, const ExperimentSpec& spec, std::uint64_t seed,
                       QueryLedger& ledger);

// Empty when the run respects its bounds, else a description of the breach.
std::string CheckFastBounds(const FastFullResult& run, double epsilon, int n,
                            int k);

struct ResultRow {
  std::string experiment;
  std::string algorithm;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  double value = 0.0;
  std::int64_t queries = 0;
  std::int64_t rounds = 0;
  double wall_seconds = 0.0;
  bool failed = false;

  bool operator==(const ResultRow&) const = default;
};

// One row per (seed, k, algorithm). Cells run one after another; the clock
// covers only the algorithm, between two pool barriers.
std::vector<ResultRow> RunExperiment(const ExperimentSpec& spec);

enum class OutputFormat { kCsv, kJson };

// Throws ConfigError unless text is "csv" or "json".
OutputFormat ParseFormat(const std::string& text);

inline constexpr const char* kCsvHeader =
    "experiment,algorithm,n,k,seed,threads,value,queries,rounds,wall_seconds,"
    "failed";

void WriteCsv(const std::vector<ResultRow>& rows, std::ostream& out);
void WriteJson(const std::vector<ResultRow>& rows, std::ostream& out);
std::vector<ResultRow> ReadCsv(std::istream& in);
std::vector<ResultRow> ReadJson(std::istream& in);

// Writes rows to path. Throws ConfigError for an empty row set and IoError
// when the file cannot be written.
void EmitResults(const std::vector<ResultRow>& rows, OutputFormat format,
                 const std::string& path);

}  // namespace fastsm

#endif  // FASTSM_BENCH_H_
