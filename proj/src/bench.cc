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


#include "fastsm/bench.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "fastsm/baselines.h"
#include "fastsm/generators.h"
#include "fastsm/io.h"
#include "fastsm/objectives.h"
#include "fastsm/rng.h"

namespace fastsm {
namespace {

const std::vector<std::string> kObjectives = {"max_cover", "directed_cover",
                                              "revenue", "influence", "movies"};
const std::vector<std::string> kGenerators = {
    "er", "sbm", "ws", "ba", "directed_er", "random_ratings", "file"};
const std::vector<std::string> kAlgorithms = {"fast", "lazy_greedy", "ltlg",
                                              "random"};

// Seed streams derived from a run seed.
constexpr std::uint64_t kAlgorithmStream = 1;
constexpr std::uint64_t kClusterStream = 2;
constexpr std::uint64_t kWeightStream = 3;

bool Contains(const std::vector<std::string>& list, const std::string& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T ParseNumber(const std::string& text, const std::string& what) {
  const std::string t = Trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError("bad value for " + what + ": '" + text + "'");
  }
  return value;
}

bool ParseBool(const std::string& text, const std::string& what) {
  const std::string t = Trim(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw ConfigError("bad boolean for " + what + ": '" + text + "'");
}

RatingsMatrix RandomRatings(int users, int movies, int genres,
                            std::uint64_t seed) {
  Rng rng(seed);
  RatingsMatrix r;
  r.users = users;
  r.movies = movies;
  r.num_genres = genres;
  std::vector<double> quality(movies), bias(users);
  for (double& q : quality) q = rng.Uniform(1.0, 4.0);
  for (double& b : bias) b = rng.Uniform(-0.5, 0.5);
  r.ratings.resize(static_cast<std::size_t>(users) * movies);
  for (int u = 0; u < users; ++u) {
    for (int j = 0; j < movies; ++j) {
      const double raw = quality[j] + bias[u] + rng.Uniform(-0.5, 0.5);
      // Half-star scale in [0.5, 5].
      r.ratings[static_cast<std::size_t>(u) * movies + j] =
          std::clamp(std::round(raw * 2.0) / 2.0, 0.5, 5.0);
    }
  }
  r.genres.resize(movies);
  for (auto& gs : r.genres) {
    const int count = 1 + static_cast<int>(rng.UniformInt(3));
    while (static_cast<int>(gs.size()) < std::min(count, genres)) {
      const int g = static_cast<int>(rng.UniformInt(genres));
      if (std::find(gs.begin(), gs.end(), g) == gs.end()) gs.push_back(g);
    }
  }
  return r;
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

using Setter = std::function<void(ExperimentSpec&, const std::string&)>;

const std::map<std::string, Setter>& Setters() {
  static const auto* setters = new std::map<std::string, Setter>{
      {"name", [](auto& s, const auto& v) { s.name = Trim(v); }},
      {"objective", [](auto& s, const auto& v) { s.objective = Trim(v); }},
      {"generator", [](auto& s, const auto& v) { s.generator = Trim(v); }},
      {"n", [](auto& s, const auto& v) { s.n = ParseNumber<int>(v, "n"); }},
      {"p", [](auto& s, const auto& v) { s.p = ParseNumber<double>(v, "p"); }},
      {"p_out",
       [](auto& s, const auto& v) { s.p_out = ParseNumber<double>(v, "p_out"); }},
      {"clusters",
       [](auto& s, const auto& v) { s.clusters = ParseNumber<int>(v, "clusters"); }},
      {"cluster_min",
       [](auto& s, const auto& v) { s.cluster_min = ParseNumber<int>(v, "cluster_min"); }},
      {"cluster_max",
       [](auto& s, const auto& v) { s.cluster_max = ParseNumber<int>(v, "cluster_max"); }},
      {"ring_neighbors",
       [](auto& s, const auto& v) {
         s.ring_neighbors = ParseNumber<int>(v, "ring_neighbors");
       }},
      {"rewire",
       [](auto& s, const auto& v) { s.rewire = ParseNumber<double>(v, "rewire"); }},
      {"ba_m", [](auto& s, const auto& v) { s.ba_m = ParseNumber<int>(v, "ba_m"); }},
      {"weighted",
       [](auto& s, const auto& v) { s.weighted = ParseBool(v, "weighted"); }},
      {"weight_lo",
       [](auto& s, const auto& v) { s.weight_lo = ParseNumber<double>(v, "weight_lo"); }},
      {"weight_hi",
       [](auto& s, const auto& v) { s.weight_hi = ParseNumber<double>(v, "weight_hi"); }},
      {"revenue_alpha",
       [](auto& s, const auto& v) {
         s.revenue_alpha = ParseNumber<double>(v, "revenue_alpha");
       }},
      {"influence_p",
       [](auto& s, const auto& v) {
         s.influence_p = ParseNumber<double>(v, "influence_p");
       }},
      {"movie_alpha",
       [](auto& s, const auto& v) {
         s.movie_alpha = ParseNumber<double>(v, "movie_alpha");
       }},
      {"movie_beta",
       [](auto& s, const auto& v) { s.movie_beta = ParseNumber<double>(v, "movie_beta"); }},
      {"movie_users",
       [](auto& s, const auto& v) { s.movie_users = ParseNumber<int>(v, "movie_users"); }},
      {"movie_genres",
       [](auto& s, const auto& v) {
         s.movie_genres = ParseNumber<int>(v, "movie_genres");
       }},
      {"input", [](auto& s, const auto& v) { s.input_path = Trim(v); }},
      {"genres", [](auto& s, const auto& v) { s.genres_path = Trim(v); }},
      {"directed_input",
       [](auto& s, const auto& v) { s.directed_input = ParseBool(v, "directed_input"); }},
      {"remap_ids",
       [](auto& s, const auto& v) { s.remap_ids = ParseBool(v, "remap_ids"); }},
      {"algorithms", [](auto& s, const auto& v) { s.algorithms = SplitList(v); }},
      {"k",
       [](auto& s, const auto& v) {
         s.ks.clear();
         for (const auto& item : SplitList(v)) s.ks.push_back(ParseNumber<int>(item, "k"));
       }},
      {"seeds", [](auto& s, const auto& v) { s.seeds = ParseSeedList(v); }},
      {"threads",
       [](auto& s, const auto& v) { s.threads = ParseNumber<int>(v, "threads"); }},
      {"fast_epsilon",
       [](auto& s, const auto& v) {
         s.fast_epsilon = ParseNumber<double>(v, "fast_epsilon");
       }},
      {"fast_delta",
       [](auto& s, const auto& v) { s.fast_delta = ParseNumber<double>(v, "fast_delta"); }},
      {"ltlg_epsilon",
       [](auto& s, const auto& v) {
         s.ltlg_epsilon = ParseNumber<double>(v, "ltlg_epsilon");
       }},
      {"random_trials",
       [](auto& s, const auto& v) {
         s.random_trials = ParseNumber<int>(v, "random_trials");
       }},
      {"warmup", [](auto& s, const auto& v) { s.warmup = ParseBool(v, "warmup"); }},
  };
  return *setters;
}

}  // namespace

void ExperimentSpec::Validate() const {
  if (!Contains(kObjectives, objective)) {
    throw ConfigError("unknown objective '" + objective + "'");
  }
  if (!Contains(kGenerators, generator)) {
    throw ConfigError("unknown generator '" + generator + "'");
  }
  const bool ratings_source = generator == "random_ratings" ||
                              (generator == "file" && objective == "movies");
  if ((objective == "movies") != ratings_source) {
    throw ConfigError("the movies objective pairs with random_ratings or file");
  }
  if (objective == "directed_cover" && generator != "directed_er" &&
      !(generator == "file" && directed_input)) {
    throw ConfigError("directed_cover needs directed_er or a directed input file");
  }
  if (objective != "directed_cover" &&
      (generator == "directed_er" || (generator == "file" && directed_input))) {
    throw ConfigError(objective + " needs an undirected graph");
  }
  if (generator == "file") {
    if (input_path.empty()) throw ConfigError("generator 'file' needs an input path");
    if (objective == "movies" && genres_path.empty()) {
      throw ConfigError("the movies objective needs a genres file");
    }
  }
  if (generator != "file" && generator != "sbm" && n < 1) {
    throw ConfigError("n must be >= 1");
  }
  if (algorithms.empty()) throw ConfigError("no algorithms given");
  for (const auto& a : algorithms) {
    if (!Contains(kAlgorithms, a)) throw ConfigError("unknown algorithm '" + a + "'");
  }
  if (ks.empty()) throw ConfigError("no k values given");
  for (int k : ks) {
    if (k < 1) throw ConfigError("every k must be >= 1");
  }
  if (seeds.empty()) throw ConfigError("no seeds given");
  if (threads < 1) throw ConfigError("threads must be >= 1");
  if (!(fast_epsilon > 0.0 && fast_epsilon <= 0.1)) {
    throw ConfigError("fast_epsilon must lie in (0, 0.1]");
  }
  if (!(fast_delta > 0.0 && fast_delta < 1.0)) {
    throw ConfigError("fast_delta must lie in (0, 1)");
  }
  if (!(ltlg_epsilon > 0.0 && ltlg_epsilon < 1.0)) {
    throw ConfigError("ltlg_epsilon must lie in (0, 1)");
  }
  if (random_trials < 1) throw ConfigError("random_trials must be >= 1");
}

std::vector<std::string> PresetNames() {
  return {"er-small",       "sbm-small",      "ws-small",
          "ba-small",       "er-large",       "sbm-large",
          "ws-large",       "ba-large",       "traffic",
          "movies",         "revenue",        "influence",
          "traffic-synth",  "movies-synth",   "revenue-synth",
          "influence-synth"};
}

ExperimentSpec Preset(const std::string& name) {
  ExperimentSpec s;
  s.name = name;
  const bool large = name.size() > 6 && name.ends_with("-large");
  const std::string model = name.substr(0, name.find('-'));
  if (model == "er" || model == "sbm" || model == "ws" || model == "ba") {
    if (!(name.ends_with("-small") || large)) {
      throw ConfigError("unknown preset '" + name + "'");
    }
    s.objective = "max_cover";
    s.generator = model;
    s.n = large ? 100000 : 500;
    if (model == "er") s.p = 0.01;
    if (model == "sbm") {
      s.p = 0.1;
      s.clusters = large ? 50 : 10;
      s.cluster_min = large ? 100 : 10;
      s.cluster_max = large ? 5000 : 100;
    }
    if (large) s.ks = {100, 500, 1000};
    return s;
  }
  if (name == "traffic" || name == "traffic-synth") {
    s.objective = "directed_cover";
    if (name == "traffic") {
      s.generator = "file";
      s.directed_input = true;
    } else {
      s.generator = "directed_er";
      s.n = 521;
      s.p = 0.005;
      s.weight_lo = 1.0;
      s.weight_hi = 100.0;
    }
    return s;
  }
  if (name == "movies" || name == "movies-synth") {
    s.objective = "movies";
    s.generator = name == "movies" ? "file" : "random_ratings";
    s.n = 500;
    return s;
  }
  if (name == "revenue" || name == "revenue-synth") {
    s.objective = "revenue";
    s.revenue_alpha = 0.9;
    s.weighted = true;
    s.weight_lo = 1.0;
    s.weight_hi = 2.0;
    if (name == "revenue") {
      s.generator = "file";
    } else {
      // About 500 nodes in 50 communities.
      s.generator = "sbm";
      s.clusters = 50;
      s.cluster_min = 5;
      s.cluster_max = 15;
      s.p = 0.3;
      s.p_out = 0.001;
    }
    return s;
  }
  if (name == "influence" || name == "influence-synth") {
    s.objective = "influence";
    s.influence_p = 0.01;
    if (name == "influence") {
      s.generator = "file";
    } else {
      // 769 nodes, about 17000 edges.
      s.generator = "er";
      s.n = 769;
      s.p = 0.0576;
    }
    return s;
  }
  throw ConfigError("unknown preset '" + name + "'");
}

std::vector<std::uint64_t> ParseSeedList(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const std::string& item : SplitList(text)) {
    if (const auto dots = item.find(".."); dots != std::string::npos) {
      const auto lo = ParseNumber<std::uint64_t>(item.substr(0, dots), "seeds");
      const auto hi = ParseNumber<std::uint64_t>(item.substr(dots + 2), "seeds");
      if (hi < lo || hi - lo > 1000000) throw ConfigError("bad seed range '" + item + "'");
      for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
    } else {
      out.push_back(ParseNumber<std::uint64_t>(item, "seeds"));
    }
  }
  if (out.empty()) throw ConfigError("empty seed list");
  return out;
}

ExperimentSpec ParseSpec(const std::string& text) {
  ExperimentSpec spec;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  bool seen_key = false;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    if (Trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("spec line " + std::to_string(number) +
                        ": expected 'key = value'");
    }
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "preset") {
        if (seen_key) throw ConfigError("'preset' must be the first key");
        spec = Preset(Trim(value));
      } else {
        const auto it = Setters().find(key);
        if (it == Setters().end()) throw ConfigError("unknown key '" + key + "'");
        it->second(spec, value);
      }
    } catch (const ConfigError& e) {
      throw ConfigError("spec line " + std::to_string(number) + ": " + e.what());
    }
    seen_key = true;
  }
  return spec;
}

ExperimentSpec LoadSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open spec file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return ParseSpec(text.str());
}

Instance BuildInstance(const ExperimentSpec& spec, std::uint64_t seed) {
  spec.Validate();
  Instance out;
  try {
    if (spec.objective == "movies") {
      std::shared_ptr<RatingsMatrix> ratings;
      if (spec.generator == "file") {
        LoadedRatings loaded = LoadRatings(spec.input_path, spec.genres_path);
        out.warnings = std::move(loaded.warnings);
        ratings = std::make_shared<RatingsMatrix>(std::move(loaded.ratings));
      } else {
        ratings = std::make_shared<RatingsMatrix>(
            RandomRatings(spec.movie_users, spec.n, spec.movie_genres, seed));
      }
      out.objective = std::make_shared<MovieRecommendation>(
          ratings, spec.movie_alpha, spec.movie_beta);
      return out;
    }

    Graph g;
    if (spec.generator == "er") {
      g = GenerateErdosRenyi(spec.n, spec.p, seed);
    } else if (spec.generator == "sbm") {
      const auto sizes =
          DrawClusterSizes(spec.clusters, spec.cluster_min, spec.cluster_max,
                           DeriveSeed(seed, kClusterStream));
      g = GenerateStochasticBlock(sizes, spec.p, seed, spec.p_out);
    } else if (spec.generator == "ws") {
      g = GenerateWattsStrogatz(spec.n, spec.ring_neighbors, spec.rewire, seed);
    } else if (spec.generator == "ba") {
      g = GenerateBarabasiAlbert(spec.n, spec.ba_m, seed);
    } else if (spec.generator == "directed_er") {
      g = GenerateDirectedWeighted(spec.n, spec.p, spec.weight_lo,
                                   spec.weight_hi, seed);
    } else {
      EdgeListOptions options;
      options.directed = spec.directed_input;
      options.remap_ids = spec.remap_ids;
      options.require_weights = spec.objective == "directed_cover";
      LoadedGraph loaded = LoadEdgeList(spec.input_path, options);
      out.warnings = std::move(loaded.warnings);
      g = std::move(loaded.graph);
    }
    if (spec.weighted && spec.generator != "directed_er") {
      g = WithUniformWeights(g, spec.weight_lo, spec.weight_hi,
                             DeriveSeed(seed, kWeightStream));
    }
    auto graph = std::make_shared<const Graph>(std::move(g));
    if (spec.objective == "max_cover") {
      out.objective = std::make_shared<MaxCover>(graph);
    } else if (spec.objective == "directed_cover") {
      out.objective = std::make_shared<WeightedDirectedCover>(graph);
    } else if (spec.objective == "revenue") {
      out.objective = std::make_shared<Revenue>(graph, spec.revenue_alpha);
    } else {
      out.objective = std::make_shared<Influence>(graph, spec.influence_p);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(spec.name + ": " + e.what());
  } catch (const ParseError& e) {
    throw IoError(e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ConfigError*>(&e) != nullptr) throw;
    throw IoError(e.what());
  }
  return out;
}

int InstanceSize(const ExperimentSpec& spec, std::uint64_t seed) {
  if (spec.generator == "sbm") {
    try {
      int n = 0;
      for (int s : DrawClusterSizes(spec.clusters, spec.cluster_min,
                                    spec.cluster_max,
                                    DeriveSeed(seed, kClusterStream))) {
        n += s;
      }
      return n;
    } catch (const std::invalid_argument& e) {
      throw ConfigError(spec.name + ": " + e.what());
    }
  }
  if (spec.generator == "file") return BuildInstance(spec, seed).n();
  return spec.n;
}

std::string CheckFastBounds(const FastFullResult& run, double epsilon, int n,
                            int k) {
  std::ostringstream problems;
  const double round_bound = FastRoundBound(epsilon, n, k);
  if (static_cast<double>(run.result.rounds) > round_bound) {
    problems << "rounds " << run.result.rounds << " > bound " << round_bound
             << "; ";
  }
  for (const GuessProbe& probe : run.probes) {
    const double query_bound = FastQueryBoundPerGuess(epsilon, n, k, probe.m);
    if (static_cast<double>(probe.queries) > query_bound) {
      problems << "guess " << probe.guess << " used " << probe.queries
               << " queries > bound " << query_bound << "; ";
    }
  }
  return problems.str();
}

RunResult RunAlgorithm(const std::string& algorithm, const Oracle& oracle,
                       int k, const ExperimentSpec& spec, std::uint64_t seed,
                       QueryLedger& ledger) {
  const std::uint64_t algorithm_seed = DeriveSeed(seed, kAlgorithmStream);
  if (algorithm == "fast") {
    FastConfig cfg;
    cfg.epsilon = spec.fast_epsilon;
    cfg.delta = spec.fast_delta;
    cfg.k = k;
    cfg.seed = algorithm_seed;
    FastFullResult run = FastFull(oracle, cfg, ledger);
    const std::string breach = CheckFastBounds(run, cfg.epsilon, oracle.size(), k);
    if (!breach.empty()) {
      throw std::logic_error("FAST resource bound violated: " + breach);
    }
    return std::move(run.result);
  }
  if (algorithm == "lazy_greedy") return LazyGreedy(oracle, k, ledger);
  if (algorithm == "ltlg") {
    LtlgConfig cfg;
    cfg.epsilon = spec.ltlg_epsilon;
    cfg.seed = algorithm_seed;
    return ParallelLtlg(oracle, k, cfg, ledger);
  }
  if (algorithm == "random") {
    return RandomBaseline(oracle, k, spec.random_trials, algorithm_seed, ledger);
  }
  throw ConfigError("unknown algorithm '" + algorithm + "'");
}

std::vector<ResultRow> RunExperiment(const ExperimentSpec& spec) {
  spec.Validate();
  for (std::uint64_t seed : spec.seeds) {
    const int n = InstanceSize(spec, seed);
    for (int k : spec.ks) {
      if (k > n) {
        throw ConfigError("k=" + std::to_string(k) + " exceeds n=" +
                          std::to_string(n) + " for seed " + std::to_string(seed));
      }
    }
  }
  ThreadPool pool(spec.threads);
  std::vector<ResultRow> rows;
  for (std::uint64_t seed : spec.seeds) {
    const Instance instance = BuildInstance(spec, seed);
    const Oracle oracle(*instance.objective, &pool);
    for (int k : spec.ks) {
      for (const std::string& algorithm : spec.algorithms) {
        if (spec.warmup) {
          QueryLedger scratch;
          RunAlgorithm(algorithm, oracle, k, spec, seed, scratch);
        }
        QueryLedger ledger;
        pool.Barrier();
        const auto start = std::chrono::steady_clock::now();
        const RunResult result =
            RunAlgorithm(algorithm, oracle, k, spec, seed, ledger);
        pool.Barrier();
        const auto stop = std::chrono::steady_clock::now();
        ResultRow row;
        row.experiment = spec.name;
        row.algorithm = algorithm;
        row.n = instance.n();
        row.k = k;
        row.seed = seed;
        row.threads = spec.threads;
        row.value = result.value;
        row.queries = result.queries;
        row.rounds = result.rounds;
        row.wall_seconds = std::chrono::duration<double>(stop - start).count();
        row.failed = result.failed;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

OutputFormat ParseFormat(const std::string& text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw ConfigError("unknown format '" + text + "' (expected csv or json)");
}

void WriteCsv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const ResultRow& r : rows) {
    out << CsvField(r.experiment) << ',' << CsvField(r.algorithm) << ',' << r.n
        << ',' << r.k << ',' << r.seed << ',' << r.threads << ','
        << FormatDouble(r.value) << ',' << r.queries << ',' << r.rounds << ','
        << FormatDouble(r.wall_seconds) << ',' << (r.failed ? "true" : "false")
        << '\n';
  }
}

void WriteJson(const std::vector<ResultRow>& rows, std::ostream& out) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const ResultRow& r : rows) {
    nlohmann::ordered_json o;
    o["experiment"] = r.experiment;
    o["algorithm"] = r.algorithm;
    o["n"] = r.n;
    o["k"] = r.k;
    o["seed"] = r.seed;
    o["threads"] = r.threads;
    o["value"] = r.value;
    o["queries"] = r.queries;
    o["rounds"] = r.rounds;
    o["wall_seconds"] = r.wall_seconds;
    o["failed"] = r.failed;
    array.push_back(std::move(o));
  }
  out << array.dump(2) << '\n';
}

std::vector<ResultRow> ReadCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || Trim(line) != kCsvHeader) {
    throw IoError("CSV header mismatch");
  }
  std::vector<ResultRow> rows;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = SplitCsvLine(line);
    if (f.size() != 11) {
      throw IoError("CSV line " + std::to_string(number) + ": expected 11 fields");
    }
    try {
      ResultRow r;
      r.experiment = f[0];
      r.algorithm = f[1];
      r.n = ParseNumber<int>(f[2], "n");
      r.k = ParseNumber<int>(f[3], "k");
      r.seed = ParseNumber<std::uint64_t>(f[4], "seed");
      r.threads = ParseNumber<int>(f[5], "threads");
      r.value = ParseNumber<double>(f[6], "value");
      r.queries = ParseNumber<std::int64_t>(f[7], "queries");
      r.rounds = ParseNumber<std::int64_t>(f[8], "rounds");
      r.wall_seconds = ParseNumber<double>(f[9], "wall_seconds");
      r.failed = ParseBool(f[10], "failed");
      rows.push_back(std::move(r));
    } catch (const ConfigError& e) {
      throw IoError("CSV line " + std::to_string(number) + ": " + e.what());
    }
  }
  return rows;
}

std::vector<ResultRow> ReadJson(std::istream& in) {
  std::vector<ResultRow> rows;
  try {
    const nlohmann::json array = nlohmann::json::parse(in);
    for (const auto& o : array) {
      ResultRow r;
      r.experiment = o.at("experiment").get<std::string>();
      r.algorithm = o.at("algorithm").get<std::string>();
      r.n = o.at("n").get<int>();
      r.k = o.at("k").get<int>();
      r.seed = o.at("seed").get<std::uint64_t>();
      r.threads = o.at("threads").get<int>();
      r.value = o.at("value").get<double>();
      r.queries = o.at("queries").get<std::int64_t>();
      r.rounds = o.at("rounds").get<std::int64_t>();
      r.wall_seconds = o.at("wall_seconds").get<double>();
      r.failed = o.at("failed").get<bool>();
      rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("JSON results: ") + e.what());
  }
  return rows;
}

void EmitResults(const std::vector<ResultRow>& rows, OutputFormat format,
                 const std::string& path) {
  if (rows.empty()) throw ConfigError("no result rows to write");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  if (format == OutputFormat::kCsv) {
    WriteCsv(rows, out);
  } else {
    WriteJson(rows, out);
  }
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace fastsm
