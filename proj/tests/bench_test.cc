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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace fastsm {
namespace {

namespace fs = std::filesystem;

fs::path TempPath(const std::string& name) {
  return fs::temp_directory_path() / ("fastsm_bench_test_" + name);
}

ExperimentSpec Tiny() {
  ExperimentSpec s = Preset("er-small");
  s.n = 120;
  s.p = 0.05;
  s.ks = {5, 10};
  s.seeds = {0, 1};
  s.warmup = false;
  return s;
}

TEST(PresetTest, DefaultParameters) {
  EXPECT_EQ(Preset("ws-small").n, 500);
  EXPECT_EQ(Preset("er-small").p, 0.01);
  EXPECT_EQ(Preset("ba-small").ba_m, 1);
  const ExperimentSpec s = Preset("sbm-small");
  EXPECT_EQ(s.fast_epsilon, 0.025);
  EXPECT_EQ(s.fast_delta, 0.05);
  EXPECT_EQ(s.ltlg_epsilon, 0.1);
  EXPECT_EQ(Preset("er-large").n, 100000);
  EXPECT_THROW(Preset("nope"), ConfigError);
  for (const auto& name : PresetNames()) EXPECT_NO_THROW(Preset(name)) << name;
}

TEST(PresetTest, SyntheticStandInsBuild) {
  for (const std::string name :
       {"traffic-synth", "movies-synth", "revenue-synth", "influence-synth"}) {
    ExperimentSpec s = Preset(name);
    const Instance inst = BuildInstance(s, 0);
    EXPECT_EQ(inst.n(), InstanceSize(s, 0)) << name;
    EXPECT_GT(inst.n(), 100) << name;
  }
}

TEST(PresetTest, SmallGraphPresetsHaveAbout500Nodes) {
  for (const std::string name : {"er-small", "sbm-small", "ws-small", "ba-small"}) {
    const int n = InstanceSize(Preset(name), 3);
    EXPECT_GE(n, 100) << name;
    EXPECT_LE(n, 1000) << name;
    EXPECT_EQ(BuildInstance(Preset(name), 3).n(), n);
  }
}

TEST(SpecTest, ParsesKeysAndPreset) {
  const ExperimentSpec s = ParseSpec(
      "preset = ws-small\n"
      "# comment\n"
      "name = demo\n"
      "k = 5, 10\n"
      "seeds = 2..4\n"
      "algorithms = fast, random\n"
      "threads = 2\n");
  EXPECT_EQ(s.name, "demo");
  EXPECT_EQ(s.generator, "ws");
  EXPECT_EQ(s.ks, (std::vector<int>{5, 10}));
  EXPECT_EQ(s.seeds, (std::vector<std::uint64_t>{2, 3, 4}));
  EXPECT_EQ(s.algorithms, (std::vector<std::string>{"fast", "random"}));
  EXPECT_EQ(s.threads, 2);
}

TEST(SpecTest, Errors) {
  EXPECT_THROW(ParseSpec("n = 10\npreset = ws-small\n"), ConfigError);
  EXPECT_THROW(ParseSpec("bogus = 1\n"), ConfigError);
  EXPECT_THROW(ParseSpec("n = ten\n"), ConfigError);
  EXPECT_THROW(ParseSpec("no equals sign\n"), ConfigError);
  EXPECT_THROW(ParseSpec("algorithms = quantum\n").Validate(), ConfigError);
  EXPECT_THROW(ParseSpec("fast_epsilon = 0.5\n").Validate(), ConfigError);
  EXPECT_THROW(ParseSpec("k = 0\n").Validate(), ConfigError);
  EXPECT_THROW(ParseSeedList("5..2"), ConfigError);
  EXPECT_EQ(ParseSeedList("7"), (std::vector<std::uint64_t>{7}));
  EXPECT_THROW(LoadSpec("/nonexistent/spec.txt"), IoError);
}

TEST(RunExperimentTest, OneCellOneRow) {
  ExperimentSpec s = Tiny();
  s.ks = {5};
  s.seeds = {0};
  s.algorithms = {"lazy_greedy"};
  EXPECT_EQ(RunExperiment(s).size(), 1u);
}

TEST(RunExperimentTest, RowCountAndReproducibility) {
  const ExperimentSpec s = Tiny();
  const auto rows = RunExperiment(s);
  ASSERT_EQ(rows.size(), s.algorithms.size() * s.ks.size() * s.seeds.size());
  const auto again = RunExperiment(s);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].algorithm, again[i].algorithm);
    EXPECT_EQ(rows[i].value, again[i].value);
    EXPECT_EQ(rows[i].queries, again[i].queries);
    EXPECT_EQ(rows[i].rounds, again[i].rounds);
    EXPECT_FALSE(rows[i].failed);
  }
}

TEST(RunExperimentTest, ThreadCountOnlyChangesWallTime) {
  ExperimentSpec s = Preset("ws-small");
  s.ks = {50};
  s.seeds = {0, 1};
  s.warmup = false;
  s.threads = 1;
  const auto one = RunExperiment(s);
  s.threads = 8;
  const auto eight = RunExperiment(s);
  ASSERT_EQ(one.size(), eight.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].value, eight[i].value) << one[i].algorithm;
    EXPECT_EQ(one[i].queries, eight[i].queries) << one[i].algorithm;
    EXPECT_EQ(one[i].rounds, eight[i].rounds) << one[i].algorithm;
    EXPECT_EQ(eight[i].threads, 8);
  }
}

TEST(RunExperimentTest, KLargerThanNIsAConfigError) {
  ExperimentSpec s = Tiny();
  s.ks = {500};
  EXPECT_THROW(RunExperiment(s), ConfigError);
}

TEST(RunAlgorithmTest, FastStaysWithinBoundsOnWsPreset) {
  const ExperimentSpec s = Preset("ws-small");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = BuildInstance(s, seed);
    QueryLedger ledger;
    const RunResult r =
        RunAlgorithm("fast", Oracle(*inst.objective), 50, s, seed, ledger);
    EXPECT_FALSE(r.failed);
    EXPECT_GT(r.value, 0.0);
  }
  EXPECT_THROW(
      {
        QueryLedger ledger;
        const Instance inst = BuildInstance(s, 0);
        RunAlgorithm("magic", Oracle(*inst.objective), 5, s, 0, ledger);
      },
      ConfigError);
}

std::vector<ResultRow> SampleRows() {
  ResultRow a;
  a.experiment = "exp, \"quoted\"";
  a.algorithm = "fast";
  a.n = 500;
  a.k = 50;
  a.seed = 18446744073709551615ULL;
  a.threads = 8;
  a.value = 0.1 + 0.2;
  a.queries = 123456789012;
  a.rounds = 17;
  a.wall_seconds = 1.0 / 3.0;
  a.failed = false;
  ResultRow b = a;
  b.experiment = "plain";
  b.algorithm = "lazy_greedy";
  b.value = 123.456789012345;
  b.failed = true;
  b.wall_seconds = 0.0;
  return {a, b};
}

TEST(OutputTest, CsvHeaderAndRowCount) {
  std::ostringstream out;
  WriteCsv({SampleRows()[1]}, out);
  std::istringstream lines(out.str());
  std::string header, row, extra;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, kCsvHeader);
  EXPECT_FALSE(row.empty());
  EXPECT_FALSE(std::getline(lines, extra) && !extra.empty());
}

TEST(OutputTest, CsvAndJsonRoundTrip) {
  const auto rows = SampleRows();
  std::stringstream csv, json;
  WriteCsv(rows, csv);
  WriteJson(rows, json);
  EXPECT_EQ(ReadCsv(csv), rows);
  EXPECT_EQ(ReadJson(json), rows);
}

TEST(OutputTest, FloatsKeepAtLeastNineDigits) {
  std::ostringstream out;
  WriteCsv({SampleRows()[1]}, out);
  EXPECT_NE(out.str().find("123.456789012"), std::string::npos);
}

TEST(OutputTest, JsonKeysInHeaderOrder) {
  std::ostringstream out;
  WriteJson({SampleRows()[1]}, out);
  const std::string text = out.str();
  std::size_t last = 0;
  for (const char* key : {"\"experiment\"", "\"algorithm\"", "\"n\"", "\"k\"",
                          "\"seed\"", "\"threads\"", "\"value\"", "\"queries\"",
                          "\"rounds\"", "\"wall_seconds\"", "\"failed\""}) {
    const std::size_t at = text.find(key);
    ASSERT_NE(at, std::string::npos) << key;
    EXPECT_GT(at, last) << key;
    last = at;
  }
}

TEST(OutputTest, EmitErrors) {
  EXPECT_THROW(EmitResults({}, OutputFormat::kCsv, TempPath("empty.csv").string()),
               ConfigError);
  EXPECT_THROW(EmitResults(SampleRows(), OutputFormat::kCsv,
                           "/nonexistent/dir/out.csv"),
               IoError);
  EXPECT_EQ(ParseFormat("json"), OutputFormat::kJson);
  EXPECT_THROW(ParseFormat("xml"), ConfigError);
  const auto path = TempPath("rows.json");
  EmitResults(SampleRows(), OutputFormat::kJson, path.string());
  std::ifstream in(path);
  EXPECT_EQ(ReadJson(in), SampleRows());
  fs::remove(path);
}

int RunCli(const std::string& args) {
  const std::string cmd =
      std::string(BENCH_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CliTest, ExitCodes) {
  const auto out = TempPath("cli.csv");
  EXPECT_EQ(RunCli("presets"), 0);
  EXPECT_EQ(RunCli("run --preset er-small --k 5 --seeds 0 --algorithms "
                   "lazy_greedy,random --no-warmup --out " + out.string()),
            0);
  std::ifstream in(out);
  EXPECT_EQ(ReadCsv(in).size(), 2u);
  fs::remove(out);
  EXPECT_EQ(RunCli("run --preset unknown --out " + out.string()), 2);
  EXPECT_EQ(RunCli("run --preset er-small --k 5000 --out " + out.string()), 2);
  EXPECT_EQ(RunCli("run --preset er-small --format xml --out " + out.string()), 2);
  EXPECT_EQ(RunCli("run --preset er-small"), 2);
  EXPECT_EQ(RunCli("run --preset er-small --k 5 --seeds 0 --algorithms random "
                   "--out /nonexistent/dir/x.csv"),
            3);
  EXPECT_EQ(RunCli("run --spec /nonexistent/spec.txt --out " + out.string()), 3);
}

}  // namespace
}  // namespace fastsm
