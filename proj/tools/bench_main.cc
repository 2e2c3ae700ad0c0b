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


// bench: runs benchmark experiments and writes CSV or JSON results.
//
//   bench run (--preset NAME | --spec FILE) --out PATH [--format csv|json]
//             [--threads C] [--seeds LIST] [--k LIST] [--algorithms LIST]
//             [--input FILE] [--genres FILE] [--no-warmup]
//   bench presets
//
// Exit codes: 0 success, 1 internal error, 2 configuration error, 3 I/O error.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fastsm/bench.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

std::vector<int> ParseKs(const std::string& text) {
  fastsm::ExperimentSpec probe = fastsm::ParseSpec("k = " + text);
  return probe.ks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular maximization benchmark harness"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "Run an experiment");
  std::string preset, spec_path, out_path, format = "csv", seeds, ks,
                                           algorithms, input, genres;
  int threads = 0;
  bool no_warmup = false;
  auto* preset_opt = run->add_option("--preset", preset, "Preset name");
  auto* spec_opt = run->add_option("--spec", spec_path, "Spec file (key = value)");
  preset_opt->excludes(spec_opt);
  run->add_option("--out", out_path, "Output path")->required();
  run->add_option("--format", format, "csv or json");
  run->add_option("--threads", threads, "Worker threads (default: spec value)");
  run->add_option("--seeds", seeds, "Seeds, e.g. 1,2,3 or 0..19");
  run->add_option("--k", ks, "Cardinality values, e.g. 25,50,100");
  run->add_option("--algorithms", algorithms,
                  "Comma list of fast, lazy_greedy, ltlg, random");
  run->add_option("--input", input, "Input edge list or ratings file");
  run->add_option("--genres", genres, "Genre file for the movies objective");
  run->add_flag("--no-warmup", no_warmup, "Skip the discarded warm-up run");

  app.add_subcommand("presets", "List preset names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (app.got_subcommand("presets")) {
    for (const auto& name : fastsm::PresetNames()) std::cout << name << '\n';
    return 0;
  }

  try {
    if (preset.empty() == spec_path.empty()) {
      throw fastsm::ConfigError("give exactly one of --preset or --spec");
    }
    fastsm::ExperimentSpec spec = preset.empty() ? fastsm::LoadSpec(spec_path)
                                                 : fastsm::Preset(preset);
    if (threads != 0) spec.threads = threads;
    if (!seeds.empty()) spec.seeds = fastsm::ParseSeedList(seeds);
    if (!ks.empty()) spec.ks = ParseKs(ks);
    if (!algorithms.empty()) {
      spec.algorithms = fastsm::ParseSpec("algorithms = " + algorithms).algorithms;
    }
    if (!input.empty()) spec.input_path = input;
    if (!genres.empty()) spec.genres_path = genres;
    if (no_warmup) spec.warmup = false;
    const fastsm::OutputFormat fmt = fastsm::ParseFormat(format);

    const auto rows = fastsm::RunExperiment(spec);
    fastsm::EmitResults(rows, fmt, out_path);
    std::cerr << "wrote " << rows.size() << " row(s) to " << out_path << '\n';
    return 0;
  } catch (const fastsm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fastsm::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
