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


// Outcome of one algorithm run, shared by every algorithm and the harness.

#ifndef FASTSM_RUN_RESULT_H_
#define FASTSM_RUN_RESULT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "fastsm/oracle.h"

namespace fastsm {

struct RunResult {
  std::string algorithm;
  std::vector<ElementId> solution;  // insertion order
  double value = 0.0;
  std::int64_t queries = 0;
  std::int64_t rounds = 0;
  double wall_seconds = 0.0;  // filled in by the harness
  bool failed = false;
  double guess_used = 0.0;  // OPT guess behind the returned solution, if any
};

}  // namespace fastsm

#endif  // FASTSM_RUN_RESULT_H_
