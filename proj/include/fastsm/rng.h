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

#ifndef FASTSM_RNG_H_
#define FASTSM_RNG_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace fastsm {

// Mixes a base seed with a stream index (splitmix64 finalizer). Used to give
// independent, reproducible streams to sub-computations of one run.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

// Reproducible random source. The engine is mt19937_64, whose output sequence
// is fixed by the C++ standard; all derived draws (bounded integers, reals,
// shuffles) are implemented here rather than through <random> distributions,
// whose algorithms are implementation-defined. Version 1 of the draw scheme.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t UniformInt(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double UniformReal();

  double Uniform(double lo, double hi) { return lo + (hi - lo) * UniformReal(); }

  bool Bernoulli(double p) { return UniformReal() < p; }

  template <typename T>
  void Shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[UniformInt(i)]);
    }
  }

  // Uniform sample of min(count, pool.size()) distinct entries of `pool`,
  // in draw order (partial Fisher-Yates on a copy).
  template <typename T>
  std::vector<T> Sample(std::span<const T> pool, std::size_t count) {
    std::vector<T> scratch(pool.begin(), pool.end());
    count = std::min(count, scratch.size());
    for (std::size_t i = 0; i < count; ++i) {
      std::swap(scratch[i], scratch[i + UniformInt(scratch.size() - i)]);
    }
    scratch.resize(count);
    return scratch;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fastsm

#endif  // FASTSM_RNG_H_
