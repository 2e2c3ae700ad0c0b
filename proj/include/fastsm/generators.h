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

// Seeded random graph models. Every generator is a pure function of its
// arguments and seed, and emits a simple graph (no loops, no multi-edges).

#ifndef FASTSM_GENERATORS_H_
#define FASTSM_GENERATORS_H_

#include <cstdint>
#include <vector>

#include "fastsm/graph.h"

namespace fastsm {

// G(n, p). Uses geometric skipping, so the cost is O(n + edges).
Graph GenerateErdosRenyi(int n, double p, std::uint64_t seed);

// Directed G(n, p) with per-edge weights drawn U(weight_lo, weight_hi).
Graph GenerateDirectedWeighted(int n, double p, double weight_lo,
                               double weight_hi, std::uint64_t seed);

// Nodes are laid out cluster by cluster; each same-cluster pair is joined
// with probability p_in and each cross-cluster pair with probability p_out.
Graph GenerateStochasticBlock(const std::vector<int>& cluster_sizes,
                              double p_in, std::uint64_t seed,
                              double p_out = 0.0);

// Cluster sizes drawn uniformly from [min_size, max_size].
std::vector<int> DrawClusterSizes(int clusters, int min_size, int max_size,
                                  std::uint64_t seed);

// Watts-Strogatz: ring lattice where every node links to ring_neighbors / 2
// nodes on each side (ring degree = ring_neighbors, must be even), then each
// lattice edge (u, v) is rewired with probability `rewire` to (u, w) for a
// uniform w that is neither u nor a current neighbor of u.
// Throws std::invalid_argument if n < ring_neighbors + 1.
Graph GenerateWattsStrogatz(int n, int ring_neighbors, double rewire,
                            std::uint64_t seed);

// Barabasi-Albert preferential attachment starting from a star on m + 1
// nodes; every later node attaches to m distinct existing nodes chosen with
// probability proportional to degree. Produces m * (n - m) edges.
Graph GenerateBarabasiAlbert(int n, int m, std::uint64_t seed);

// Replaces every edge weight with a draw from U(lo, hi). The edge order used
// for the draws is Graph::Edges().
Graph WithUniformWeights(const Graph& g, double lo, double hi,
                         std::uint64_t seed);

}  // namespace fastsm

#endif  // FASTSM_GENERATORS_H_
