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

#include "fastsm/generators.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fastsm/rng.h"

namespace fastsm {
namespace {

void CheckProbability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

// Calls fn(i) for each i in [0, count) independently with probability p,
// in increasing order, by drawing geometric gaps between selected indices.
template <typename Fn>
void ForEachBernoulli(std::uint64_t count, double p, Rng& rng, Fn&& fn) {
  if (count == 0 || p <= 0.0) return;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const double log_q = std::log1p(-p);
  std::uint64_t i = 0;
  for (;;) {
    const double gap = std::floor(std::log1p(-rng.UniformReal()) / log_q);
    if (gap >= static_cast<double>(count - i)) return;
    i += static_cast<std::uint64_t>(gap);
    fn(i);
    if (++i >= count) return;
  }
}

// Adds G(size, p) on the nodes [offset, offset + size).
void AddRandomBlock(GraphBuilder& builder, int offset, int size, double p,
                    Rng& rng) {
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(size) * (size - 1) / 2;
  // Pair index idx = v (v - 1) / 2 + w with w < v; indices arrive in order.
  std::uint64_t v = 1, row_start = 0;
  ForEachBernoulli(pairs, p, rng, [&](std::uint64_t idx) {
    while (idx >= row_start + v) {
      row_start += v;
      ++v;
    }
    builder.AddEdge(offset + static_cast<int>(v),
                    offset + static_cast<int>(idx - row_start));
  });
}

}  // namespace

Graph GenerateErdosRenyi(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("ER: n must be >= 0");
  CheckProbability(p, "ER edge probability");
  Rng rng(seed);
  GraphBuilder builder(n, /*directed=*/false, /*weighted=*/false);
  AddRandomBlock(builder, 0, n, p, rng);
  return std::move(builder).Build(/*dedupe=*/false);
}

Graph GenerateDirectedWeighted(int n, double p, double weight_lo,
                               double weight_hi, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("directed ER: n must be >= 0");
  CheckProbability(p, "directed ER edge probability");
  if (!(weight_lo > 0.0 && weight_lo <= weight_hi)) {
    throw std::invalid_argument("directed ER: need 0 < weight_lo <= weight_hi");
  }
  Rng rng(seed);
  GraphBuilder builder(n, /*directed=*/true, /*weighted=*/true);
  if (n < 2) return std::move(builder).Build(false);
  const std::uint64_t row = static_cast<std::uint64_t>(n - 1);
  std::vector<std::pair<ElementId, ElementId>> picked;
  ForEachBernoulli(static_cast<std::uint64_t>(n) * row, p, rng,
                   [&](std::uint64_t idx) {
                     const auto u = static_cast<ElementId>(idx / row);
                     auto v = static_cast<ElementId>(idx % row);
                     if (v >= u) ++v;
                     picked.emplace_back(u, v);
                   });
  // Weights are drawn after the structure so the edge set does not depend on
  // the weight range.
  for (const auto& [u, v] : picked) {
    builder.AddEdge(u, v, rng.Uniform(weight_lo, weight_hi));
  }
  return std::move(builder).Build(false);
}

std::vector<int> DrawClusterSizes(int clusters, int min_size, int max_size,
                                  std::uint64_t seed) {
  if (clusters < 1 || min_size < 1 || max_size < min_size) {
    throw std::invalid_argument("SBM: bad cluster size range");
  }
  Rng rng(seed);
  std::vector<int> sizes(clusters);
  for (int& s : sizes) {
    s = min_size + static_cast<int>(rng.UniformInt(max_size - min_size + 1));
  }
  return sizes;
}

Graph GenerateStochasticBlock(const std::vector<int>& cluster_sizes,
                              double p_in, std::uint64_t seed, double p_out) {
  CheckProbability(p_in, "SBM in-cluster probability");
  CheckProbability(p_out, "SBM cross-cluster probability");
  std::vector<int> offsets{0};
  for (int s : cluster_sizes) {
    if (s < 1) throw std::invalid_argument("SBM: cluster sizes must be >= 1");
    offsets.push_back(offsets.back() + s);
  }
  const int n = offsets.back();
  Rng rng(seed);
  GraphBuilder builder(n, /*directed=*/false, /*weighted=*/false);
  for (std::size_t c = 0; c < cluster_sizes.size(); ++c) {
    AddRandomBlock(builder, offsets[c], cluster_sizes[c], p_in, rng);
  }
  for (std::size_t a = 0; a < cluster_sizes.size(); ++a) {
    for (std::size_t b = a + 1; b < cluster_sizes.size(); ++b) {
      const auto cols = static_cast<std::uint64_t>(cluster_sizes[b]);
      ForEachBernoulli(cluster_sizes[a] * cols, p_out, rng,
                       [&](std::uint64_t idx) {
                         builder.AddEdge(offsets[a] + static_cast<int>(idx / cols),
                                         offsets[b] + static_cast<int>(idx % cols));
                       });
    }
  }
  return std::move(builder).Build(false);
}

Graph GenerateWattsStrogatz(int n, int ring_neighbors, double rewire,
                            std::uint64_t seed) {
  if (ring_neighbors < 2 || ring_neighbors % 2 != 0) {
    throw std::invalid_argument("WS: ring_neighbors must be even and >= 2");
  }
  if (n < ring_neighbors + 1) {
    throw std::invalid_argument("WS: need n >= ring_neighbors + 1, got n=" +
                                std::to_string(n));
  }
  CheckProbability(rewire, "WS rewiring probability");
  Rng rng(seed);
  std::vector<std::vector<ElementId>> adj(n);
  auto connected = [&](ElementId u, ElementId v) {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
  };
  auto unlink = [&](ElementId u, ElementId v) {
    adj[u].erase(std::find(adj[u].begin(), adj[u].end(), v));
    adj[v].erase(std::find(adj[v].begin(), adj[v].end(), u));
  };
  const int half = ring_neighbors / 2;
  for (int j = 1; j <= half; ++j) {
    for (ElementId u = 0; u < n; ++u) {
      const ElementId v = (u + j) % n;
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  for (int j = 1; j <= half; ++j) {
    for (ElementId u = 0; u < n; ++u) {
      const ElementId v = (u + j) % n;
      if (!rng.Bernoulli(rewire)) continue;
      // The lattice edge may already have been rewired away from v's side.
      if (!connected(u, v)) continue;
      if (static_cast<int>(adj[u].size()) >= n - 1) continue;
      ElementId w;
      do {
        w = static_cast<ElementId>(rng.UniformInt(n));
      } while (w == u || connected(u, w));
      unlink(u, v);
      adj[u].push_back(w);
      adj[w].push_back(u);
    }
  }
  GraphBuilder builder(n, /*directed=*/false, /*weighted=*/false);
  for (ElementId u = 0; u < n; ++u) {
    for (ElementId v : adj[u]) {
      if (u < v) builder.AddEdge(u, v);
    }
  }
  return std::move(builder).Build(false);
}

Graph GenerateBarabasiAlbert(int n, int m, std::uint64_t seed) {
  if (m < 1 || m >= n) {
    throw std::invalid_argument("BA: need 1 <= m < n");
  }
  Rng rng(seed);
  GraphBuilder builder(n, /*directed=*/false, /*weighted=*/false);
  // Each node appears once per incident edge, so a uniform pick from this
  // list is a degree-proportional pick.
  std::vector<ElementId> repeated;
  for (ElementId leaf = 1; leaf <= m; ++leaf) {
    builder.AddEdge(0, leaf);
    repeated.push_back(0);
    repeated.push_back(leaf);
  }
  std::vector<ElementId> targets;
  for (ElementId source = m + 1; source < n; ++source) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m) {
      const ElementId t = repeated[rng.UniformInt(repeated.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        targets.push_back(t);
      }
    }
    for (ElementId t : targets) {
      builder.AddEdge(source, t);
      repeated.push_back(t);
      repeated.push_back(source);
    }
  }
  return std::move(builder).Build(false);
}

Graph WithUniformWeights(const Graph& g, double lo, double hi,
                         std::uint64_t seed) {
  if (!(lo > 0.0 && lo <= hi)) {
    throw std::invalid_argument("weights: need 0 < lo <= hi");
  }
  Rng rng(seed);
  GraphBuilder builder(g.num_nodes(), g.directed(), /*weighted=*/true);
  for (const Edge& e : g.Edges()) builder.AddEdge(e.from, e.to, rng.Uniform(lo, hi));
  return std::move(builder).Build(false);
}

}  // namespace fastsm
