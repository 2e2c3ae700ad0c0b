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

#include "fastsm/graph.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fastsm {

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (ElementId u = 0; u < num_nodes_; ++u) {
    const auto nbrs = neighbors(u);
    const auto ws = neighbor_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!directed_ && nbrs[i] < u) continue;
      out.push_back({u, nbrs[i], ws.empty() ? 1.0 : ws[i]});
    }
  }
  return out;
}

bool Graph::HasEdge(ElementId u, ElementId v) const {
  const auto nbrs = neighbors(u);
  return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
}

GraphBuilder::GraphBuilder(int num_nodes, bool directed, bool weighted)
    : num_nodes_(num_nodes), directed_(directed), weighted_(weighted) {
  if (num_nodes < 0) throw std::invalid_argument("negative node count");
}

void GraphBuilder::AddEdge(ElementId u, ElementId v, double weight) {
  if (u < 0 || v < 0 || u >= num_nodes_ || v >= num_nodes_) {
    throw std::out_of_range("edge endpoint outside [0, n)");
  }
  if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
  if (!directed_ && v < u) std::swap(u, v);
  from_.push_back(u);
  to_.push_back(v);
  if (weighted_) weight_.push_back(weight);
}

Graph GraphBuilder::Build(bool dedupe, std::int64_t* duplicates) && {
  std::int64_t dropped = 0;
  if (dedupe && !from_.empty()) {
    std::vector<std::size_t> order(from_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return from_[a] != from_[b] ? from_[a] < from_[b] : to_[a] < to_[b];
    });
    std::vector<ElementId> from, to;
    std::vector<double> weight;
    for (std::size_t idx : order) {
      if (!from.empty() && from.back() == from_[idx] && to.back() == to_[idx]) {
        ++dropped;
        if (weighted_) weight.back() = std::max(weight.back(), weight_[idx]);
        continue;
      }
      from.push_back(from_[idx]);
      to.push_back(to_[idx]);
      if (weighted_) weight.push_back(weight_[idx]);
    }
    from_ = std::move(from);
    to_ = std::move(to);
    weight_ = std::move(weight);
  }
  if (duplicates != nullptr) *duplicates = dropped;

  Graph g;
  g.num_nodes_ = num_nodes_;
  g.directed_ = directed_;
  g.num_edges_ = static_cast<std::int64_t>(from_.size());
  std::vector<std::int64_t> degree(num_nodes_ + 1, 0);
  for (std::size_t e = 0; e < from_.size(); ++e) {
    ++degree[from_[e]];
    if (!directed_) ++degree[to_[e]];
  }
  g.offsets_.assign(num_nodes_ + 1, 0);
  for (int v = 0; v < num_nodes_; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.adjacency_.resize(g.offsets_[num_nodes_]);
  if (weighted_) g.weights_.resize(g.adjacency_.size());
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  auto place = [&](ElementId u, ElementId v, double w) {
    const std::int64_t slot = cursor[u]++;
    g.adjacency_[slot] = v;
    if (weighted_) g.weights_[slot] = w;
  };
  for (std::size_t e = 0; e < from_.size(); ++e) {
    const double w = weighted_ ? weight_[e] : 1.0;
    place(from_[e], to_[e], w);
    if (!directed_) place(to_[e], from_[e], w);
  }
  from_.clear();
  from_.shrink_to_fit();
  to_.clear();
  to_.shrink_to_fit();
  weight_.clear();
  weight_.shrink_to_fit();
  return g;
}

}  // namespace fastsm
