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

#ifndef FASTSM_GRAPH_H_
#define FASTSM_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fastsm/oracle.h"

namespace fastsm {

struct Edge {
  ElementId from;
  ElementId to;
  double weight = 1.0;
};

// Immutable graph in compressed adjacency form. Undirected graphs store every
// edge in both endpoint lists; directed graphs store out-neighbors only.
class Graph {
 public:
  Graph() = default;

  int num_nodes() const { return num_nodes_; }
  std::int64_t num_edges() const { return num_edges_; }
  bool directed() const { return directed_; }
  bool weighted() const { return !weights_.empty(); }

  std::span<const ElementId> neighbors(ElementId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  // Empty for unweighted graphs.
  std::span<const double> neighbor_weights(ElementId v) const {
    if (weights_.empty()) return {};
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  int degree(ElementId v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }

  // Every edge once (from < to for undirected graphs).
  std::vector<Edge> Edges() const;

  bool HasEdge(ElementId u, ElementId v) const;

 private:
  friend class GraphBuilder;

  int num_nodes_ = 0;
  std::int64_t num_edges_ = 0;
  bool directed_ = false;
  std::vector<std::int64_t> offsets_{0};
  std::vector<ElementId> adjacency_;
  std::vector<double> weights_;
};

class GraphBuilder {
 public:
  GraphBuilder(int num_nodes, bool directed, bool weighted);

  // Self-loops are rejected with std::invalid_argument.
  void AddEdge(ElementId u, ElementId v, double weight = 1.0);

  // With `dedupe`, repeated edges collapse to one carrying the maximum weight
  // and the number of collapsed duplicates is written to *duplicates.
  // Without it, the caller guarantees the edges are already distinct.
  Graph Build(bool dedupe = true, std::int64_t* duplicates = nullptr) &&;

 private:
  int num_nodes_;
  bool directed_;
  bool weighted_;
  std::vector<ElementId> from_;
  std::vector<ElementId> to_;
  std::vector<double> weight_;
};

}  // namespace fastsm

#endif  // FASTSM_GRAPH_H_
