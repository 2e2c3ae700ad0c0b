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

// Shipped objectives. Each one computes Value() straight from its formula and
// answers Gain() through a prefix context built from its own incidence data,
// so the two routes cross-check each other in the tests.

#ifndef FASTSM_OBJECTIVES_H_
#define FASTSM_OBJECTIVES_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fastsm/graph.h"
#include "fastsm/oracle.h"

namespace fastsm {

// Number of nodes with at least one neighbor in S. A node in S with no
// neighbor in S is NOT counted: membership alone does not cover a node.
class MaxCover : public Objective {
 public:
  // Throws std::invalid_argument for a directed graph.
  explicit MaxCover(std::shared_ptr<const Graph> graph);

  int size() const override { return graph_->num_nodes(); }
  std::string Describe() const override;
  double Value(std::span<const ElementId> set) const override;
  std::unique_ptr<PrefixContext> Prepare(std::span<const ElementId> context,
                                         ThreadPool* pool) const override;

 private:
  std::shared_ptr<const Graph> graph_;
};

// Total weight of directed edges with at least one endpoint in S, each edge
// counted once.
class WeightedDirectedCover : public Objective {
 public:
  // Throws std::invalid_argument unless the graph is directed and weighted
  // with positive weights.
  explicit WeightedDirectedCover(std::shared_ptr<const Graph> graph);

  int size() const override { return graph_->num_nodes(); }
  std::string Describe() const override;
  double Value(std::span<const ElementId> set) const override;
  std::unique_ptr<PrefixContext> Prepare(std::span<const ElementId> context,
                                         ThreadPool* pool) const override;

 private:
  std::shared_ptr<const Graph> graph_;
  // In- and out-edges of every node: other endpoint and weight.
  std::vector<std::int64_t> incidence_offsets_;
  std::vector<ElementId> incidence_other_;
  std::vector<double> incidence_weight_;
};

// f(S) = sum over all nodes i of (sum_{j in S} w_ij)^alpha, with 0^alpha = 0.
// Unweighted graphs count every edge with weight 1.
class Revenue : public Objective {
 public:
  // Throws std::invalid_argument for directed graphs, alpha outside (0, 1),
  // or a negative weight.
  Revenue(std::shared_ptr<const Graph> graph, double alpha = 0.9);

  int size() const override { return graph_->num_nodes(); }
  std::string Describe() const override;
  double Value(std::span<const ElementId> set) const override;
  std::unique_ptr<PrefixContext> Prepare(std::span<const ElementId> context,
                                         ThreadPool* pool) const override;

  double alpha() const { return alpha_; }

 private:
  std::shared_ptr<const Graph> graph_;
  double alpha_;
};

// Expected number of influenced users: members of S count 1 each; any other
// user i counts 1 - (1 - p)^{|N(i) & S|}.
class Influence : public Objective {
 public:
  // Throws std::invalid_argument for directed graphs or p outside (0, 1).
  Influence(std::shared_ptr<const Graph> graph, double p = 0.01);

  int size() const override { return graph_->num_nodes(); }
  std::string Describe() const override;
  double Value(std::span<const ElementId> set) const override;
  std::unique_ptr<PrefixContext> Prepare(std::span<const ElementId> context,
                                         ThreadPool* pool) const override;

 private:
  std::shared_ptr<const Graph> graph_;
  double p_;
  // (1 - p)^c for c = 0 .. max degree + 1.
  std::vector<double> miss_power_;
};

// Users x movies ratings (taken as complete: missing entries are 0) with a
// genre set per movie.
struct RatingsMatrix {
  int users = 0;
  int movies = 0;
  std::vector<double> ratings;              // row-major, users x movies
  std::vector<std::vector<int>> genres;     // per movie, distinct genre ids
  int num_genres = 0;
  double high_rating_threshold = 4.5;

  double at(int user, int movie) const {
    return ratings[static_cast<std::size_t>(user) * movies + movie];
  }
  // Throws std::invalid_argument on shape mismatch, a negative or non-finite
  // rating, or a genre id outside [0, num_genres).
  void Validate() const;
};

// f(S) = sum_{i in users} sum_{j in S} r_ij + alpha * C(S) + beta * D(S),
// where C counts genres covered by S and D counts users rating some movie of
// S strictly above the high-rating threshold. Ground set = movies.
class MovieRecommendation : public Objective {
 public:
  // alpha defaults to 0.5 * max_j sum_i r_ij, beta to 1.
  MovieRecommendation(std::shared_ptr<const RatingsMatrix> ratings,
                      std::optional<double> alpha = std::nullopt,
                      std::optional<double> beta = std::nullopt);

  int size() const override { return ratings_->movies; }
  std::string Describe() const override;
  double Value(std::span<const ElementId> set) const override;
  std::unique_ptr<PrefixContext> Prepare(std::span<const ElementId> context,
                                         ThreadPool* pool) const override;

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  std::shared_ptr<const RatingsMatrix> ratings_;
  double alpha_;
  double beta_;
  std::vector<double> column_sum_;
  std::vector<std::vector<int>> high_raters_;  // per movie
};

// f(S) = sum of non-negative per-element weights.
class Modular : public Objective {
 public:
  explicit Modular(std::vector<double> weights);

  int size() const override { return static_cast<int>(weights_.size()); }
  std::string Describe() const override;
  double Value(std::span<const ElementId> set) const override;
  std::unique_ptr<PrefixContext> Prepare(std::span<const ElementId> context,
                                         ThreadPool* pool) const override;

 private:
  std::vector<double> weights_;
};

}  // namespace fastsm

#endif  // FASTSM_OBJECTIVES_H_
