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

#include "fastsm/objectives.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fastsm {
namespace {

using Positions = std::span<const std::int32_t>;

// For each node v, the context positions of v's neighbors in increasing
// order, stored contiguously. Optionally carries running sums of the
// matching edge weights.
class NeighborPositionIndex {
 public:
  NeighborPositionIndex(const Graph& g, std::span<const ElementId> context,
                        Positions position, bool with_weights) {
    const int n = g.num_nodes();
    offsets_.assign(n + 1, 0);
    const auto first_occurrence = [&](std::int32_t p) {
      return position[context[p]] == p;
    };
    for (std::int32_t p = 0; p < static_cast<std::int32_t>(context.size());
         ++p) {
      if (!first_occurrence(p)) continue;
      for (ElementId u : g.neighbors(context[p])) ++offsets_[u + 1];
    }
    for (int v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
    positions_.resize(offsets_[n]);
    if (with_weights) prefix_weight_.resize(offsets_[n]);
    std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::int32_t p = 0; p < static_cast<std::int32_t>(context.size());
         ++p) {
      if (!first_occurrence(p)) continue;
      const ElementId c = context[p];
      const auto nbrs = g.neighbors(c);
      const auto ws = g.neighbor_weights(c);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const ElementId u = nbrs[i];
        const std::int64_t slot = cursor[u]++;
        positions_[slot] = p;
        if (with_weights) {
          const double w = ws.empty() ? 1.0 : ws[i];
          prefix_weight_[slot] =
              (slot == offsets_[u] ? 0.0 : prefix_weight_[slot - 1]) + w;
        }
      }
    }
  }

  // Number of v's neighbors among the first `prefix` context elements.
  std::int64_t CountBefore(ElementId v, std::int32_t prefix) const {
    const auto begin = positions_.begin() + offsets_[v];
    const auto end = positions_.begin() + offsets_[v + 1];
    return std::lower_bound(begin, end, prefix) - begin;
  }

  // Total weight of v's edges into the first `prefix` context elements.
  double WeightBefore(ElementId v, std::int32_t prefix) const {
    const std::int64_t count = CountBefore(v, prefix);
    return count == 0 ? 0.0 : prefix_weight_[offsets_[v] + count - 1];
  }

 private:
  std::vector<std::int64_t> offsets_;
  std::vector<std::int32_t> positions_;
  std::vector<double> prefix_weight_;
};

// ---------------------------------------------------------------------------
// MaxCover

class MaxCoverContext : public PrefixContext {
 public:
  MaxCoverContext(const Graph& g, std::span<const ElementId> context,
                  ThreadPool* pool)
      : PrefixContext(g.num_nodes(), context),
        graph_(g),
        cover_position_(g.num_nodes(), kAbsent) {
    // cover_position_[u] = first context position adjacent to u. Min is
    // order-independent, so the parallel scatter is deterministic.
    const Positions pos = positions();
    ParallelFor(pool, context.size(), [&](std::size_t begin, std::size_t end) {
      for (std::size_t p = begin; p < end; ++p) {
        const auto pp = static_cast<std::int32_t>(p);
        if (pos[context[p]] != pp) continue;
        for (ElementId u : g.neighbors(context[p])) {
          std::atomic_ref<std::int32_t> slot(cover_position_[u]);
          std::int32_t seen = slot.load(std::memory_order_relaxed);
          while (pp < seen &&
                 !slot.compare_exchange_weak(seen, pp,
                                             std::memory_order_relaxed)) {
          }
        }
      }
    });
  }

  double Gain(ElementId a, std::int32_t prefix) const override {
    std::int64_t fresh = 0;
    for (ElementId u : graph_.neighbors(a)) {
      fresh += cover_position_[u] >= prefix;
    }
    return static_cast<double>(fresh);
  }

 private:
  const Graph& graph_;
  std::vector<std::int32_t> cover_position_;
};

// ---------------------------------------------------------------------------
// WeightedDirectedCover

class DirectedCoverContext : public PrefixContext {
 public:
  DirectedCoverContext(int n, std::span<const ElementId> context,
                       const std::vector<std::int64_t>& offsets,
                       const std::vector<ElementId>& other,
                       const std::vector<double>& weight)
      : PrefixContext(n, context),
        offsets_(offsets),
        other_(other),
        weight_(weight) {}

  double Gain(ElementId a, std::int32_t prefix) const override {
    double gain = 0.0;
    for (std::int64_t e = offsets_[a]; e < offsets_[a + 1]; ++e) {
      if (position(other_[e]) >= prefix) gain += weight_[e];
    }
    return gain;
  }

 private:
  const std::vector<std::int64_t>& offsets_;
  const std::vector<ElementId>& other_;
  const std::vector<double>& weight_;
};

// ---------------------------------------------------------------------------
// Revenue

double Concave(double y, double alpha) {
  return y <= 0.0 ? 0.0 : std::pow(y, alpha);
}

class RevenueContext : public PrefixContext {
 public:
  RevenueContext(const Graph& g, double alpha,
                 std::span<const ElementId> context)
      : PrefixContext(g.num_nodes(), context),
        graph_(g),
        alpha_(alpha),
        index_(g, context, positions(), /*with_weights=*/true) {}

  double Gain(ElementId a, std::int32_t prefix) const override {
    const auto nbrs = graph_.neighbors(a);
    const auto ws = graph_.neighbor_weights(a);
    double gain = 0.0;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const double w = ws.empty() ? 1.0 : ws[i];
      const double before = index_.WeightBefore(nbrs[i], prefix);
      gain += Concave(before + w, alpha_) - Concave(before, alpha_);
    }
    return gain;
  }

 private:
  const Graph& graph_;
  double alpha_;
  NeighborPositionIndex index_;
};

// ---------------------------------------------------------------------------
// Influence

class InfluenceContext : public PrefixContext {
 public:
  InfluenceContext(const Graph& g, double p,
                   const std::vector<double>& miss_power,
                   std::span<const ElementId> context)
      : PrefixContext(g.num_nodes(), context),
        graph_(g),
        p_(p),
        miss_power_(miss_power),
        index_(g, context, positions(), /*with_weights=*/false) {}

  // Adding a: a's own term rises from 1 - q^c_a to 1, and every neighbor i
  // outside the prefix gains q^c_i - q^(c_i + 1) = p q^c_i.
  double Gain(ElementId a, std::int32_t prefix) const override {
    double gain = miss_power_[index_.CountBefore(a, prefix)];
    for (ElementId i : graph_.neighbors(a)) {
      if (InPrefix(i, prefix)) continue;
      gain += p_ * miss_power_[index_.CountBefore(i, prefix)];
    }
    return gain;
  }

 private:
  const Graph& graph_;
  double p_;
  const std::vector<double>& miss_power_;
  NeighborPositionIndex index_;
};

// ---------------------------------------------------------------------------
// MovieRecommendation

class MovieContext : public PrefixContext {
 public:
  MovieContext(const RatingsMatrix& r, const std::vector<double>& column_sum,
               const std::vector<std::vector<int>>& high_raters, double alpha,
               double beta, std::span<const ElementId> context)
      : PrefixContext(r.movies, context),
        ratings_(r),
        column_sum_(column_sum),
        high_raters_(high_raters),
        alpha_(alpha),
        beta_(beta),
        genre_first_(r.num_genres, kAbsent),
        user_first_(r.users, kAbsent) {
    for (std::int32_t p = 0; p < static_cast<std::int32_t>(context.size());
         ++p) {
      const ElementId movie = context[p];
      if (position(movie) != p) continue;
      for (int g : r.genres[movie]) {
        if (genre_first_[g] == kAbsent) genre_first_[g] = p;
      }
      for (int u : high_raters[movie]) {
        if (user_first_[u] == kAbsent) user_first_[u] = p;
      }
    }
  }

  double Gain(ElementId a, std::int32_t prefix) const override {
    std::int64_t new_genres = 0;
    for (int g : ratings_.genres[a]) new_genres += genre_first_[g] >= prefix;
    std::int64_t new_users = 0;
    for (int u : high_raters_[a]) new_users += user_first_[u] >= prefix;
    return column_sum_[a] + alpha_ * static_cast<double>(new_genres) +
           beta_ * static_cast<double>(new_users);
  }

 private:
  const RatingsMatrix& ratings_;
  const std::vector<double>& column_sum_;
  const std::vector<std::vector<int>>& high_raters_;
  double alpha_;
  double beta_;
  std::vector<std::int32_t> genre_first_;
  std::vector<std::int32_t> user_first_;
};

// ---------------------------------------------------------------------------
// Modular

class ModularContext : public PrefixContext {
 public:
  ModularContext(const std::vector<double>& weights,
                 std::span<const ElementId> context)
      : PrefixContext(static_cast<int>(weights.size()), context),
        weights_(weights) {}

  double Gain(ElementId a, std::int32_t) const override { return weights_[a]; }

 private:
  const std::vector<double>& weights_;
};

std::vector<bool> Membership(int n, std::span<const ElementId> set) {
  std::vector<bool> in(n, false);
  for (ElementId a : set) in[a] = true;
  return in;
}

}  // namespace

// ---------------------------------------------------------------------------

MaxCover::MaxCover(std::shared_ptr<const Graph> graph)
    : graph_(std::move(graph)) {
  if (graph_->directed()) {
    throw std::invalid_argument("MaxCover needs an undirected graph");
  }
}

std::string MaxCover::Describe() const {
  std::ostringstream out;
  out << "max_cover(n=" << graph_->num_nodes()
      << ", edges=" << graph_->num_edges() << ")";
  return out.str();
}

double MaxCover::Value(std::span<const ElementId> set) const {
  std::vector<bool> covered(graph_->num_nodes(), false);
  std::int64_t count = 0;
  for (ElementId v : set) {
    for (ElementId u : graph_->neighbors(v)) {
      if (!covered[u]) {
        covered[u] = true;
        ++count;
      }
    }
  }
  return static_cast<double>(count);
}

std::unique_ptr<PrefixContext> MaxCover::Prepare(
    std::span<const ElementId> context, ThreadPool* pool) const {
  return std::make_unique<MaxCoverContext>(*graph_, context, pool);
}

// ---------------------------------------------------------------------------

WeightedDirectedCover::WeightedDirectedCover(std::shared_ptr<const Graph> graph)
    : graph_(std::move(graph)) {
  if (!graph_->directed()) {
    throw std::invalid_argument("WeightedDirectedCover needs a directed graph");
  }
  if (!graph_->weighted()) {
    throw std::invalid_argument("WeightedDirectedCover needs edge weights");
  }
  const int n = graph_->num_nodes();
  const std::vector<Edge> edges = graph_->Edges();
  incidence_offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    if (!(e.weight > 0.0)) {
      throw std::invalid_argument("WeightedDirectedCover: weights must be > 0");
    }
    ++incidence_offsets_[e.from + 1];
    ++incidence_offsets_[e.to + 1];
  }
  for (int v = 0; v < n; ++v) incidence_offsets_[v + 1] += incidence_offsets_[v];
  incidence_other_.resize(incidence_offsets_[n]);
  incidence_weight_.resize(incidence_offsets_[n]);
  std::vector<std::int64_t> cursor(incidence_offsets_.begin(),
                                   incidence_offsets_.end() - 1);
  for (const Edge& e : edges) {
    std::int64_t s = cursor[e.from]++;
    incidence_other_[s] = e.to;
    incidence_weight_[s] = e.weight;
    s = cursor[e.to]++;
    incidence_other_[s] = e.from;
    incidence_weight_[s] = e.weight;
  }
}

std::string WeightedDirectedCover::Describe() const {
  std::ostringstream out;
  out << "weighted_directed_cover(n=" << graph_->num_nodes()
      << ", edges=" << graph_->num_edges() << ")";
  return out.str();
}

double WeightedDirectedCover::Value(std::span<const ElementId> set) const {
  const std::vector<bool> in = Membership(graph_->num_nodes(), set);
  double total = 0.0;
  for (ElementId u = 0; u < graph_->num_nodes(); ++u) {
    const auto nbrs = graph_->neighbors(u);
    const auto ws = graph_->neighbor_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (in[u] || in[nbrs[i]]) total += ws[i];
    }
  }
  return total;
}

std::unique_ptr<PrefixContext> WeightedDirectedCover::Prepare(
    std::span<const ElementId> context, ThreadPool*) const {
  return std::make_unique<DirectedCoverContext>(
      graph_->num_nodes(), context, incidence_offsets_, incidence_other_,
      incidence_weight_);
}

// ---------------------------------------------------------------------------

Revenue::Revenue(std::shared_ptr<const Graph> graph, double alpha)
    : graph_(std::move(graph)), alpha_(alpha) {
  if (graph_->directed()) {
    throw std::invalid_argument("Revenue needs an undirected graph");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("Revenue: alpha must lie in (0, 1)");
  }
  for (ElementId v = 0; v < graph_->num_nodes(); ++v) {
    for (double w : graph_->neighbor_weights(v)) {
      if (w < 0.0 || !std::isfinite(w)) {
        throw std::invalid_argument("Revenue: negative edge weight");
      }
    }
  }
}

std::string Revenue::Describe() const {
  std::ostringstream out;
  out << "revenue(n=" << graph_->num_nodes() << ", alpha=" << alpha_ << ")";
  return out.str();
}

double Revenue::Value(std::span<const ElementId> set) const {
  std::vector<double> incoming(graph_->num_nodes(), 0.0);
  for (ElementId j : set) {
    const auto nbrs = graph_->neighbors(j);
    const auto ws = graph_->neighbor_weights(j);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      incoming[nbrs[i]] += ws.empty() ? 1.0 : ws[i];
    }
  }
  double total = 0.0;
  for (double y : incoming) total += Concave(y, alpha_);
  return total;
}

std::unique_ptr<PrefixContext> Revenue::Prepare(
    std::span<const ElementId> context, ThreadPool*) const {
  return std::make_unique<RevenueContext>(*graph_, alpha_, context);
}

// ---------------------------------------------------------------------------

Influence::Influence(std::shared_ptr<const Graph> graph, double p)
    : graph_(std::move(graph)), p_(p) {
  if (graph_->directed()) {
    throw std::invalid_argument("Influence needs an undirected graph");
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("Influence: p must lie in (0, 1)");
  }
  int max_degree = 0;
  for (ElementId v = 0; v < graph_->num_nodes(); ++v) {
    max_degree = std::max(max_degree, graph_->degree(v));
  }
  miss_power_.resize(max_degree + 2);
  for (std::size_t c = 0; c < miss_power_.size(); ++c) {
    miss_power_[c] = std::pow(1.0 - p_, static_cast<double>(c));
  }
}

std::string Influence::Describe() const {
  std::ostringstream out;
  out << "influence(n=" << graph_->num_nodes() << ", p=" << p_ << ")";
  return out.str();
}

double Influence::Value(std::span<const ElementId> set) const {
  const int n = graph_->num_nodes();
  const std::vector<bool> in = Membership(n, set);
  std::vector<int> hits(n, 0);
  for (ElementId j : set) {
    for (ElementId i : graph_->neighbors(j)) ++hits[i];
  }
  double total = 0.0;
  for (ElementId i = 0; i < n; ++i) {
    total += in[i] ? 1.0 : 1.0 - miss_power_[hits[i]];
  }
  return total;
}

std::unique_ptr<PrefixContext> Influence::Prepare(
    std::span<const ElementId> context, ThreadPool*) const {
  return std::make_unique<InfluenceContext>(*graph_, p_, miss_power_, context);
}

// ---------------------------------------------------------------------------

void RatingsMatrix::Validate() const {
  if (users < 0 || movies < 0 ||
      ratings.size() != static_cast<std::size_t>(users) * movies) {
    throw std::invalid_argument("RatingsMatrix: ratings size != users x movies");
  }
  if (genres.size() != static_cast<std::size_t>(movies)) {
    throw std::invalid_argument("RatingsMatrix: need one genre list per movie");
  }
  for (double r : ratings) {
    if (!std::isfinite(r) || r < 0.0) {
      throw std::invalid_argument("RatingsMatrix: ratings must be finite and >= 0");
    }
  }
  for (const auto& gs : genres) {
    for (int g : gs) {
      if (g < 0 || g >= num_genres) {
        throw std::invalid_argument("RatingsMatrix: genre id out of range");
      }
    }
  }
}

MovieRecommendation::MovieRecommendation(
    std::shared_ptr<const RatingsMatrix> ratings, std::optional<double> alpha,
    std::optional<double> beta)
    : ratings_(std::move(ratings)) {
  ratings_->Validate();
  const RatingsMatrix& r = *ratings_;
  column_sum_.assign(r.movies, 0.0);
  high_raters_.assign(r.movies, {});
  for (int u = 0; u < r.users; ++u) {
    for (int j = 0; j < r.movies; ++j) {
      const double rating = r.at(u, j);
      column_sum_[j] += rating;
      if (rating > r.high_rating_threshold) high_raters_[j].push_back(u);
    }
  }
  const double max_column =
      column_sum_.empty()
          ? 0.0
          : *std::max_element(column_sum_.begin(), column_sum_.end());
  alpha_ = alpha.value_or(0.5 * max_column);
  beta_ = beta.value_or(1.0);
  if (alpha_ < 0.0 || beta_ < 0.0) {
    throw std::invalid_argument("MovieRecommendation: alpha, beta must be >= 0");
  }
}

std::string MovieRecommendation::Describe() const {
  std::ostringstream out;
  out << "movie_recommendation(users=" << ratings_->users
      << ", movies=" << ratings_->movies << ", alpha=" << alpha_
      << ", beta=" << beta_ << ")";
  return out.str();
}

double MovieRecommendation::Value(std::span<const ElementId> set) const {
  const RatingsMatrix& r = *ratings_;
  std::vector<bool> genre_seen(r.num_genres, false);
  std::vector<bool> user_seen(r.users, false);
  double rating_sum = 0.0;
  std::int64_t genres = 0, users = 0;
  for (ElementId j : set) {
    rating_sum += column_sum_[j];
    for (int g : r.genres[j]) {
      if (!genre_seen[g]) {
        genre_seen[g] = true;
        ++genres;
      }
    }
    for (int u : high_raters_[j]) {
      if (!user_seen[u]) {
        user_seen[u] = true;
        ++users;
      }
    }
  }
  return rating_sum + alpha_ * static_cast<double>(genres) +
         beta_ * static_cast<double>(users);
}

std::unique_ptr<PrefixContext> MovieRecommendation::Prepare(
    std::span<const ElementId> context, ThreadPool*) const {
  return std::make_unique<MovieContext>(*ratings_, column_sum_, high_raters_,
                                        alpha_, beta_, context);
}

// ---------------------------------------------------------------------------

Modular::Modular(std::vector<double> weights) : weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("Modular: weights must be finite and >= 0");
    }
  }
}

std::string Modular::Describe() const {
  return "modular(n=" + std::to_string(weights_.size()) + ")";
}

double Modular::Value(std::span<const ElementId> set) const {
  double total = 0.0;
  for (ElementId a : set) total += weights_[a];
  return total;
}

std::unique_ptr<PrefixContext> Modular::Prepare(
    std::span<const ElementId> context, ThreadPool*) const {
  return std::make_unique<ModularContext>(weights_, context);
}

}  // namespace fastsm
