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

// Plain-text loaders for externally supplied instances.
//
// Edge list: one `u v [w]` per line, whitespace separated, `#` starts a
// comment. Ratings: `user movie rating` per line; genres: `movie g1 g2 ...`.

#ifndef FASTSM_IO_H_
#define FASTSM_IO_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "fastsm/graph.h"
#include "fastsm/objectives.h"

namespace fastsm {

// Malformed input. what() names the file and the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct EdgeListOptions {
  bool directed = false;
  // Maps arbitrary ids to 0..n-1 in order of first appearance. When false,
  // ids are used as-is and n = max id + 1.
  bool remap_ids = false;
  // Forces every edge to carry a weight (missing weights read as 1). When
  // false the graph is weighted iff some line has a third column.
  bool require_weights = false;
};

struct LoadedGraph {
  Graph graph;
  // Original id of each node (identity when ids were not remapped).
  std::vector<long long> original_ids;
  // Human-readable notes about dropped self-loops and merged duplicates.
  std::vector<std::string> warnings;
};

// Throws std::runtime_error if the file cannot be opened and ParseError on a
// malformed line. Duplicate edges keep the maximum weight and add a warning.
LoadedGraph LoadEdgeList(const std::string& path,
                         const EdgeListOptions& options = {});

// Same, reading from an in-memory string (`name` is used in messages).
LoadedGraph ParseEdgeList(const std::string& text, const std::string& name,
                          const EdgeListOptions& options = {});

// Ratings triples plus a genre file. User, movie, and genre ids are remapped
// in order of first appearance (movies first by the ratings file, then by the
// genre file). Missing ratings are 0; a repeated (user, movie) pair keeps the
// last rating and adds a warning.
struct LoadedRatings {
  RatingsMatrix ratings;
  std::vector<long long> movie_ids;
  std::vector<std::string> warnings;
};

LoadedRatings LoadRatings(const std::string& ratings_path,
                          const std::string& genres_path);

LoadedRatings ParseRatings(const std::string& ratings_text,
                           const std::string& genres_text);

}  // namespace fastsm

#endif  // FASTSM_IO_H_
