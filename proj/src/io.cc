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


#include "fastsm/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace fastsm {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Splits the non-comment part of a line into whitespace-separated tokens.
std::vector<std::string_view> Tokens(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Fn>
void ForEachLine(const std::string& text, Fn&& fn) {
  int number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++number, line);
    start = end + 1;
  }
}

long long ParseInt(std::string_view token, const std::string& name, int line) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(name, line, "bad integer '" + std::string(token) + "'");
  }
  return value;
}

double ParseReal(std::string_view token, const std::string& name, int line) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() ||
      !std::isfinite(value)) {
    throw ParseError(name, line, "bad number '" + std::string(token) + "'");
  }
  return value;
}

// Assigns dense ids in order of first appearance.
class IdMap {
 public:
  int Get(long long raw) {
    const auto [it, inserted] = index_.try_emplace(raw, static_cast<int>(raw_.size()));
    if (inserted) raw_.push_back(raw);
    return it->second;
  }
  const std::vector<long long>& raw() const { return raw_; }
  int size() const { return static_cast<int>(raw_.size()); }

 private:
  std::unordered_map<long long, int> index_;
  std::vector<long long> raw_;
};

}  // namespace

ParseError::ParseError(const std::string& path, int line,
                       const std::string& message)
    : std::runtime_error(path + ":" + std::to_string(line) + ": " + message),
      line_(line) {}

LoadedGraph ParseEdgeList(const std::string& text, const std::string& name,
                          const EdgeListOptions& options) {
  struct RawEdge {
    long long u, v;
    double w;
  };
  std::vector<RawEdge> raw;
  bool any_weight = options.require_weights;
  LoadedGraph out;
  ForEachLine(text, [&](int line, std::string_view content) {
    const auto tokens = Tokens(content);
    if (tokens.empty()) return;
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError(name, line, "expected 'u v [w]'");
    }
    RawEdge e{ParseInt(tokens[0], name, line), ParseInt(tokens[1], name, line),
              1.0};
    if (!options.remap_ids && (e.u < 0 || e.v < 0 || e.u > INT32_MAX - 1 ||
                               e.v > INT32_MAX - 1)) {
      throw ParseError(name, line, "node id out of range");
    }
    if (tokens.size() == 3) {
      e.w = ParseReal(tokens[2], name, line);
      any_weight = true;
    }
    if (e.u == e.v) {
      out.warnings.push_back(name + ":" + std::to_string(line) +
                             ": dropped self-loop on " + std::to_string(e.u));
      return;
    }
    raw.push_back(e);
  });

  IdMap ids;
  int n = 0;
  if (options.remap_ids) {
    for (const RawEdge& e : raw) {
      ids.Get(e.u);
      ids.Get(e.v);
    }
    n = ids.size();
    out.original_ids = ids.raw();
  } else {
    for (const RawEdge& e : raw) {
      n = std::max<long long>(n, std::max(e.u, e.v) + 1);
    }
    out.original_ids.resize(n);
    for (int i = 0; i < n; ++i) out.original_ids[i] = i;
  }
  GraphBuilder builder(n, options.directed, any_weight);
  for (const RawEdge& e : raw) {
    const int u = options.remap_ids ? ids.Get(e.u) : static_cast<int>(e.u);
    const int v = options.remap_ids ? ids.Get(e.v) : static_cast<int>(e.v);
    builder.AddEdge(u, v, e.w);
  }
  std::int64_t duplicates = 0;
  out.graph = std::move(builder).Build(/*dedupe=*/true, &duplicates);
  if (duplicates > 0) {
    out.warnings.push_back(name + ": merged " + std::to_string(duplicates) +
                           " duplicate edge(s), keeping the maximum weight");
  }
  return out;
}

LoadedGraph LoadEdgeList(const std::string& path,
                         const EdgeListOptions& options) {
  return ParseEdgeList(ReadFile(path), path, options);
}

LoadedRatings ParseRatings(const std::string& ratings_text,
                           const std::string& genres_text) {
  struct Triple {
    int user, movie;
    double rating;
  };
  IdMap users, movies, genre_ids;
  std::vector<Triple> triples;
  LoadedRatings out;
  ForEachLine(ratings_text, [&](int line, std::string_view content) {
    const auto tokens = Tokens(content);
    if (tokens.empty()) return;
    if (tokens.size() != 3) {
      throw ParseError("ratings", line, "expected 'user movie rating'");
    }
    const double r = ParseReal(tokens[2], "ratings", line);
    if (r < 0.0) throw ParseError("ratings", line, "negative rating");
    triples.push_back({users.Get(ParseInt(tokens[0], "ratings", line)),
                       movies.Get(ParseInt(tokens[1], "ratings", line)), r});
  });
  std::vector<std::pair<int, std::vector<int>>> genre_lines;
  ForEachLine(genres_text, [&](int line, std::string_view content) {
    const auto tokens = Tokens(content);
    if (tokens.empty()) return;
    std::vector<int> gs;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const int g = genre_ids.Get(ParseInt(tokens[i], "genres", line));
      if (std::find(gs.begin(), gs.end(), g) == gs.end()) gs.push_back(g);
    }
    genre_lines.emplace_back(movies.Get(ParseInt(tokens[0], "genres", line)),
                             std::move(gs));
  });

  RatingsMatrix& m = out.ratings;
  m.users = users.size();
  m.movies = movies.size();
  m.num_genres = genre_ids.size();
  m.ratings.assign(static_cast<std::size_t>(m.users) * m.movies, 0.0);
  m.genres.assign(m.movies, {});
  std::vector<bool> seen(m.ratings.size(), false);
  for (const Triple& t : triples) {
    const std::size_t cell = static_cast<std::size_t>(t.user) * m.movies + t.movie;
    if (seen[cell]) {
      out.warnings.push_back("ratings: repeated (user " +
                             std::to_string(users.raw()[t.user]) + ", movie " +
                             std::to_string(movies.raw()[t.movie]) +
                             "), keeping the last rating");
    }
    seen[cell] = true;
    m.ratings[cell] = t.rating;
  }
  for (auto& [movie, gs] : genre_lines) {
    for (int g : gs) {
      auto& list = m.genres[movie];
      if (std::find(list.begin(), list.end(), g) == list.end()) list.push_back(g);
    }
  }
  out.movie_ids = movies.raw();
  m.Validate();
  return out;
}

LoadedRatings LoadRatings(const std::string& ratings_path,
                          const std::string& genres_path) {
  return ParseRatings(ReadFile(ratings_path), ReadFile(genres_path));
}

}  // namespace fastsm
