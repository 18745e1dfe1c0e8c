// Copyright 2026 The regexlab Authors
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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "regexlab/graph.hpp"
#include "regexlab/patterns.hpp"

namespace regexlab {

inline constexpr int kDefaultSearchBound = 14;
/// The search keeps each adjacency row in one machine word.
inline constexpr int kSearchHardLimit = 64;

enum class SearchMode { exists, enumerate };

struct SearchSpec {
  int n = 0;
  int d = 0;
  Pattern forbidden = CliquePattern{3};
  SearchMode mode = SearchMode::exists;
};

struct SearchOptions {
  int max_n = kDefaultSearchBound;
  /// Worker threads. Results are identical for every value.
  int workers = 1;
  /// Adjacency rows completed before the search tree is split into tasks.
  int split_rows = 2;
  /// Enumeration only: keep one graph per isomorphism class.
  bool dedup_isomorphic = false;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t tasks = 0;
};

/// Some d-regular F-free graph on n vertices, the least one in row order
/// (rows compared as sorted neighbour lists). Returns nothing, without
/// searching, when n*d is odd. Throws OracleRefusal above the size bound.
std::optional<Graph> exists_regular_free(const SearchSpec& spec, const SearchOptions& options = {},
                                         SearchStats* stats = nullptr);

/// Every d-regular F-free graph on n labelled vertices, in search order, or
/// one per isomorphism class when options.dedup_isomorphic is set.
std::vector<Graph> enumerate_regular_free(const SearchSpec& spec, const SearchOptions& options = {},
                                          SearchStats* stats = nullptr);

struct OracleResult {
  int value = 0;
  Graph witness;
};

/// Exact regex(n,F) by descending d from n-1. Value 0 comes with the
/// edgeless witness.
OracleResult regex_oracle(int n, const Pattern& forbidden, const SearchOptions& options = {},
                          SearchStats* stats = nullptr);

enum class ComponentShape {
  clique_t_minus_1,        // K_{t-1}
  clique_t_minus_2,        // K_{t-2}
  biclique_t_minus_3,      // K_{t-3,t-3}
  balanced_multipartite,   // (k+1) parts of size (t-3)/k, k | t-3
  unclassified,
};

std::string to_string(ComponentShape shape);

struct ComponentReport {
  ComponentShape shape = ComponentShape::unclassified;
  int vertex_count = 0;
  /// Number of parts for the multipartite shapes, 0 otherwise.
  int parts = 0;
};

struct ShapeReport {
  std::vector<ComponentReport> components;

  bool all_classified() const;
  /// True iff every component has one of the listed shapes.
  bool only(std::initializer_list<ComponentShape> allowed) const;
};

/// Matches each component against the extremal shapes for (t-2)- and
/// (t-3)-regular T-free graphs on t-vertex trees.
ShapeReport classify_components_shape(const Graph& g, int t);

/// Isomorphism test by backtracking over invariant-compatible vertices.
bool are_isomorphic(const Graph& a, const Graph& b);
/// Isomorphism-invariant hash (degree, triangle and neighbourhood data).
std::uint64_t invariant_hash(const Graph& g);

}  // namespace regexlab
