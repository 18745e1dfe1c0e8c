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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "regexlab/graph.hpp"
#include "regexlab/trees.hpp"

namespace regexlab {

struct CliquePattern {
  int size = 0;
};

/// Forbidden-subgraph descriptor: a clique K_k, a tree, or an arbitrary small
/// pattern graph (used for the forests, possibly with cyclic components, that
/// the zero-degree classifier accepts).
using Pattern = std::variant<CliquePattern, Tree, Graph>;

std::string describe(const Pattern& pattern);
int pattern_vertex_count(const Pattern& pattern);

/// Injective map from pattern vertex i to host vertex mapping[i].
struct Embedding {
  std::vector<Vertex> mapping;
};

/// True iff `e` is injective and sends every pattern edge to a host edge.
bool is_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

/// Lexicographically least k-clique in vertex order, if any.
std::optional<Embedding> contains_clique(const Graph& g, int k);

/// Non-induced tree containment by backtracking. Host vertices are tried in
/// ascending order, so the returned embedding is reproducible.
std::optional<Embedding> contains_tree(const Graph& g, const Tree& tree);

/// Same backtracking embedder for any pattern graph. Components are placed
/// largest first, each in BFS order from a maximum-degree root so that
/// leaves come last.
std::optional<Embedding> contains_subgraph(const Graph& g, const Graph& pattern);

std::optional<Embedding> find_pattern(const Graph& g, const Pattern& pattern);

/// Parts of g when g is complete multipartite (its complement is a union of
/// cliques), listed in order of each part's smallest vertex.
std::optional<PartSpec> is_complete_multipartite(const Graph& g);

/// Proper r-colourability by backtracking. Desk scale only.
bool is_r_partite(const Graph& g, int r);

struct Component {
  Graph graph;
  /// vertices[i] is the host label of component vertex i.
  std::vector<Vertex> vertices;
};

/// Connected components ordered by smallest host vertex.
std::vector<Component> components(const Graph& g);

}  // namespace regexlab
