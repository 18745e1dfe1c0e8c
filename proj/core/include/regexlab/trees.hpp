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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regexlab/graph.hpp"

namespace regexlab {

/// A validated tree pattern. Construction rejects anything that is not
/// connected and acyclic, so every Tree in circulation satisfies both.
class Tree {
 public:
  /// Throws std::invalid_argument unless `edges` form a spanning tree on
  /// 0..t-1.
  static Tree from_edges(int t, const std::vector<Edge>& edges, std::string label = {});

  int vertex_count() const noexcept { return graph_.vertex_count(); }
  const Graph& graph() const noexcept { return graph_; }
  std::vector<Edge> edges() const { return graph_.edges(); }

  /// Family name ("path:6") when built by a named generator, else empty.
  const std::string& label() const noexcept { return label_; }
  /// Label if present, otherwise the explicit "t; u-v,..." form.
  std::string spec() const;

 private:
  Tree(Graph g, std::string label) : graph_(std::move(g)), label_(std::move(label)) {}

  Graph graph_;
  std::string label_;
};

struct TreeClass {
  int t = 0;
  bool is_star = false;
  bool is_almost_star = false;
  bool is_A_t = false;
  bool is_double_star = false;
  /// Colour class of vertex 0 first, then the other class.
  std::pair<int, int> bipartition_sizes{0, 0};
};

/// Throws std::invalid_argument for the single-vertex tree.
TreeClass classify(const Tree& tree);

Tree make_path(int t);
Tree make_star(int t);
/// The almost-star whose two-vertex colour class has degrees t-3 and 2
/// (vertex 0 has degree t-3, vertex 1 degree 2). Needs t >= 5.
Tree make_A(int t);
/// Two adjacent centres carrying p and q leaves (t = p + q + 2).
Tree make_double_star(int p, int q);

/// Parses "path:6" (or "P:6", "P6"), "star:5" (or "S:5", "S5"), "A:6",
/// "dstar:2:3" or an explicit edge list
/// "t; u-v,u-w,...".
Tree parse_tree_spec(std::string_view spec);

}  // namespace regexlab
