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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace regexlab {

using Vertex = int;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Part sizes of a complete multipartite graph, in label order.
struct PartSpec {
  std::vector<int> part_sizes;

  int vertex_count() const;
  /// First label of part `i` under contiguous assignment.
  int offset(std::size_t i) const;

  friend bool operator==(const PartSpec&, const PartSpec&) = default;
};

/// Finite simple undirected graph on labels 0..n-1 with a dense symmetric
/// bit adjacency. Copyable value type; builders never share storage.
class Graph {
 public:
  static constexpr int kMaxVertices = 512;

  Graph() = default;
  explicit Graph(int vertex_count);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return m_; }

  bool has_edge(Vertex u, Vertex v) const;
  /// Adds {u,v}; returns false if it was already present.
  bool add_edge(Vertex u, Vertex v);
  /// Removes {u,v}; returns false if it was absent.
  bool remove_edge(Vertex u, Vertex v);

  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  /// Adjacency row of `v` as 64-bit words (bit w of word w/64 = edge to w).
  std::span<const std::uint64_t> row(Vertex v) const;
  std::size_t words_per_row() const noexcept { return words_; }

  /// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
  Graph induced(std::span<const Vertex> vertices) const;
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct DegreeProfile {
  int min = 0;
  int max = 0;
  bool is_regular = true;
  std::optional<int> degree;  // set iff min == max
};

DegreeProfile degree_profile(const Graph& g);

Graph make_complete_multipartite(const PartSpec& parts);

struct TuranGraph {
  Graph graph;
  PartSpec parts;
};

/// T(n,r): r parts, the n mod r larger parts first.
TuranGraph make_turan(int n, int r);

Graph make_cycle(int n);
Graph make_complete(int k);
Graph make_empty(int n);
Graph disjoint_union(std::span<const Graph> graphs);

/// Edges to delete plus the per-vertex degree drop they cause.
struct RemovalPlan {
  std::vector<Edge> edges;
  std::vector<int> quota;
  /// The first `anchored` entries of `edges` are edges pinned to a specific
  /// vertex (e.g. the edges leaving each maximum-degree Turán vertex), with
  /// that vertex stored in `edges[i].u` or `.v` as recorded in `anchors`.
  std::size_t anchored = 0;
  std::vector<Vertex> anchors;

  /// Builds a plan whose quota is the incidence count of `edges`.
  static RemovalPlan from_edges(int vertex_count, std::vector<Edge> edges);
  /// True iff each vertex's incidence count in `edges` equals its quota.
  bool quotas_consistent() const;
};

/// Deletes the plan's edges. Throws std::invalid_argument naming the pair if
/// an edge is missing or listed twice, or if the quotas disagree with the
/// edge list.
Graph remove_edge_set(const Graph& g, const RemovalPlan& plan);

std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace regexlab
