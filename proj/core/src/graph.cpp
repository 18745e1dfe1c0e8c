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

#include "regexlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace regexlab {

int PartSpec::vertex_count() const {
  return std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
}

int PartSpec::offset(std::size_t i) const {
  return std::accumulate(part_sizes.begin(),
                         part_sizes.begin() + static_cast<std::ptrdiff_t>(i), 0);
}

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(vertex_count) +
                                " outside [0, " + std::to_string(kMaxVertices) +
                                "]");
  }
  words_ = (static_cast<std::size_t>(n_) + 63) / 64;
  bits_.assign(words_ * static_cast<std::size_t>(n_), 0);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n_));
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  if (has_edge(u, v)) return false;
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  ++m_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  if (u == v || !has_edge(u, v)) return false;
  bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  --m_;
  return true;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(v);
  return {bits_.data() + v * words_, words_};
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) {
        h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return h;
}

Graph Graph::complement() const {
  Graph h(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!has_edge(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  if (g.vertex_count() == 0) {
    p.degree = 0;
    return p;
  }
  p.min = g.vertex_count();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    p.min = std::min(p.min, d);
    p.max = std::max(p.max, d);
  }
  p.is_regular = p.min == p.max;
  if (p.is_regular) p.degree = p.min;
  return p;
}

Graph make_complete_multipartite(const PartSpec& parts) {
  if (parts.part_sizes.empty()) {
    throw std::invalid_argument("complete multipartite graph needs at least one part");
  }
  for (int s : parts.part_sizes) {
    if (s < 1) throw std::invalid_argument("part size must be positive, got " + std::to_string(s));
  }
  Graph g(parts.vertex_count());
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.part_sizes.size(); ++i) {
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts.part_sizes[i]),
                   static_cast<int>(i));
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

TuranGraph make_turan(int n, int r) {
  if (r < 1 || r > n) {
    throw std::invalid_argument("Turan graph needs 1 <= r <= n (n=" + std::to_string(n) +
                                ", r=" + std::to_string(r) + ")");
  }
  const int q = n / r;
  const int s = n % r;
  PartSpec parts;
  for (int i = 0; i < r; ++i) parts.part_sizes.push_back(i < s ? q + 1 : q);
  return {make_complete_multipartite(parts), parts};
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph make_complete(int k) {
  if (k < 1) throw std::invalid_argument("complete graph needs k >= 1, got " + std::to_string(k));
  Graph g(k);
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph make_empty(int n) { return Graph(n); }

Graph disjoint_union(std::span<const Graph> graphs) {
  int total = 0;
  for (const auto& g : graphs) total += g.vertex_count();
  Graph out(total);
  int offset = 0;
  for (const auto& g : graphs) {
    for (const Edge& e : g.edges()) out.add_edge(e.u + offset, e.v + offset);
    offset += g.vertex_count();
  }
  return out;
}

RemovalPlan RemovalPlan::from_edges(int vertex_count, std::vector<Edge> edges) {
  RemovalPlan plan;
  plan.quota.assign(static_cast<std::size_t>(vertex_count), 0);
  for (const Edge& e : edges) {
    ++plan.quota.at(static_cast<std::size_t>(e.u));
    ++plan.quota.at(static_cast<std::size_t>(e.v));
  }
  plan.edges = std::move(edges);
  return plan;
}

bool RemovalPlan::quotas_consistent() const {
  std::vector<int> seen(quota.size(), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= static_cast<Vertex>(quota.size())) return false;
    ++seen[static_cast<std::size_t>(e.u)];
    ++seen[static_cast<std::size_t>(e.v)];
  }
  return seen == quota;
}

namespace {

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

Graph remove_edge_set(const Graph& g, const RemovalPlan& plan) {
  if (plan.quota.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw std::invalid_argument("removal plan quota covers " +
                                std::to_string(plan.quota.size()) + " vertices, graph has " +
                                std::to_string(g.vertex_count()));
  }
  Graph out = g;
  for (const Edge& e : plan.edges) {
    if (e.u < 0 || e.v >= g.vertex_count() || e.u == e.v || !g.has_edge(e.u, e.v)) {
      throw std::invalid_argument("removal plan lists non-edge " + pair_text(e));
    }
    if (!out.remove_edge(e.u, e.v)) {
      throw std::invalid_argument("removal plan lists edge twice " + pair_text(e));
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) - out.degree(v) != plan.quota[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("removal plan quota mismatch at vertex " + std::to_string(v));
    }
  }
  return out;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace regexlab
