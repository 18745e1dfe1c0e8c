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

#include <algorithm>
#include <functional>
#include <tuple>

#include "regexlab/oracle.hpp"

namespace regexlab {

namespace {

using VertexInvariant = std::tuple<int, int, int>;

std::vector<VertexInvariant> vertex_invariants(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexInvariant> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto nbrs = g.neighbors(v);
    int triangles = 0;
    int degree_sum = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      degree_sum += g.degree(nbrs[i]);
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.has_edge(nbrs[i], nbrs[j])) ++triangles;
      }
    }
    out.emplace_back(static_cast<int>(nbrs.size()), triangles, degree_sum);
  }
  return out;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

std::uint64_t invariant_hash(const Graph& g) {
  auto inv = vertex_invariants(g);
  std::sort(inv.begin(), inv.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(g.vertex_count()), static_cast<std::uint64_t>(g.edge_count()));
  for (const auto& [d, t, s] : inv) {
    h = mix(h, static_cast<std::uint64_t>(d));
    h = mix(h, static_cast<std::uint64_t>(t));
    h = mix(h, static_cast<std::uint64_t>(s));
  }
  std::vector<std::size_t> sizes;
  for (const auto& c : components(g)) sizes.push_back(c.vertices.size());
  std::sort(sizes.begin(), sizes.end());
  for (auto s : sizes) h = mix(h, s);
  return h;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const auto ia = vertex_invariants(a);
  const auto ib = vertex_invariants(b);
  {
    auto sa = ia;
    auto sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  // Map a's vertices in BFS order so each new vertex usually has a mapped
  // neighbour constraining it.
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    for (; head < order.size(); ++head) {
      for (Vertex w : a.neighbors(order[head])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          order.push_back(w);
        }
      }
    }
  }

  std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    const Vertex v = order[i];
    for (Vertex h = 0; h < n; ++h) {
      if (used[static_cast<std::size_t>(h)] || ib[static_cast<std::size_t>(h)] != ia[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const Vertex u = order[j];
        ok = a.has_edge(u, v) == b.has_edge(image[static_cast<std::size_t>(u)], h);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = h;
      used[static_cast<std::size_t>(h)] = 1;
      if (extend(i + 1)) return true;
      used[static_cast<std::size_t>(h)] = 0;
    }
    return false;
  };
  return extend(0);
}

}  // namespace regexlab
