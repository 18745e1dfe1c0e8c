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

#include <algorithm>
#include <numeric>
#include <vector>

#include "regexlab/graph.hpp"
#include "regexlab/patterns.hpp"

namespace regexlab::detail {

/// Placement order for backtracking embedding of a pattern graph:
/// components largest first, each in BFS order from a maximum-degree root.
struct EmbeddingOrder {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;                    // by pattern vertex, -1 for roots
  std::vector<std::vector<Vertex>> constraints;  // by position: placed non-parent neighbours
  std::vector<int> degree;                       // by pattern vertex
};

inline EmbeddingOrder embedding_order(const Graph& pattern) {
  const auto np = static_cast<std::size_t>(pattern.vertex_count());
  EmbeddingOrder out;
  out.parent.assign(np, -1);
  for (Vertex v = 0; v < pattern.vertex_count(); ++v) out.degree.push_back(pattern.degree(v));

  const auto comps = components(pattern);
  std::vector<std::size_t> idx(comps.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return comps[a].vertices.size() > comps[b].vertices.size();
  });
  std::vector<char> queued(np, 0);
  for (std::size_t ci : idx) {
    const auto& vs = comps[ci].vertices;
    Vertex root = vs.front();
    for (Vertex v : vs) {
      if (out.degree[static_cast<std::size_t>(v)] > out.degree[static_cast<std::size_t>(root)]) root = v;
    }
    std::vector<Vertex> queue{root};
    queued[static_cast<std::size_t>(root)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      out.order.push_back(v);
      for (Vertex w : pattern.neighbors(v)) {
        if (!queued[static_cast<std::size_t>(w)]) {
          queued[static_cast<std::size_t>(w)] = 1;
          out.parent[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        }
      }
    }
  }

  out.constraints.resize(out.order.size());
  std::vector<char> done(np, 0);
  for (std::size_t i = 0; i < out.order.size(); ++i) {
    const Vertex v = out.order[i];
    for (Vertex w : pattern.neighbors(v)) {
      if (done[static_cast<std::size_t>(w)] && w != out.parent[static_cast<std::size_t>(v)]) {
        out.constraints[i].push_back(w);
      }
    }
    done[static_cast<std::size_t>(v)] = 1;
  }
  return out;
}

}  // namespace regexlab::detail
