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
#include <deque>
#include <stdexcept>

#include "regexlab/constructions.hpp"
#include "regexlab/errors.hpp"
#include "regexlab/patterns.hpp"

namespace regexlab {

namespace {

// Greedy interleaving of the parts of a complete multipartite graph: always
// take a vertex from the largest remaining part other than the previous one,
// preferring the starting part on ties so it is used up before the cycle
// closes.
std::vector<Vertex> interleave_parts(std::vector<std::vector<Vertex>> parts) {
  std::vector<std::size_t> next(parts.size(), 0);
  auto remaining = [&](std::size_t i) { return parts[i].size() - next[i]; };
  std::vector<Vertex> cycle;
  std::size_t prev = parts.size();
  std::size_t first = parts.size();
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  while (cycle.size() < total) {
    std::size_t best = parts.size();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i == prev || remaining(i) == 0) continue;
      if (best == parts.size() || remaining(i) > remaining(best) ||
          (remaining(i) == remaining(best) && i == first)) {
        best = i;
      }
    }
    if (best == parts.size()) return {};
    cycle.push_back(parts[best][next[best]++]);
    if (first == parts.size()) first = best;
    prev = best;
  }
  return cycle;
}

std::vector<Vertex> rotation_extension(const Graph& g) {
  const int n = g.vertex_count();
  std::deque<Vertex> path{0};
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  on_path[0] = 1;

  auto first_free_neighbour = [&](Vertex v) -> Vertex {
    for (Vertex w : g.neighbors(v)) {
      if (!on_path[static_cast<std::size_t>(w)]) return w;
    }
    return -1;
  };

  while (true) {
    // Extend greedily at both ends.
    for (bool grew = true; grew;) {
      grew = false;
      if (Vertex w = first_free_neighbour(path.back()); w >= 0) {
        path.push_back(w);
        on_path[static_cast<std::size_t>(w)] = 1;
        grew = true;
      }
      if (Vertex w = first_free_neighbour(path.front()); w >= 0) {
        path.push_front(w);
        on_path[static_cast<std::size_t>(w)] = 1;
        grew = true;
      }
    }

    // Close the maximal path into a cycle, rotating if the ends are not
    // adjacent: with v1 ~ v_{i+1} and v_i ~ v_k the path
    // v1..v_i v_k..v_{i+1} has adjacent ends.
    const std::size_t k = path.size();
    if (k < 3) throw std::logic_error("rotation-extension stalled on a path of length < 3");
    if (!g.has_edge(path.front(), path.back())) {
      std::size_t pivot = k;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        if (g.has_edge(path.front(), path[i + 1]) && g.has_edge(path[i], path.back())) {
          pivot = i;
          break;
        }
      }
      if (pivot == k) throw std::logic_error("no rotation closes the path; Dirac condition violated");
      std::reverse(path.begin() + static_cast<std::ptrdiff_t>(pivot + 1), path.end());
    }
    if (static_cast<int>(k) == n) return {path.begin(), path.end()};

    // Open the cycle next to a vertex with an outside neighbour.
    std::size_t hook = k;
    Vertex outside = -1;
    for (std::size_t j = 0; j < k && hook == k; ++j) {
      if (Vertex w = first_free_neighbour(path[j]); w >= 0) {
        hook = j;
        outside = w;
      }
    }
    if (hook == k) throw std::logic_error("graph is disconnected; Dirac condition violated");
    std::rotate(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(hook + 1), path.end());
    path.push_back(outside);
    on_path[static_cast<std::size_t>(outside)] = 1;
  }
}

}  // namespace

bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const int n = g.vertex_count();
  if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

std::vector<Vertex> hamiltonian_cycle(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3) throw PreconditionError("Hamiltonian cycle needs n >= 3");
  if (2 * degree_profile(g).min < n) {
    throw PreconditionError("Dirac condition fails: minimum degree " +
                            std::to_string(degree_profile(g).min) + " < n/2 for n=" +
                            std::to_string(n));
  }
  if (is_complete_multipartite(g)) {
    std::vector<std::vector<Vertex>> parts;
    for (auto& comp : components(g.complement())) parts.push_back(std::move(comp.vertices));
    auto cycle = interleave_parts(std::move(parts));
    if (is_hamiltonian_cycle(g, cycle)) return cycle;
  }
  return rotation_extension(g);
}

}  // namespace regexlab
