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

#include "regexlab/patterns.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "embedding_order.hpp"

namespace regexlab {

namespace {

using Words = std::vector<std::uint64_t>;

bool test_bit(const Words& w, Vertex v) { return (w[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U; }
void set_bit(Words& w, Vertex v) { w[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64); }
void clear_bit(Words& w, Vertex v) { w[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64)); }

int popcount(const Words& w) {
  int c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

struct CliqueSearch {
  const Graph& g;
  int k;
  std::vector<Vertex> chosen;

  bool extend(const Words& candidates) {
    if (static_cast<int>(chosen.size()) == k) return true;
    if (static_cast<int>(chosen.size()) + popcount(candidates) < k) return false;
    Words next(candidates.size());
    for (std::size_t w = 0; w < candidates.size(); ++w) {
      for (std::uint64_t bits = candidates[w]; bits != 0; bits &= bits - 1) {
        const auto v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        auto row = g.row(v);
        // Only vertices after v remain candidates, keeping cliques sorted.
        bool any = false;
        for (std::size_t x = 0; x < next.size(); ++x) {
          std::uint64_t keep = candidates[x] & row[x];
          if (x < w) keep = 0;
          if (x == w) keep &= (v % 64 == 63) ? 0 : (~std::uint64_t{0} << (v % 64 + 1));
          next[x] = keep;
          any = any || keep != 0;
        }
        chosen.push_back(v);
        if ((any || static_cast<int>(chosen.size()) == k) && extend(next)) return true;
        chosen.pop_back();
      }
    }
    return false;
  }
};

struct Embedder {
  const Graph& host;
  detail::EmbeddingOrder plan;
  std::vector<int> host_degree;
  std::vector<Vertex> image;
  Words used;

  Embedder(const Graph& h, const Graph& p) : host(h), plan(detail::embedding_order(p)) {
    image.assign(static_cast<std::size_t>(p.vertex_count()), -1);
    used.assign(std::max<std::size_t>(h.words_per_row(), 1), 0);
    for (Vertex v = 0; v < h.vertex_count(); ++v) host_degree.push_back(h.degree(v));
  }

  bool try_place(std::size_t i, Vertex h) {
    const Vertex p = plan.order[i];
    if (test_bit(used, h)) return false;
    if (host_degree[static_cast<std::size_t>(h)] < plan.degree[static_cast<std::size_t>(p)]) return false;
    for (Vertex w : plan.constraints[i]) {
      if (!host.has_edge(h, image[static_cast<std::size_t>(w)])) return false;
    }
    image[static_cast<std::size_t>(p)] = h;
    set_bit(used, h);
    if (place(i + 1)) return true;
    clear_bit(used, h);
    image[static_cast<std::size_t>(p)] = -1;
    return false;
  }

  bool place(std::size_t i) {
    if (i == plan.order.size()) return true;
    const Vertex par = plan.parent[static_cast<std::size_t>(plan.order[i])];
    if (par < 0) {
      for (Vertex h = 0; h < host.vertex_count(); ++h) {
        if (try_place(i, h)) return true;
      }
      return false;
    }
    auto row = host.row(image[static_cast<std::size_t>(par)]);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (std::uint64_t bits = row[w] & ~used[w]; bits != 0; bits &= bits - 1) {
        if (try_place(i, static_cast<Vertex>(w * 64 + std::countr_zero(bits)))) return true;
      }
    }
    return false;
  }
};

}  // namespace

std::string describe(const Pattern& pattern) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CliquePattern>) {
          return "K" + std::to_string(p.size);
        } else if constexpr (std::is_same_v<T, Tree>) {
          return "tree(" + p.spec() + ")";
        } else {
          std::string out = "graph(" + std::to_string(p.vertex_count()) + ";";
          bool first = true;
          for (const Edge& e : p.edges()) {
            out += first ? " " : ",";
            out += std::to_string(e.u) + "-" + std::to_string(e.v);
            first = false;
          }
          return out + ")";
        }
      },
      pattern);
}

int pattern_vertex_count(const Pattern& pattern) {
  return std::visit(
      [](const auto& p) -> int {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CliquePattern>) {
          return p.size;
        } else {
          return p.vertex_count();
        }
      },
      pattern);
}

bool is_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
  if (static_cast<int>(e.mapping.size()) != pattern.vertex_count()) return false;
  std::vector<Vertex> sorted = e.mapping;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex h : sorted) {
    if (h < 0 || h >= host.vertex_count()) return false;
  }
  for (const Edge& pe : pattern.edges()) {
    if (!host.has_edge(e.mapping[static_cast<std::size_t>(pe.u)],
                       e.mapping[static_cast<std::size_t>(pe.v)])) {
      return false;
    }
  }
  return true;
}

std::optional<Embedding> contains_clique(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be >= 1");
  if (k > g.vertex_count()) return std::nullopt;
  Words all(g.words_per_row(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) set_bit(all, v);
  CliqueSearch search{g, k, {}};
  if (search.extend(all)) return Embedding{search.chosen};
  return std::nullopt;
}

std::optional<Embedding> contains_subgraph(const Graph& g, const Graph& pattern) {
  if (pattern.vertex_count() > g.vertex_count()) return std::nullopt;
  if (pattern.vertex_count() == 0) return Embedding{};
  Embedder embedder(g, pattern);
  if (embedder.place(0)) return Embedding{embedder.image};
  return std::nullopt;
}

std::optional<Embedding> contains_tree(const Graph& g, const Tree& tree) {
  return contains_subgraph(g, tree.graph());
}

std::optional<Embedding> find_pattern(const Graph& g, const Pattern& pattern) {
  return std::visit(
      [&](const auto& p) -> std::optional<Embedding> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CliquePattern>) {
          return contains_clique(g, p.size);
        } else if constexpr (std::is_same_v<T, Tree>) {
          return contains_tree(g, p);
        } else {
          return contains_subgraph(g, p);
        }
      },
      pattern);
}

std::optional<PartSpec> is_complete_multipartite(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  PartSpec spec;
  for (const auto& comp : components(g.complement())) {
    const int k = comp.graph.vertex_count();
    if (comp.graph.edge_count() != k * (k - 1) / 2) return std::nullopt;
    spec.part_sizes.push_back(k);
  }
  return spec;
}

bool is_r_partite(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("is_r_partite needs r >= 1");
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  auto assign = [&](auto&& self, Vertex v, int used) -> bool {
    if (v == n) return true;
    // Colours beyond the first unused one are symmetric; try one of them.
    for (int c = 0; c < std::min(r, used + 1); ++c) {
      bool ok = true;
      for (Vertex w : g.neighbors(v)) {
        if (w < v && colour[static_cast<std::size_t>(w)] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colour[static_cast<std::size_t>(v)] = c;
      if (self(self, v + 1, std::max(used, c + 1))) return true;
    }
    colour[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  return assign(assign, 0, 0);
}

std::vector<Component> components(const Graph& g) {
  std::vector<Component> out;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> members{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex w : g.neighbors(members[head])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    Graph sub = g.induced(members);
    out.push_back({std::move(sub), std::move(members)});
  }
  return out;
}

}  // namespace regexlab
