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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "regexlab/graph.hpp"
#include "regexlab/patterns.hpp"
#include "regexlab/trees.hpp"
#include "support/reference.hpp"

namespace regexlab {
namespace {

TEST(ContainsClique, Examples) {
  const auto k4 = contains_clique(make_complete(4), 4);
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->mapping, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(contains_clique(make_turan(12, 4).graph, 5));
  EXPECT_FALSE(contains_clique(make_cycle(5), 3));
  EXPECT_TRUE(contains_clique(make_empty(3), 1));
  EXPECT_FALSE(contains_clique(Graph(0), 1));
  EXPECT_THROW(contains_clique(make_cycle(5), 0), std::invalid_argument);
}

TEST(ContainsClique, LexLeast) {
  // Two triangles {1,2,3} and {0,4,5}; {0,4,5} is lexicographically smaller.
  Graph g(6);
  for (auto [u, v] : {std::pair{1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}}) g.add_edge(u, v);
  EXPECT_EQ(contains_clique(g, 3)->mapping, (std::vector<Vertex>{0, 4, 5}));
}

TEST(ContainsClique, AgreesWithSubsetSearch) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 10;
    const Graph g = reference::random_graph(n, 0.3 + 0.5 * (trial % 7) / 6.0, rng);
    const auto m = reference::to_matrix(g);
    for (int k = 1; k <= n; ++k) {
      const auto found = contains_clique(g, k);
      ASSERT_EQ(found.has_value(), reference::has_clique(m, k)) << trial << " k=" << k;
      if (found) EXPECT_TRUE(is_embedding(g, make_complete(k), *found));
    }
  }
}

TEST(ContainsTree, Examples) {
  for (const Tree& t : {make_path(5), make_star(5), make_A(5), make_double_star(1, 2)}) {
    EXPECT_FALSE(contains_tree(make_complete(t.vertex_count() - 1), t)) << t.spec();
  }
  EXPECT_FALSE(contains_tree(make_complete_multipartite({{3, 3}}), make_A(6)));
  EXPECT_TRUE(contains_tree(make_complete_multipartite({{3, 3}}), make_path(6)));
  // More pattern vertices than host vertices is simply absent.
  EXPECT_FALSE(contains_tree(make_complete(3), make_path(6)));
}

TEST(ContainsTree, EmbeddingIsValid) {
  const Graph host = make_turan(10, 3).graph;
  const Tree t = make_double_star(3, 2);
  const auto e = contains_tree(host, t);
  ASSERT_TRUE(e);
  EXPECT_TRUE(is_embedding(host, t.graph(), *e));
}

std::vector<Tree> sample_trees() {
  return {make_path(4), make_path(5), make_path(6), make_star(5), make_star(6), make_A(6),
          make_A(7), make_double_star(2, 2), make_double_star(1, 3),
          Tree::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}})};
}

TEST(ContainsTree, AgreesWithReference) {
  std::mt19937 rng(99);
  const auto trees = sample_trees();
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = reference::random_graph(5 + trial % 4, 0.35 + 0.05 * (trial % 5), rng);
    const auto m = reference::to_matrix(g);
    for (const Tree& t : trees) {
      ASSERT_EQ(contains_tree(g, t).has_value(), reference::contains(m, reference::to_matrix(t.graph())))
          << trial << " " << t.spec();
    }
  }
}

TEST(ContainsTree, MonotoneUnderEdgeAddition) {
  std::mt19937 rng(17);
  const auto trees = sample_trees();
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = reference::random_graph(10, 0.25, rng);
    const Graph base = g;
    for (int extra = 0; extra < 6; ++extra) g.add_edge(static_cast<int>(rng() % 5), 5 + static_cast<int>(rng() % 5));
    for (const Tree& t : trees) {
      if (contains_tree(base, t)) EXPECT_TRUE(contains_tree(g, t)) << t.spec();
    }
  }
}

TEST(ContainsTree, MinimumDegreeForcesEveryTree) {
  std::mt19937 rng(41);
  const auto trees = sample_trees();
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 150; ++trial) {
    const int n = 7 + trial % 9;
    const Graph g = reference::random_graph(n, 0.6, rng);
    for (const Tree& t : trees) {
      if (degree_profile(g).min < t.vertex_count() - 1) continue;
      ++checked;
      const auto e = contains_tree(g, t);
      ASSERT_TRUE(e) << t.spec();
      EXPECT_TRUE(is_embedding(g, t.graph(), *e));
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(ContainsSubgraph, Forests) {
  const std::vector<Graph> p4s{make_path(4).graph(), make_path(4).graph()};
  const Graph forest = disjoint_union(p4s);
  const std::vector<Graph> c3c5{make_cycle(3), make_cycle(3), make_cycle(5)};
  EXPECT_FALSE(contains_subgraph(disjoint_union(c3c5), forest));
  EXPECT_TRUE(contains_subgraph(make_cycle(8), forest));
  EXPECT_FALSE(contains_subgraph(make_cycle(7), forest));
}

TEST(CompleteMultipartite, Recognition) {
  EXPECT_EQ(is_complete_multipartite(make_complete_multipartite({{3, 3}}))->part_sizes, (std::vector<int>{3, 3}));
  EXPECT_FALSE(is_complete_multipartite(make_cycle(5)));
  EXPECT_EQ(is_complete_multipartite(make_complete_multipartite({{2, 2, 2}}))->part_sizes,
            (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(is_complete_multipartite(make_empty(4))->part_sizes, (std::vector<int>{4}));
}

TEST(CompleteMultipartite, RecognisedShapeIsIsomorphic) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<int> parts;
    for (int left = 2 + static_cast<int>(rng() % 11); left > 0;) {
      const int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(left));
      parts.push_back(size);
      left -= size;
    }
    std::vector<int> perm(static_cast<std::size_t>(std::accumulate(parts.begin(), parts.end(), 0)));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph g = reference::relabel(make_complete_multipartite({parts}), perm);
    const auto found = is_complete_multipartite(g);
    ASSERT_TRUE(found);
    auto a = found->part_sizes;
    auto b = parts;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
    EXPECT_EQ(make_complete_multipartite(*found).edge_count(), g.edge_count());
  }
}

TEST(RPartite, Examples) {
  EXPECT_FALSE(is_r_partite(make_cycle(5), 2));
  EXPECT_TRUE(is_r_partite(make_cycle(5), 3));
  EXPECT_FALSE(is_r_partite(make_complete(4), 3));
  EXPECT_TRUE(is_r_partite(make_turan(11, 4).graph, 4));
  EXPECT_THROW(is_r_partite(make_cycle(5), 0), std::invalid_argument);
}

TEST(RPartite, AgreesWithColouringSearch) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = reference::random_graph(4 + trial % 4, 0.5, rng);
    const auto m = reference::to_matrix(g);
    for (int r = 1; r <= 3; ++r) {
      EXPECT_EQ(is_r_partite(g, r), reference::is_r_colourable(m, r)) << trial << " r=" << r;
    }
  }
}

TEST(Components, Examples) {
  const std::vector<Graph> kk{make_complete(4), make_complete(4)};
  auto comps = components(disjoint_union(kk));
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[1].vertices, (std::vector<Vertex>{4, 5, 6, 7}));
  EXPECT_EQ(comps[1].graph, make_complete(4));

  EXPECT_EQ(components(make_empty(3)).size(), 3U);

  const std::vector<Graph> c34{make_cycle(3), make_cycle(4)};
  comps = components(disjoint_union(c34));
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0].graph, make_cycle(3));
  EXPECT_EQ(comps[1].graph, make_cycle(4));
}

TEST(Describe, Patterns) {
  EXPECT_EQ(describe(CliquePattern{5}), "K5");
  EXPECT_EQ(describe(make_path(6)), "tree(path:6)");
  EXPECT_EQ(pattern_vertex_count(make_star(4)), 4);
}

}  // namespace
}  // namespace regexlab
