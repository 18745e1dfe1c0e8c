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
#include <set>

#include "regexlab/constructions.hpp"
#include "regexlab/errors.hpp"
#include "regexlab/graph6.hpp"
#include "regexlab/oracle.hpp"
#include "support/reference.hpp"

namespace regexlab {
namespace {

Graph union_of(std::vector<Graph> parts) { return disjoint_union(parts); }

Graph prism() {
  Graph g(6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}) g.add_edge(u, v);
  return g;
}

TEST(Exists, ParityGuardSkipsSearch) {
  for (const Pattern& f : {Pattern{CliquePattern{3}}, Pattern{make_path(5)}}) {
    SearchStats stats;
    EXPECT_FALSE(exists_regular_free({7, 3, f}, {}, &stats));
    EXPECT_EQ(stats.nodes, 0U);
  }
}

TEST(Exists, TwoK4IsTheOnlyCubicP5FreeGraphOnEight) {
  const auto g = exists_regular_free({8, 3, make_path(5)});
  ASSERT_TRUE(g);
  EXPECT_EQ(*g, union_of({make_complete(4), make_complete(4)}));
}

TEST(Exists, TriangleFreeTwoRegular) {
  const auto g = exists_regular_free({9, 2, CliquePattern{3}});
  ASSERT_TRUE(g);
  EXPECT_TRUE(verify(*g, CliquePattern{3}, 2).valid());
}

TEST(Exists, DegreeRange) {
  EXPECT_FALSE(exists_regular_free({5, 5, CliquePattern{3}}));
  EXPECT_EQ(*exists_regular_free({5, 0, CliquePattern{3}}), make_empty(5));
  EXPECT_THROW(exists_regular_free({5, -1, CliquePattern{3}}), std::invalid_argument);
}

TEST(Exists, PatternValidation) {
  EXPECT_THROW(exists_regular_free({6, 2, CliquePattern{1}}), std::invalid_argument);
  EXPECT_THROW(exists_regular_free({6, 2, make_empty(3)}), std::invalid_argument);
  EXPECT_FALSE(exists_regular_free({6, 2, CliquePattern{2}}));
}

TEST(Exists, Refusal) {
  try {
    exists_regular_free({15, 2, CliquePattern{3}});
    FAIL() << "expected refusal";
  } catch (const OracleRefusal& e) {
    EXPECT_EQ(e.requested(), 15);
    EXPECT_EQ(e.bound(), kDefaultSearchBound);
  }
  SearchOptions wide;
  wide.max_n = 20;
  EXPECT_TRUE(exists_regular_free({15, 2, CliquePattern{3}}, wide));
  wide.max_n = 1000;
  try {
    exists_regular_free({65, 2, CliquePattern{3}}, wide);
    FAIL() << "expected refusal";
  } catch (const OracleRefusal& e) {
    EXPECT_EQ(e.bound(), kSearchHardLimit);
  }
}

TEST(Exists, ForestPattern) {
  const Graph forest = union_of({make_path(4).graph(), make_path(4).graph()});
  const auto g = exists_regular_free({11, 2, forest});
  ASSERT_TRUE(g);
  EXPECT_TRUE(verify(*g, forest, 2).valid());
  EXPECT_TRUE(exists_regular_free({8, 2, forest}));  // C_3 + C_5
  const Graph two_p3 = union_of({make_path(3).graph(), make_path(3).graph()});
  EXPECT_FALSE(exists_regular_free({6, 2, two_p3}));
}

TEST(RegexOracle, Examples) {
  auto r = regex_oracle(5, CliquePattern{3});
  EXPECT_EQ(r.value, 2);
  EXPECT_TRUE(verify(r.witness, CliquePattern{3}, 2).valid());
  EXPECT_EQ(regex_oracle(9, CliquePattern{4}).value, 6);
  EXPECT_EQ(regex_oracle(9, make_path(4)).value, 2);
  r = regex_oracle(7, make_path(3));
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.witness, make_empty(7));
}

TEST(RegexOracle, AtLeastEveryCertifiedWitness) {
  for (int n = 6; n <= 11; ++n) {
    for (const Tree& t : {make_path(4), make_path(5), make_star(5), make_A(6)}) {
      if (n < t.vertex_count()) continue;
      const auto formula = regex_tree(n, t);
      try {
        if (!tree_witness(n, t, static_cast<int>(formula.value)).valid()) continue;
      } catch (const ConstructionInfeasible&) {
        continue;
      }
      EXPECT_GE(regex_oracle(n, t).value, formula.value) << t.spec() << " n=" << n;
    }
  }
}

TEST(Enumerate, CubicP5FreeOnEight) {
  const auto all = enumerate_regular_free({8, 3, make_path(5), SearchMode::enumerate});
  // 8! / (2 * 4! * 4!) ways to split the labels into two K_4's.
  EXPECT_EQ(all.size(), 35U);
  const Graph two_k4 = union_of({make_complete(4), make_complete(4)});
  for (const Graph& g : all) EXPECT_TRUE(are_isomorphic(g, two_k4));

  SearchOptions dedup;
  dedup.dedup_isomorphic = true;
  EXPECT_EQ(enumerate_regular_free({8, 3, make_path(5), SearchMode::enumerate}, dedup).size(), 1U);
}

TEST(Enumerate, CubicA6FreeOnSix) {
  const auto all = enumerate_regular_free({6, 3, make_A(6), SearchMode::enumerate});
  const Graph k33 = make_complete_multipartite({{3, 3}});
  EXPECT_EQ(all.size(), 10U);
  bool has_k33 = false;
  for (const Graph& g : all) {
    has_k33 = has_k33 || g == k33;
    EXPECT_TRUE(are_isomorphic(g, k33));
    EXPECT_FALSE(are_isomorphic(g, prism()));
  }
  EXPECT_TRUE(has_k33);
}

TEST(Enumerate, K4IsTheOnlyCubicGraphOnFour) {
  const auto all = enumerate_regular_free({4, 3, CliquePattern{5}, SearchMode::enumerate});
  ASSERT_EQ(all.size(), 1U);
  EXPECT_EQ(all[0], make_complete(4));
}

// Labelled d-regular F-free graphs must match a plain sweep over every edge
// subset.
TEST(Enumerate, MatchesExhaustiveSweep) {
  const std::vector<Pattern> patterns{CliquePattern{3}, CliquePattern{4}, make_path(4), make_path(5),
                                      make_star(4), make_A(6), union_of({make_path(3).graph(), make_path(3).graph()})};
  for (int n = 3; n <= 7; ++n) {
    for (int d = 0; d < n; ++d) {
      if (n * d % 2 != 0) continue;
      const auto regular = reference::regular_graphs(n, d, [](const reference::Matrix&) { return true; });
      for (const Pattern& f : patterns) {
        const Graph pattern_graph = std::holds_alternative<CliquePattern>(f)
                                        ? make_complete(std::get<CliquePattern>(f).size)
                                    : std::holds_alternative<Tree>(f) ? std::get<Tree>(f).graph()
                                                                      : std::get<Graph>(f);
        const auto pm = reference::to_matrix(pattern_graph);
        std::set<std::string> expected;
        for (const auto& m : regular) {
          if (!reference::contains(m, pm)) expected.insert(reference::graph6(m));
        }
        const auto found = enumerate_regular_free({n, d, f, SearchMode::enumerate});
        std::set<std::string> got;
        for (const Graph& g : found) got.insert(encode_graph6(g));
        EXPECT_EQ(got.size(), found.size()) << "duplicates n=" << n << " d=" << d;
        EXPECT_EQ(got, expected) << "n=" << n << " d=" << d << " " << describe(f);

        const auto first = exists_regular_free({n, d, f});
        EXPECT_EQ(first.has_value(), !expected.empty());
      }
    }
  }
}

TEST(Parallel, SameAnswersAsSerial) {
  struct Case {
    int n;
    int d;
    Pattern f;
  };
  const std::vector<Case> cases{{10, 3, make_A(6)}, {8, 5, CliquePattern{4}}, {12, 3, make_path(5)},
                                {10, 3, make_path(6)}, {11, 6, CliquePattern{4}}, {13, 8, CliquePattern{4}}};
  for (const auto& c : cases) {
    const SearchSpec spec{c.n, c.d, c.f, SearchMode::enumerate};
    // The dense K4 cases have too many labelled graphs to list.
    const bool list = c.n <= 12 && c.d <= 5;
    const auto serial_all = list ? enumerate_regular_free(spec) : std::vector<Graph>{};
    const auto serial_one = exists_regular_free(spec);
    for (int workers : {2, 3}) {
      for (int split : {1, 2, 3}) {
        SearchOptions options;
        options.workers = workers;
        options.split_rows = split;
        SearchStats stats;
        if (list) EXPECT_EQ(enumerate_regular_free(spec, options, &stats), serial_all) << c.n << " " << describe(c.f);
        EXPECT_EQ(exists_regular_free(spec, options, &stats), serial_one) << c.n << " " << describe(c.f);
        EXPECT_GT(stats.tasks, 0U);
      }
    }
  }
}

TEST(Exists, WitnessIsLeastInRowOrder) {
  // The least labelled witness must precede every enumerated graph when rows
  // are compared as sorted neighbour lists.
  auto key = [](const Graph& g) {
    std::vector<std::vector<Vertex>> rows;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::vector<Vertex> row;
      for (Vertex w : g.neighbors(v)) {
        if (w > v) row.push_back(w);
      }
      rows.push_back(row);
    }
    return rows;
  };
  for (const auto& [n, d, f] : std::vector<std::tuple<int, int, Pattern>>{
           {8, 3, make_A(6)}, {8, 5, CliquePattern{4}}, {10, 3, make_path(6)}, {7, 4, CliquePattern{4}}}) {
    const auto all = enumerate_regular_free({n, d, f, SearchMode::enumerate});
    const auto one = exists_regular_free({n, d, f});
    ASSERT_EQ(one.has_value(), !all.empty());
    if (!one) continue;
    const auto least = std::min_element(all.begin(), all.end(), [&](const Graph& a, const Graph& b) {
      return key(a) < key(b);
    });
    EXPECT_EQ(*one, *least);
  }
}

TEST(Shapes, Examples) {
  auto report = classify_components_shape(union_of({make_complete(4), make_complete(4)}), 5);
  ASSERT_EQ(report.components.size(), 2U);
  EXPECT_TRUE(report.only({ComponentShape::clique_t_minus_1}));

  report = classify_components_shape(union_of({make_complete(4), make_complete_multipartite({{3, 3}})}), 6);
  ASSERT_EQ(report.components.size(), 2U);
  EXPECT_EQ(report.components[0].shape, ComponentShape::clique_t_minus_2);
  EXPECT_EQ(report.components[1].shape, ComponentShape::biclique_t_minus_3);
  EXPECT_TRUE(report.all_classified());

  report = classify_components_shape(make_cycle(5), 5);
  EXPECT_FALSE(report.all_classified());
  EXPECT_EQ(report.components[0].shape, ComponentShape::unclassified);

  report = classify_components_shape(make_complete_multipartite({{2, 2, 2, 2}}), 9);
  EXPECT_EQ(report.components[0].shape, ComponentShape::balanced_multipartite);
  EXPECT_EQ(report.components[0].parts, 4);
  EXPECT_EQ(to_string(ComponentShape::biclique_t_minus_3), "K_{t-3,t-3}");
}

TEST(Isomorphism, RelabelledGraphsMatch) {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 12;
    const Graph g = reference::random_graph(n, 0.4, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = reference::relabel(g, perm);
    EXPECT_TRUE(are_isomorphic(g, h));
    EXPECT_EQ(invariant_hash(g), invariant_hash(h));
  }
}

TEST(Isomorphism, DistinguishesCubicGraphsOnSix) {
  EXPECT_FALSE(are_isomorphic(prism(), make_complete_multipartite({{3, 3}})));
  EXPECT_FALSE(are_isomorphic(make_cycle(6), union_of({make_cycle(3), make_cycle(3)})));
  EXPECT_FALSE(are_isomorphic(make_cycle(6), make_cycle(5)));
}

}  // namespace
}  // namespace regexlab
