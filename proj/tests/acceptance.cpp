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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "regexlab/constructions.hpp"
#include "regexlab/errors.hpp"
#include "regexlab/graph6.hpp"
#include "regexlab/oracle.hpp"
#include "support/reference.hpp"

namespace regexlab {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Notes {
 public:
  void fail(const std::string& what) {
    pass_ = false;
    if (failures_++ < 5) add(what);
  }
  void add(const std::string& what) {
    if (!text_.empty()) text_ += "; ";
    text_ += what;
  }
  Outcome outcome() const {
    std::string detail = text_;
    if (failures_ > 5) detail += "; ... " + std::to_string(failures_ - 5) + " more";
    return {pass_, detail};
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::string text_;
};

// 1. Every clique witness for r in {4,5,6}, q in {2..6} verifies at the
//    formula degree; infeasibility is allowed only below the smallest q at
//    which that case first succeeds.
Outcome clique_certification() {
  Notes notes;
  std::map<std::pair<int, CaseTag>, int> min_q;
  std::map<std::pair<int, CaseTag>, std::vector<int>> infeasible_q;
  int built = 0;
  for (int r = 4; r <= 6; ++r) {
    for (int q = 2; q <= 6; ++q) {
      for (int s = 0; s < r; ++s) {
        const int n = q * r + s;
        if (n > 45) continue;
        const auto target = regex_clique(n, r);
        const auto key = std::pair{r, target.tag};
        try {
          const auto cert = clique_witness(n, r);
          if (!cert.valid() || cert.claimed_degree != target.value) {
            notes.fail("invalid certificate " + to_text(cert));
            continue;
          }
          ++built;
          if (!min_q.count(key)) min_q[key] = q;
        } catch (const ConstructionInfeasible& e) {
          infeasible_q[key].push_back(q);
        }
      }
    }
  }
  for (const auto& [key, qs] : infeasible_q) {
    for (int q : qs) {
      auto it = min_q.find(key);
      if (it == min_q.end() || q > it->second) {
        notes.fail("r=" + std::to_string(key.first) + " " + to_string(key.second) + " infeasible at q=" +
                   std::to_string(q));
      }
    }
  }
  notes.add(std::to_string(built) + " witnesses verified");
  std::string minima;
  for (const auto& [key, q] : min_q) {
    if (key.second == CaseTag::T2_i || key.second == CaseTag::T2_ii || key.second == CaseTag::T2_iii) {
      minima += " r=" + std::to_string(key.first) + "/" + to_string(key.second) + ":q>=" + std::to_string(q);
    }
  }
  notes.add("smallest working q for T2 cases:" + minima);
  return notes.outcome();
}

// 2. regex(n, K_4) = 2*floor(n/3) for n = 6..11 by exhaustive search.
Outcome k4_oracle() {
  Notes notes;
  for (int n = 6; n <= 11; ++n) {
    const auto r = regex_oracle(n, CliquePattern{4});
    const int expected = 2 * (n / 3);
    if (r.value != expected) {
      notes.fail("n=" + std::to_string(n) + ": oracle " + std::to_string(r.value) + " (witness " +
                 encode_graph6(r.witness) + "), expected " + std::to_string(expected));
    }
  }
  return notes.outcome();
}

// 3. Exact tree values on small n.
Outcome tree_oracle() {
  Notes notes;
  const std::vector<std::tuple<int, Tree, int>> cases{{9, make_path(4), 2}, {7, make_path(5), 2},
                                                      {8, make_path(5), 3}, {7, make_star(5), 2},
                                                      {8, make_star(5), 3}, {14, make_path(6), 2}};
  for (const auto& [n, tree, expected] : cases) {
    const auto formula = regex_tree(n, tree).value;
    const auto oracle = regex_oracle(n, tree).value;
    if (formula != expected || oracle != expected) {
      notes.fail("(" + std::to_string(n) + ", " + tree.spec() + "): formula " + std::to_string(formula) +
                 ", oracle " + std::to_string(oracle) + ", expected " + std::to_string(expected));
    }
  }
  notes.add(std::to_string(cases.size()) + " cases");
  return notes.outcome();
}

void check_shapes(Notes& notes, int n, const Tree& tree, int t, std::initializer_list<ComponentShape> allowed,
                  std::string& summary) {
  const auto graphs = enumerate_regular_free({n, 3, tree, SearchMode::enumerate});
  int bad = 0;
  for (const auto& g : graphs) {
    if (!classify_components_shape(g, t).only(allowed)) ++bad;
  }
  if (bad > 0) notes.fail(tree.spec() + " n=" + std::to_string(n) + ": " + std::to_string(bad) + " unclassified");
  summary += " " + tree.spec() + "/" + std::to_string(n) + ":" + std::to_string(graphs.size());
}

// 4. Cubic P_5-free graphs are unions of K_4.
Outcome lemma6_structure() {
  Notes notes;
  std::string summary = "labelled counts";
  for (int n : {8, 12}) check_shapes(notes, n, make_path(5), 5, {ComponentShape::clique_t_minus_1}, summary);
  notes.add(summary);
  return notes.outcome();
}

// 5. Cubic A_6-free graphs are unions of K_4 and K_{3,3}; cubic P_6-free
//    graphs are unions of K_4.
Outcome lemma7_structure() {
  Notes notes;
  std::string summary = "labelled counts";
  for (int n : {6, 8, 10}) {
    check_shapes(notes, n, make_A(6), 6, {ComponentShape::clique_t_minus_2, ComponentShape::biclique_t_minus_3},
                 summary);
    check_shapes(notes, n, make_path(6), 6, {ComponentShape::clique_t_minus_2}, summary);
  }
  notes.add(summary);
  return notes.outcome();
}

Graph paths(std::initializer_list<int> orders) {
  std::vector<Graph> parts;
  for (int k : orders) parts.push_back(make_path(k).graph());
  return disjoint_union(parts);
}

// 6. Zero-degree classifier verdicts and 2-regular witnesses.
Outcome prop4_suite() {
  Notes notes;
  const std::vector<std::tuple<std::string, Graph, bool>> cases{{"P2+P3+P3", paths({2, 3, 3}), true},
                                                                {"P3+P4", paths({3, 4}), true},
                                                                {"P4+P4", paths({4, 4}), false},
                                                                {"K1,3", make_star(4).graph(), false},
                                                                {"P5", paths({5}), false}};
  int witnesses = 0;
  for (const auto& [name, forest, expected] : cases) {
    if (prop4_infinitely_zero(forest) != expected) notes.fail(name + ": wrong verdict");
    if (expected) continue;
    for (int n = 7; n <= 30; ++n) {
      try {
        const auto cert = zero_witness(n, forest);
        const bool ok = cert.valid() && cert.graph.edge_count() >= 1 &&
                        !reference::contains(reference::to_matrix(cert.graph), reference::to_matrix(forest));
        if (!ok) notes.fail(name + " n=" + std::to_string(n) + ": " + to_text(cert));
        ++witnesses;
      } catch (const std::exception& e) {
        notes.fail(name + " n=" + std::to_string(n) + ": " + e.what());
      }
    }
  }
  notes.add(std::to_string(witnesses) + " witnesses verified");
  return notes.outcome();
}

// 7. Every graph on 7 vertices: K_{r+1}-free and not r-partite implies at
//    most t(7,r) - floor(7/r) + 1 edges, for r = 3 and r = 2.
Outcome brouwer_property() {
  Notes notes;
  constexpr int n = 7;
  const auto pairs = reference::pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::string summary;
  for (int r : {3, 2}) {
    const auto bound = brouwer_bound(n, r);
    std::uint64_t examined = 0;
    int densest = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const int edges = std::popcount(mask);
      // Cannot raise the maximum seen so far.
      if (edges <= densest) continue;
      Graph g(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
      }
      ++examined;
      if (contains_clique(g, r + 1) || is_r_partite(g, r)) continue;
      densest = edges;
      if (edges > bound) notes.fail("r=" + std::to_string(r) + ": " + encode_graph6(g) + " has " +
                                    std::to_string(edges) + " edges");
    }
    summary += (summary.empty() ? "" : ", ") + std::string("r=") + std::to_string(r) + ": bound " +
               std::to_string(bound) + ", densest " + std::to_string(densest) + " over " +
               std::to_string(examined) + " candidates";
  }
  notes.add(summary + " (" + std::to_string(total) + " graphs)");
  return notes.outcome();
}

// 8. Hamiltonian cycles on random Dirac graphs.
Outcome dirac_constructor() {
  Notes notes;
  std::mt19937 rng(20260101);
  int checked = 0;
  for (int n = 6; n <= 14; ++n) {
    std::uniform_real_distribution<double> density(0.5, 0.9);
    for (int found = 0; found < 200;) {
      const Graph g = reference::random_graph(n, density(rng), rng);
      if (2 * degree_profile(g).min < n) continue;
      ++found;
      ++checked;
      try {
        const auto cycle = hamiltonian_cycle(g);
        if (!reference::is_hamiltonian_cycle(reference::to_matrix(g), cycle)) {
          notes.fail("rejected cycle on " + encode_graph6(g));
        }
      } catch (const std::exception& e) {
        notes.fail(encode_graph6(g) + ": " + e.what());
      }
    }
  }
  notes.add(std::to_string(checked) + " graphs");
  return notes.outcome();
}

// 9. Odd n*d returns nothing without expanding a node.
Outcome parity_guards() {
  Notes notes;
  int queries = 0;
  for (int n = 1; n <= 14; ++n) {
    for (int d = 1; d < n; ++d) {
      if (n * d % 2 == 0) continue;
      for (const Pattern& f : {Pattern{CliquePattern{3}}, Pattern{make_path(5)}}) {
        SearchStats stats;
        const auto g = exists_regular_free({n, d, f}, {}, &stats);
        ++queries;
        if (g || stats.nodes != 0) {
          notes.fail("n=" + std::to_string(n) + " d=" + std::to_string(d) + ": nodes " + std::to_string(stats.nodes));
        }
      }
    }
  }
  notes.add(std::to_string(queries) + " queries");
  return notes.outcome();
}

// 10. graph6 round trip, byte exact.
Outcome graph6_round_trip() {
  Notes notes;
  std::mt19937 rng(606);
  std::uniform_int_distribution<int> size(0, 20);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = reference::random_graph(size(rng), density(rng), rng);
    const std::string bytes = encode_graph6(g);
    const Graph back = decode_graph6(bytes);
    if (!(back == g) || encode_graph6(back) != bytes || bytes != reference::graph6(reference::to_matrix(g))) {
      notes.fail("mismatch on " + bytes);
    }
  }
  notes.add("1000 graphs");
  return notes.outcome();
}

}  // namespace
}  // namespace regexlab

int main() {
  using namespace regexlab;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 clique witness certification", clique_certification},
      {"2 K4 oracle equals 2*floor(n/3), n=6..11", k4_oracle},
      {"3 tree oracle equalities", tree_oracle},
      {"4 cubic P5-free graphs are unions of K4", lemma6_structure},
      {"5 cubic A6-free / P6-free component shapes", lemma7_structure},
      {"6 zero-degree classifier and witnesses", prop4_suite},
      {"7 Brouwer bound on all 7-vertex graphs", brouwer_property},
      {"8 Dirac Hamiltonian cycles", dirac_constructor},
      {"9 parity guards expand no nodes", parity_guards},
      {"10 graph6 round trip", graph6_round_trip},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " (" << timing << ")"
              << (o.detail.empty() ? "" : ": " + o.detail) << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
