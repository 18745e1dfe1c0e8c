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

#include "regexlab/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "regexlab/errors.hpp"

namespace regexlab {

namespace {

using Groups = std::vector<std::vector<Vertex>>;

// Perfect matching across groups: repeatedly pair the fronts of the two
// largest groups (lowest index on ties).
std::vector<Edge> match_groups(Groups groups) {
  std::size_t total = 0;
  std::size_t largest = 0;
  for (const auto& g : groups) {
    total += g.size();
    largest = std::max(largest, g.size());
  }
  if (total % 2 != 0) throw PreconditionError("matching needs an even number of vertices");
  if (2 * largest > total) throw PreconditionError("matching needs every part to be at most half");

  for (auto& g : groups) std::reverse(g.begin(), g.end());  // pop from the back
  std::vector<Edge> out;
  while (out.size() * 2 < total) {
    std::size_t a = groups.size();
    std::size_t b = groups.size();
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (groups[i].empty()) continue;
      if (a == groups.size() || groups[i].size() > groups[a].size()) {
        b = a;
        a = i;
      } else if (b == groups.size() || groups[i].size() > groups[b].size()) {
        b = i;
      }
    }
    out.emplace_back(groups[a].back(), groups[b].back());
    groups[a].pop_back();
    groups[b].pop_back();
  }
  return out;
}

Groups turan_groups(const PartSpec& parts, std::size_t begin, std::size_t end) {
  Groups out;
  for (std::size_t i = begin; i < end; ++i) {
    std::vector<Vertex> g;
    const int off = parts.offset(i);
    for (int k = 0; k < parts.part_sizes[i]; ++k) g.push_back(off + k);
    out.push_back(std::move(g));
  }
  return out;
}

// Takes `count` vertices round-robin over the groups (ascending group index,
// lowest remaining label in each). The picked vertices are removed from
// `groups`.
std::vector<Vertex> round_robin_pick(Groups& groups, std::size_t count, const std::string& step) {
  std::vector<Vertex> picked;
  std::vector<std::size_t> next(groups.size(), 0);
  while (picked.size() < count) {
    bool progressed = false;
    for (std::size_t i = 0; i < groups.size() && picked.size() < count; ++i) {
      if (next[i] < groups[i].size()) {
        picked.push_back(groups[i][next[i]++]);
        progressed = true;
      }
    }
    if (!progressed) {
      throw ConstructionInfeasible(step, "not enough vertices to pick " + std::to_string(count) +
                                             " distinct endpoints");
    }
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    groups[i].erase(groups[i].begin(), groups[i].begin() + static_cast<std::ptrdiff_t>(next[i]));
  }
  return picked;
}

std::vector<Vertex> flatten(const Groups& groups) {
  std::vector<Vertex> out;
  for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Hamiltonian cycle of host[vertices], in host labels.
std::vector<Vertex> host_cycle(const Graph& host, const std::vector<Vertex>& vertices,
                               const std::string& step) {
  const Graph sub = host.induced(vertices);
  std::vector<Vertex> local;
  try {
    local = hamiltonian_cycle(sub);
  } catch (const PreconditionError& e) {
    throw ConstructionInfeasible(step, e.what());
  }
  std::vector<Vertex> out;
  for (Vertex v : local) out.push_back(vertices[static_cast<std::size_t>(v)]);
  return out;
}

void append_cycle(std::vector<Edge>& edges, const std::vector<Vertex>& cycle) {
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
}

void remove_full_cycle(std::vector<Edge>& edges, const Graph& host,
                       const std::vector<Vertex>& vertices, const std::string& step) {
  if (vertices.empty()) return;
  append_cycle(edges, host_cycle(host, vertices, step));
}

// Every other edge of a Hamiltonian cycle: a perfect matching on `vertices`.
void remove_alternate_edges(std::vector<Edge>& edges, const Graph& host,
                            const std::vector<Vertex>& vertices, const std::string& step) {
  if (vertices.empty()) return;
  if (vertices.size() % 2 != 0) {
    throw ConstructionInfeasible(step, "alternate edges need an even cycle, got " +
                                           std::to_string(vertices.size()) + " vertices");
  }
  if (vertices.size() == 2) {
    // Degenerate cycle: the single edge is the matching.
    if (!host.has_edge(vertices[0], vertices[1])) {
      throw ConstructionInfeasible(step, "two leftover vertices are not adjacent");
    }
    edges.emplace_back(vertices[0], vertices[1]);
    return;
  }
  auto cycle = host_cycle(host, vertices, step);
  for (std::size_t i = 0; i < cycle.size(); i += 2) edges.emplace_back(cycle[i], cycle[i + 1]);
}

struct PlanBuilder {
  std::vector<Edge> anchored_edges;
  std::vector<Vertex> anchors;
  std::vector<Edge> rest;

  void anchor(Vertex pinned, Vertex other) {
    anchored_edges.emplace_back(pinned, other);
    anchors.push_back(pinned);
  }

  RemovalPlan finish(int n) {
    std::vector<Edge> all = anchored_edges;
    all.insert(all.end(), rest.begin(), rest.end());
    RemovalPlan plan = RemovalPlan::from_edges(n, std::move(all));
    plan.anchored = anchored_edges.size();
    plan.anchors = anchors;
    return plan;
  }
};

Graph copies(int count, const Graph& g) {
  std::vector<Graph> parts(static_cast<std::size_t>(count), g);
  return disjoint_union(parts);
}

Graph clique_minus_matching(int k) {
  Graph g = make_complete(k);
  for (Vertex v = 0; v + 1 < k; v += 2) g.remove_edge(v, v + 1);
  return g;
}

// d-regular circulant on n vertices (n*d even, d < n).
Graph circulant(int n, int d) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) {
    for (int off = 1; off <= d / 2; ++off) g.add_edge(v, (v + off) % n);
    if (d % 2 == 1) g.add_edge(v, (v + n / 2) % n);
  }
  return g;
}

Graph union_of(std::initializer_list<std::pair<int, Graph>> blocks) {
  std::vector<Graph> parts;
  for (const auto& [count, g] : blocks) {
    for (int i = 0; i < count; ++i) parts.push_back(g);
  }
  return disjoint_union(parts);
}

}  // namespace

std::optional<Decomposition> decompose(int n, int x, int y) {
  if (n < 0 || x < 1 || y < 1) throw std::invalid_argument("decompose needs n >= 0 and x, y >= 1");
  for (int a = n / x; a >= 0; --a) {
    const int rest = n - a * x;
    if (rest % y == 0) return Decomposition{a, rest / y, x, y};
  }
  return std::nullopt;
}

std::vector<Edge> multipartite_matching(const PartSpec& parts) {
  return match_groups(turan_groups(parts, 0, parts.part_sizes.size()));
}

RemovalPlan clique_removal_plan(int n, int r) {
  const RegexResult target = regex_clique(n, r);
  const auto p = CliqueParams::decompose(n, r);
  const int q = static_cast<int>(p.q);
  const int s = static_cast<int>(p.s);
  const auto turan = make_turan(n, r);
  const Graph& host = turan.graph;
  // Min-degree vertices live in the s parts of size q+1, max-degree ones in
  // the r-s parts of size q.
  Groups big = turan_groups(turan.parts, 0, static_cast<std::size_t>(s));
  Groups small = turan_groups(turan.parts, static_cast<std::size_t>(s), static_cast<std::size_t>(r));

  PlanBuilder b;
  switch (target.tag) {
    case CaseTag::T1_i:
      break;

    case CaseTag::T1_iv:
      if (s == 1) {
        for (int i = 0; i < q; ++i) b.rest.emplace_back(small[0][i], small[1][i]);
      } else if (s == 2) {
        // q cherries a-c-b through the small part, plus one edge between the
        // two leftover large-part vertices.
        for (int i = 0; i < q; ++i) {
          b.rest.emplace_back(big[0][i], small[0][i]);
          b.rest.emplace_back(big[1][i], small[0][i]);
        }
        b.rest.emplace_back(big[0][q], big[1][q]);
      }
      break;

    case CaseTag::T1_iii:
      try {
        b.rest = match_groups(small);
      } catch (const PreconditionError& e) {
        throw ConstructionInfeasible("T1_iii matching", e.what());
      }
      break;

    case CaseTag::T2_i:
      if (s >= 2 && r - s >= 2) {
        remove_full_cycle(b.rest, host, flatten(small), "T2_i Hamiltonian cycle on H2");
        remove_alternate_edges(b.rest, host, flatten(big), "T2_i alternate edges on H1");
      } else if (s == 1) {
        const auto& minimal = big[0];
        auto picks = round_robin_pick(small, minimal.size(), "T2_i s=1 endpoints");
        for (std::size_t i = 0; i < minimal.size(); ++i) b.anchor(minimal[i], picks[i]);
        // Regroup the picked endpoints by part for the 1-factor.
        Groups picked_groups;
        for (const auto& part : turan_groups(turan.parts, 1, static_cast<std::size_t>(r))) {
          std::vector<Vertex> g;
          for (Vertex v : part) {
            if (std::find(picks.begin(), picks.end(), v) != picks.end()) g.push_back(v);
          }
          if (!g.empty()) picked_groups.push_back(std::move(g));
        }
        try {
          auto matching = match_groups(picked_groups);
          b.rest.insert(b.rest.end(), matching.begin(), matching.end());
        } catch (const PreconditionError& e) {
          throw ConstructionInfeasible("T2_i s=1 one-factor", e.what());
        }
        remove_full_cycle(b.rest, host, flatten(small), "T2_i s=1 Hamiltonian cycle");
      } else {  // r - s == 1
        const auto& maximal = small[0];
        auto picks = round_robin_pick(big, 2 * maximal.size(), "T2_i r-s=1 endpoints");
        for (std::size_t j = 0; j < maximal.size(); ++j) {
          b.anchor(maximal[j], picks[2 * j]);
          b.anchor(maximal[j], picks[2 * j + 1]);
        }
        remove_alternate_edges(b.rest, host, flatten(big), "T2_i r-s=1 alternate edges");
      }
      break;

    case CaseTag::T2_ii: {
      const auto& maximal = small[0];
      auto picks = round_robin_pick(big, 3 * maximal.size(), "T2_ii endpoints");
      for (std::size_t j = 0; j < maximal.size(); ++j) {
        for (std::size_t k = 0; k < 3; ++k) b.anchor(maximal[j], picks[3 * j + k]);
      }
      remove_full_cycle(b.rest, host, flatten(big), "T2_ii cycle C1 on V1");
      std::sort(picks.begin(), picks.end());
      remove_alternate_edges(b.rest, host, picks, "T2_ii alternate edges of C2 on V2");
      break;
    }

    case CaseTag::T2_iii: {
      const auto& maximal = small[0];
      auto picks = round_robin_pick(big, 2 * maximal.size(), "T2_iii endpoints");
      for (std::size_t j = 0; j < maximal.size(); ++j) {
        b.anchor(maximal[j], picks[2 * j]);
        b.anchor(maximal[j], picks[2 * j + 1]);
      }
      remove_alternate_edges(b.rest, host, flatten(big), "T2_iii alternate edges on V");
      break;
    }

    default:
      throw std::logic_error("unexpected case tag for a clique");
  }

  RemovalPlan plan = b.finish(n);
  for (Vertex v = 0; v < n; ++v) {
    if (host.degree(v) - plan.quota[static_cast<std::size_t>(v)] != target.value) {
      throw std::logic_error("removal plan for " + to_string(target.tag) + " misses the target at vertex " +
                             std::to_string(v));
    }
  }
  return plan;
}

WitnessCertificate clique_witness(int n, int r) {
  const RegexResult target = regex_clique(n, r);
  const auto turan = make_turan(n, r);
  const RemovalPlan plan = clique_removal_plan(n, r);
  WitnessCertificate cert = verify(remove_edge_set(turan.graph, plan), CliquePattern{r + 1},
                                   static_cast<int>(target.value));
  cert.case_tag = target.tag;
  return cert;
}

WitnessCertificate tree_witness(int n, const Tree& tree, int d) {
  if (n < 1 || n > Graph::kMaxVertices) {
    throw std::invalid_argument("tree witness needs 1 <= n <= " + std::to_string(Graph::kMaxVertices));
  }
  const int t = tree.vertex_count();
  const TreeClass c = classify(tree);
  if (d < 0 || d >= n) {
    throw ConstructionInfeasible("tree witness", "no " + std::to_string(d) + "-regular graph on " +
                                                     std::to_string(n) + " vertices");
  }
  if (d != 0 && d != t - 2 && d != t - 3 && d != t - 4) {
    throw std::invalid_argument("tree witness degree must be t-2, t-3 or t-4");
  }
  const bool n_even = n % 2 == 0;
  const bool t_even = t % 2 == 0;

  std::optional<Graph> g;
  std::optional<CaseTag> tag;
  if (d == 0) {
    g = make_empty(n);
  } else if (d == t - 2) {
    tag = CaseTag::TREE_t2;
    if (n % (t - 1) == 0) {
      g = copies(n / (t - 1), make_complete(t - 1));
    } else if (c.is_star && (t_even || n_even)) {
      g = circulant(n, d);
    } else {
      throw ConstructionInfeasible("TREE_t2", "needs (t-1) | n or a star with t or n even");
    }
  } else if (d == t - 3) {
    tag = CaseTag::TREE_t3;
    if (!t_even) {
      if (auto dec = decompose(n, t - 1, t - 2)) {
        g = union_of({{dec->a, clique_minus_matching(t - 1)}, {dec->b, make_complete(t - 2)}});
      }
    }
    if (!g && n % (t - 2) == 0) g = copies(n / (t - 2), make_complete(t - 2));
    if (!g && c.is_almost_star && t_even && n_even) {
      if (auto dec = decompose(n, t - 2, 2 * t - 6)) {
        g = union_of({{dec->a, make_complete(t - 2)},
                      {dec->b, make_complete_multipartite(PartSpec{{t - 3, t - 3}})}});
      }
    }
    if (!g && c.is_star && (n * d) % 2 == 0) g = circulant(n, d);
    if (!g) throw ConstructionInfeasible("TREE_t3", "no decomposition of n for any applicable sub-case");
  } else {
    tag = CaseTag::TREE_t4;
    if (!t_even) throw ConstructionInfeasible("TREE_t4", "K_{t-2} minus a perfect matching needs t even");
    auto dec = decompose(n, t - 2, t - 3);
    if (!dec) {
      throw ConstructionInfeasible("TREE_t4", "n is not a(t-2) + b(t-3) for n=" + std::to_string(n));
    }
    g = union_of({{dec->a, clique_minus_matching(t - 2)}, {dec->b, make_complete(t - 3)}});
  }

  WitnessCertificate cert = verify(*g, tree, d);
  cert.case_tag = tag;
  return cert;
}

WitnessCertificate zero_witness(int n, const Graph& forest) {
  if (prop4_infinitely_zero(forest)) {
    throw std::invalid_argument("classifier accepts F: rex(n,F) = 0 for infinitely many n");
  }
  if (n < 3 || n > Graph::kMaxVertices) {
    throw ConstructionInfeasible("zero witness", "needs 3 <= n <= " + std::to_string(Graph::kMaxVertices));
  }
  const auto comps = components(forest);
  const bool has_branch = degree_profile(forest).max >= 3;
  bool has_cycle = false;
  int longest_path = 0;
  for (const auto& comp : comps) {
    const int k = comp.graph.vertex_count();
    if (comp.graph.edge_count() >= k && k > 1) has_cycle = true;
    longest_path = std::max(longest_path, k);
  }

  Graph g;
  if (has_branch) {
    g = make_cycle(n);
  } else if (has_cycle) {
    // F contains some C_k; C_n avoids it unless F itself is C_n.
    g = make_cycle(n);
    if (contains_subgraph(g, forest)) {
      if (n < 6) throw ConstructionInfeasible("zero witness", "F is C_n and n < 6");
      g = union_of({{1, make_cycle(3)}, {1, make_cycle(n - 3)}});
    }
  } else if (longest_path >= 5) {
    if (n <= 5) throw ConstructionInfeasible("zero witness", "n = 4a + 3b needs n > 5");
    auto dec = decompose(n, 4, 3);
    g = union_of({{dec->a, make_cycle(4)}, {dec->b, make_cycle(3)}});
  } else {
    // At least two P_4 components, otherwise the classifier would accept F.
    const int a = n / 3;
    const int p = n % 3;
    g = union_of({{a - 1, make_cycle(3)}, {1, make_cycle(3 + p)}});
  }
  return verify(g, forest, 2);
}

WitnessCertificate verify(const Graph& g, const Pattern& forbidden, int d) {
  WitnessCertificate cert;
  cert.graph = g;
  cert.claimed_degree = d;
  cert.forbidden = forbidden;
  const auto prof = degree_profile(g);
  cert.regular = prof.is_regular && prof.degree == d;
  cert.counterexample = find_pattern(g, forbidden);
  cert.free = !cert.counterexample.has_value();
  return cert;
}

RegexResult certified_regex_clique(int n, int r) {
  RegexResult res = regex_clique(n, r);
  if (n <= Graph::kMaxVertices) {
    try {
      res.advisory = !clique_witness(n, r).valid();
    } catch (const ConstructionInfeasible&) {
    }
  }
  return res;
}

RegexResult certified_regex_tree(int n, const Tree& tree) {
  RegexResult res = regex_tree(n, tree);
  if (n <= Graph::kMaxVertices) {
    try {
      res.advisory = !tree_witness(n, tree, static_cast<int>(res.value)).valid();
    } catch (const ConstructionInfeasible&) {
    }
  }
  return res;
}

std::string to_text(const WitnessCertificate& cert) {
  std::ostringstream os;
  os << "n=" << cert.graph.vertex_count() << " d=" << cert.claimed_degree
     << " forbidden=" << describe(cert.forbidden);
  if (cert.case_tag) os << " case=" << to_string(*cert.case_tag);
  os << " regular=" << (cert.regular ? "pass" : "fail") << " free=" << (cert.free ? "pass" : "fail")
     << " valid=" << (cert.valid() ? "true" : "false");
  return os.str();
}

}  // namespace regexlab
