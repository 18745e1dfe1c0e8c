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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regexlab/formulas.hpp"
#include "regexlab/graph.hpp"
#include "regexlab/patterns.hpp"
#include "regexlab/trees.hpp"

namespace regexlab {

/// Outcome of checking a candidate witness. A failing check is recorded
/// here; verify() never throws because a graph is bad.
struct WitnessCertificate {
  Graph graph;
  int claimed_degree = 0;
  Pattern forbidden = CliquePattern{};
  bool regular = false;
  bool free = false;
  std::optional<CaseTag> case_tag;
  /// A copy of the forbidden pattern, when one was found.
  std::optional<Embedding> counterexample;

  bool valid() const noexcept { return regular && free; }
};

/// n = a*x + b*y.
struct Decomposition {
  int a = 0;
  int b = 0;
  int x = 0;
  int y = 0;
};

/// Non-negative solution with the largest a, if any.
std::optional<Decomposition> decompose(int n, int x, int y);

/// Hamiltonian cycle of a graph meeting Dirac's condition (n >= 3, minimum
/// degree >= n/2). Complete multipartite hosts are handled by interleaving
/// parts; anything else goes through rotation-extension. Throws
/// PreconditionError when Dirac's condition fails.
std::vector<Vertex> hamiltonian_cycle(const Graph& g);

/// n distinct vertices, cyclically consecutive ones adjacent.
bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> cycle);

/// Perfect matching of the complete multipartite graph on `parts` (labels as
/// in make_complete_multipartite). Throws PreconditionError if the total is
/// odd or a part exceeds half the vertices.
std::vector<Edge> multipartite_matching(const PartSpec& parts);

/// Edges to delete from T(n,r) to reach a regex_clique(n,r)-regular graph.
/// Throws ConstructionInfeasible when a Dirac or matching step cannot be
/// carried out at this size.
RemovalPlan clique_removal_plan(int n, int r);

WitnessCertificate clique_witness(int n, int r);

/// Disjoint-union (or circulant) witness of degree d for a tree pattern.
/// d must be t-2, t-3 or t-4 (or 0).
WitnessCertificate tree_witness(int n, const Tree& tree, int d);

/// 2-regular F-free graph on n vertices for a forbidden graph F that the
/// zero-degree classifier rejects. Throws std::invalid_argument if the
/// classifier accepts F.
WitnessCertificate zero_witness(int n, const Graph& forest);

WitnessCertificate verify(const Graph& g, const Pattern& forbidden, int d);

/// Formula value with `advisory` cleared when a witness of that degree was
/// built and verified.
RegexResult certified_regex_clique(int n, int r);
RegexResult certified_regex_tree(int n, const Tree& tree);

/// One-line record: n, d, forbidden pattern, case tag and per-check verdicts.
std::string to_text(const WitnessCertificate& cert);

}  // namespace regexlab
