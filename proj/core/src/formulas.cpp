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

#include "regexlab/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "regexlab/errors.hpp"
#include "regexlab/patterns.hpp"

namespace regexlab {

namespace {

void check_range(std::int64_t n, std::int64_t r) {
  if (r < 1 || r > n) {
    throw std::invalid_argument("need 1 <= r <= n (n=" + std::to_string(n) +
                                ", r=" + std::to_string(r) + ")");
  }
}

RegexResult make_result(std::int64_t n, std::int64_t value, CaseTag tag) {
  RegexResult res;
  res.n = n;
  res.value = value;
  res.tag = tag;
  res.rex = rex_from(n, value).value;
  return res;
}

}  // namespace

CliqueParams CliqueParams::decompose(std::int64_t n, std::int64_t r) {
  check_range(n, r);
  CliqueParams p;
  p.n = n;
  p.r = r;
  p.q = n / r;
  p.s = n % r;
  p.q_even = p.q % 2 == 0;
  p.r_even = r % 2 == 0;
  p.r_minus_s_even = (r - p.s) % 2 == 0;
  return p;
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::T1_i: return "T1_i";
    case CaseTag::T1_iii: return "T1_iii";
    case CaseTag::T1_iv: return "T1_iv";
    case CaseTag::T2_i: return "T2_i";
    case CaseTag::T2_ii: return "T2_ii";
    case CaseTag::T2_iii: return "T2_iii";
    case CaseTag::TREE_t2: return "TREE_t2";
    case CaseTag::TREE_t3: return "TREE_t3";
    case CaseTag::TREE_t4: return "TREE_t4";
  }
  return "?";
}

std::string Rational::str() const {
  return is_integer() ? std::to_string(numerator)
                      : std::to_string(numerator) + "/" + std::to_string(denominator);
}

std::int64_t delta(std::int64_t n, std::int64_t r) {
  check_range(n, r);
  const std::int64_t q = n / r;
  return n % r == 0 ? n - q : n - q - 1;
}

std::int64_t turan_edges(std::int64_t n, std::int64_t r) {
  check_range(n, r);
  const std::int64_t q = n / r;
  const std::int64_t s = n % r;
  // Sum of squared part sizes: s parts of q+1, r-s parts of q.
  const std::int64_t squares = s * (q + 1) * (q + 1) + (r - s) * q * q;
  return (n * n - squares) / 2;
}

std::int64_t brouwer_bound(std::int64_t n, std::int64_t r) {
  return turan_edges(n, r) - n / r + 1;
}

RegexResult regex_clique(std::int64_t n, std::int64_t r) {
  if (r == 2) {
    throw UnsupportedCase("regex(n, K_3) has no closed form here; use the oracle");
  }
  if (r < 2) throw std::invalid_argument("regex_clique needs r >= 3, got " + std::to_string(r));
  const auto p = CliqueParams::decompose(n, r);
  const std::int64_t d = delta(n, r);

  if (r == 3) return make_result(n, 2 * p.q, CaseTag::T1_iv);
  if (p.s == 0) return make_result(n, d, CaseTag::T1_i);
  if (p.s <= r - 2) {
    if (p.r_minus_s_even || p.q_even) return make_result(n, d, CaseTag::T1_iii);
    return make_result(n, d - 1, CaseTag::T2_i);
  }
  // s == r - 1
  if (!p.q_even) return make_result(n, d - 1, CaseTag::T2_i);
  if (p.r_even) return make_result(n, d - 2, CaseTag::T2_ii);
  return make_result(n, d - 1, CaseTag::T2_iii);
}

RegexResult regex_tree(std::int64_t n, const Tree& tree) {
  if (n < 1) throw std::invalid_argument("regex_tree needs n >= 1");
  const std::int64_t t = tree.vertex_count();
  if (t < 2) throw std::invalid_argument("regex_tree needs a tree with t >= 2");
  const TreeClass c = classify(tree);
  const bool n_even = n % 2 == 0;
  const bool t_even = t % 2 == 0;

  if (n % (t - 1) == 0 || (c.is_star && (t_even || n_even))) {
    return make_result(n, std::max<std::int64_t>(t - 2, 0), CaseTag::TREE_t2);
  }
  if (!t_even || n % (t - 2) == 0 || c.is_star || (c.is_almost_star && n_even)) {
    return make_result(n, std::max<std::int64_t>(t - 3, 0), CaseTag::TREE_t3);
  }
  return make_result(n, std::max<std::int64_t>(t - 4, 0), CaseTag::TREE_t4);
}

bool prop4_infinitely_zero(const Graph& forest) {
  if (forest.edge_count() == 0) {
    throw std::invalid_argument("forbidden graph must have at least one edge");
  }
  int p4_count = 0;
  for (const auto& comp : components(forest)) {
    const Graph& c = comp.graph;
    const int k = c.vertex_count();
    if (k == 1) continue;
    const auto prof = degree_profile(c);
    const bool is_path = c.edge_count() == k - 1 && prof.max <= 2;
    if (!is_path || k > 4) return false;
    if (k == 4) ++p4_count;
  }
  return p4_count <= 1;
}

bool prop4_infinitely_zero(std::span<const Tree> components) {
  std::vector<Graph> parts;
  for (const auto& t : components) parts.push_back(t.graph());
  return prop4_infinitely_zero(disjoint_union(parts));
}

RexValue rex_from(std::int64_t n, std::int64_t d) {
  RexValue out;
  const std::int64_t product = n * d;
  out.parity_ok = product % 2 == 0;
  out.value = out.parity_ok ? Rational{product / 2, 1} : Rational{product, 2};
  return out;
}

}  // namespace regexlab
