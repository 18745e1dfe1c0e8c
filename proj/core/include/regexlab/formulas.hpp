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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "regexlab/graph.hpp"
#include "regexlab/trees.hpp"

namespace regexlab {

/// n = q*r + s with 0 <= s < r.
struct CliqueParams {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t q = 0;
  std::int64_t s = 0;
  bool q_even = false;
  bool r_even = false;
  bool r_minus_s_even = false;

  static CliqueParams decompose(std::int64_t n, std::int64_t r);
};

/// Which branch of the closed-form case analysis produced a value.
enum class CaseTag { T1_i, T1_iii, T1_iv, T2_i, T2_ii, T2_iii, TREE_t2, TREE_t3, TREE_t4 };

std::string to_string(CaseTag tag);

/// Exact n*d/2, with a flag when n*d is odd (no d-regular graph on n
/// vertices exists, so the value is hypothetical).
struct Rational {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  bool is_integer() const noexcept { return denominator == 1; }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct RexValue {
  Rational value;
  bool parity_ok = true;
};

struct RegexResult {
  std::int64_t n = 0;
  std::int64_t value = 0;
  CaseTag tag = CaseTag::T1_i;
  Rational rex;
  /// True while the value is only the closed-form answer for large n. It is
  /// cleared once an explicit witness of this degree has been built and
  /// verified (see certified_regex_clique in constructions.hpp).
  bool advisory = true;
};

/// Minimum degree of T(n,r).
std::int64_t delta(std::int64_t n, std::int64_t r);
/// Edge count of T(n,r).
std::int64_t turan_edges(std::int64_t n, std::int64_t r);
/// t(n,r) - floor(n/r) + 1: edge bound for K_{r+1}-free graphs that are not
/// r-partite (meaningful for n >= 2r+1).
std::int64_t brouwer_bound(std::int64_t n, std::int64_t r);

/// regex(n, K_{r+1}) for r >= 3. r == 2 throws UnsupportedCase.
RegexResult regex_clique(std::int64_t n, std::int64_t r);

/// regex(n, T). Branches are tested in the order t-2, t-3, t-4; the value
/// never goes below 0.
RegexResult regex_tree(std::int64_t n, const Tree& tree);

/// True iff rex(n,F) = 0 for infinitely many n: every non-trivial component
/// is P_2 or P_3, apart from at most one P_4. Isolated vertices of F are
/// ignored. Throws std::invalid_argument if F has no edge.
bool prop4_infinitely_zero(const Graph& forest);
/// Convenience overload taking the components as trees.
bool prop4_infinitely_zero(std::span<const Tree> components);

RexValue rex_from(std::int64_t n, std::int64_t d);

}  // namespace regexlab
