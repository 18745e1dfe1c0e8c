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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "regexlab/graph.hpp"

namespace regexlab {

/// Standard graph6 encoding (no header, no trailing newline).
std::string encode_graph6(const Graph& g);

/// Decodes one graph6 record. An optional ">>graph6<<" header is accepted.
/// Throws ParseError with the byte offset on malformed input.
Graph decode_graph6(std::string_view bytes);

/// Newline-delimited graph6; blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
void write_graph6_line(std::ostream& out, const Graph& g);

}  // namespace regexlab
