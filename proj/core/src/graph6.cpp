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

#include "regexlab/graph6.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "regexlab/errors.hpp"

namespace regexlab {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::size_t triangle_bits(std::size_t n) { return n * (n - 1) / 2; }

void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
    }
  }
}

int sextet(std::string_view bytes, std::size_t pos) {
  auto c = static_cast<unsigned char>(bytes[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6 byte out of range [63,126]", pos);
  }
  return c - 63;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::string out;
  append_size(out, n);
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view bytes) {
  std::size_t pos = 0;
  if (bytes.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= bytes.size()) throw ParseError("missing graph6 length header", pos);

  std::size_t n = 0;
  if (static_cast<unsigned char>(bytes[pos]) != 126) {
    n = static_cast<std::size_t>(sextet(bytes, pos));
    pos += 1;
  } else if (pos + 1 < bytes.size() && static_cast<unsigned char>(bytes[pos + 1]) == 126) {
    if (pos + 8 > bytes.size()) throw ParseError("truncated 8-byte graph6 length", pos);
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(bytes, pos + k));
    if (n <= 258047) throw ParseError("non-minimal graph6 length header", pos);
    pos += 8;
  } else {
    if (pos + 4 > bytes.size()) throw ParseError("truncated 4-byte graph6 length", pos);
    for (std::size_t k = 1; k < 4; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(bytes, pos + k));
    if (n <= 62) throw ParseError("non-minimal graph6 length header", pos);
    pos += 4;
  }
  if (n > static_cast<std::size_t>(Graph::kMaxVertices)) {
    throw std::invalid_argument("graph6 vertex count " + std::to_string(n) +
                                " exceeds supported bound " +
                                std::to_string(Graph::kMaxVertices));
  }

  const std::size_t nbits = triangle_bits(n);
  const std::size_t nbytes = (nbits + 5) / 6;
  if (bytes.size() < pos + nbytes) throw ParseError("truncated graph6 body", bytes.size());
  if (bytes.size() > pos + nbytes) throw ParseError("trailing bytes after graph6 body", pos + nbytes);

  Graph g(static_cast<int>(n));
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      int value = sextet(bytes, pos + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (nbytes > 0) {
    const std::size_t last = pos + nbytes - 1;
    const int pad = static_cast<int>(nbytes * 6 - nbits);
    if ((sextet(bytes, last) & ((1 << pad) - 1)) != 0) {
      throw ParseError("nonzero graph6 padding bits", last);
    }
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

void write_graph6_line(std::ostream& out, const Graph& g) { out << encode_graph6(g) << '\n'; }

}  // namespace regexlab
