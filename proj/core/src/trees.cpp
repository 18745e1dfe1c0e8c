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

#include "regexlab/trees.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace regexlab {

namespace {

bool connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad integer '" + std::string(text) + "' in " + std::string(what));
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Tree Tree::from_edges(int t, const std::vector<Edge>& edges, std::string label) {
  if (t < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != t - 1) {
    throw std::invalid_argument("tree on " + std::to_string(t) + " vertices needs " +
                                std::to_string(t - 1) + " edges, got " +
                                std::to_string(edges.size()));
  }
  Graph g(t);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= t) {
      throw std::invalid_argument("tree edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") out of range");
    }
    if (!g.add_edge(e.u, e.v)) {
      throw std::invalid_argument("duplicate tree edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    }
  }
  // t-1 edges plus connectivity rules out cycles.
  if (!connected(g)) throw std::invalid_argument("tree edges do not connect all vertices");
  return Tree(std::move(g), std::move(label));
}

std::string Tree::spec() const {
  if (!label_.empty()) return label_;
  std::string out = std::to_string(vertex_count()) + ";";
  bool first = true;
  for (const Edge& e : edges()) {
    out += first ? " " : ",";
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
    first = false;
  }
  return out;
}

TreeClass classify(const Tree& tree) {
  const Graph& g = tree.graph();
  const int t = g.vertex_count();
  if (t < 2) throw std::invalid_argument("cannot classify a single-vertex tree");

  std::vector<int> colour(static_cast<std::size_t>(t), -1);
  std::vector<Vertex> queue{0};
  colour[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (colour[static_cast<std::size_t>(w)] < 0) {
        colour[static_cast<std::size_t>(w)] = 1 - colour[static_cast<std::size_t>(v)];
        queue.push_back(w);
      }
    }
  }
  const int first = static_cast<int>(std::count(colour.begin(), colour.end(), 0));

  TreeClass c;
  c.t = t;
  c.bipartition_sizes = {first, t - first};
  int big = 0;
  for (Vertex v = 0; v < t; ++v) {
    const int d = g.degree(v);
    if (d == t - 1) c.is_star = true;
    if (d > 1) ++big;
  }
  c.is_almost_star = std::min(first, t - first) <= 2;
  c.is_double_star = big == 2;

  if (t >= 5) {
    const int small_colour = first == 2 ? 0 : (t - first == 2 ? 1 : -1);
    if (small_colour >= 0) {
      std::vector<int> degrees;
      for (Vertex v = 0; v < t; ++v) {
        if (colour[static_cast<std::size_t>(v)] == small_colour) degrees.push_back(g.degree(v));
      }
      std::sort(degrees.begin(), degrees.end());
      c.is_A_t = degrees == std::vector<int>{std::min(2, t - 3), std::max(2, t - 3)};
    }
  }
  return c;
}

Tree make_path(int t) {
  if (t < 1) throw std::invalid_argument("path needs t >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < t; ++v) edges.emplace_back(v, v + 1);
  return Tree::from_edges(t, edges, "path:" + std::to_string(t));
}

Tree make_star(int t) {
  if (t < 2) throw std::invalid_argument("star needs t >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < t; ++v) edges.emplace_back(0, v);
  return Tree::from_edges(t, edges, "star:" + std::to_string(t));
}

Tree make_A(int t) {
  if (t < 5) throw std::invalid_argument("A(t) needs t >= 5");
  // 0: centre of degree t-3, 1: centre of degree 2, 2: shared neighbour,
  // 3: leaf on 1, 4..t-1: leaves on 0.
  std::vector<Edge> edges{{0, 2}, {1, 2}, {1, 3}};
  for (Vertex v = 4; v < t; ++v) edges.emplace_back(0, v);
  return Tree::from_edges(t, edges, "A:" + std::to_string(t));
}

Tree make_double_star(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("double star needs p, q >= 1");
  const int t = p + q + 2;
  std::vector<Edge> edges{{0, 1}};
  for (int i = 0; i < p; ++i) edges.emplace_back(0, 2 + i);
  for (int i = 0; i < q; ++i) edges.emplace_back(1, 2 + p + i);
  return Tree::from_edges(t, edges, "dstar:" + std::to_string(p) + ":" + std::to_string(q));
}

Tree parse_tree_spec(std::string_view spec) {
  spec = trim(spec);
  if (auto semi = spec.find(';'); semi != std::string_view::npos) {
    const int t = parse_int(trim(spec.substr(0, semi)), "tree vertex count");
    std::vector<Edge> edges;
    auto body = trim(spec.substr(semi + 1));
    if (!body.empty()) {
      for (auto item : split(body, ',')) {
        item = trim(item);
        auto dash = item.find('-');
        if (dash == std::string_view::npos) {
          throw std::invalid_argument("tree edge '" + std::string(item) + "' is not u-v");
        }
        edges.emplace_back(parse_int(trim(item.substr(0, dash)), "tree edge"),
                           parse_int(trim(item.substr(dash + 1)), "tree edge"));
      }
    }
    return Tree::from_edges(t, edges);
  }

  if (spec.size() > 1 && (spec[0] == 'P' || spec[0] == 'S') &&
      spec.find_first_not_of("0123456789", 1) == std::string_view::npos) {
    const int t = parse_int(spec.substr(1), spec);
    return spec[0] == 'P' ? make_path(t) : make_star(t);
  }
  auto fields = split(spec, ':');
  const auto kind = fields.front();
  auto arg = [&](std::size_t i) { return parse_int(trim(fields[i]), spec); };
  if ((kind == "path" || kind == "P") && fields.size() == 2) return make_path(arg(1));
  if ((kind == "star" || kind == "S") && fields.size() == 2) return make_star(arg(1));
  if (kind == "A" && fields.size() == 2) return make_A(arg(1));
  if (kind == "dstar" && fields.size() == 3) return make_double_star(arg(1), arg(2));
  throw std::invalid_argument("unrecognised tree spec '" + std::string(spec) + "'");
}

}  // namespace regexlab
