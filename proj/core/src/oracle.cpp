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

#include "regexlab/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "embedding_order.hpp"
#include "regexlab/errors.hpp"

namespace regexlab {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr Mask low_bits(int count) { return count >= 64 ? ~Mask{0} : bit(count) - 1; }

struct PartialGraph {
  std::array<Mask, kSearchHardLimit> adj{};
  std::array<int, kSearchHardLimit> deg{};

  void add(int u, int v) {
    adj[static_cast<std::size_t>(u)] |= bit(v);
    adj[static_cast<std::size_t>(v)] |= bit(u);
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  void remove(int u, int v) {
    adj[static_cast<std::size_t>(u)] &= ~bit(v);
    adj[static_cast<std::size_t>(v)] &= ~bit(u);
    --deg[static_cast<std::size_t>(u)];
    --deg[static_cast<std::size_t>(v)];
  }
};

/// A partial graph whose rows 0..row-1 are complete.
struct Task {
  PartialGraph state;
  int row = 0;
};

bool has_clique_in(const PartialGraph& g, Mask candidates, int size) {
  if (size <= 0) return true;
  if (std::popcount(candidates) < size) return false;
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (has_clique_in(g, candidates & g.adj[static_cast<std::size_t>(v)], size - 1)) return true;
  }
  return false;
}

Graph to_graph(const PartialGraph& g, int n) {
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    for (Mask rest = g.adj[static_cast<std::size_t>(u)] & ~low_bits(u + 1); rest != 0; rest &= rest - 1) {
      out.add_edge(u, std::countr_zero(rest));
    }
  }
  return out;
}

/// Depth-first completion of the adjacency relation one row at a time. Row
/// v chooses the neighbours of v among higher labels, in lexicographic order
/// of the sorted neighbour list, so the first complete graph found is the
/// least one in that order.
class RowSearch {
 public:
  RowSearch(int n, int d, const Pattern& forbidden, SearchMode mode) : n_(n), d_(d), mode_(mode) {
    if (const auto* c = std::get_if<CliquePattern>(&forbidden)) {
      clique_ = c->size;
    } else {
      const Graph& pg = std::holds_alternative<Tree>(forbidden) ? std::get<Tree>(forbidden).graph()
                                                                : std::get<Graph>(forbidden);
      embed_ = detail::embedding_order(pg);
      image_.assign(static_cast<std::size_t>(pg.vertex_count()), 0);
    }
  }

  /// Stop at `split_rows` completed rows and record the partial graph.
  void collect_tasks_at(int split_rows, std::vector<Task>* sink) {
    split_rows_ = split_rows;
    task_sink_ = sink;
  }

  void run() {
    PartialGraph g;
    if (mode_ == SearchMode::exists && d_ > 0) {
      // Any witness can be relabelled so that N(0) = {1..d}.
      ++nodes_;
      for (int w = 1; w <= d_; ++w) {
        g.add(0, w);
        if (!edge_allowed(g, 0, w)) return;
      }
      finish_row(g, 0);
    } else {
      begin_row(g, 0);
    }
  }

  void resume(const Task& task) {
    PartialGraph g = task.state;
    begin_row(g, task.row);
  }

  std::uint64_t nodes() const { return nodes_; }
  std::optional<Graph>& found() { return found_; }
  std::vector<Graph>& all() { return all_; }

 private:
  bool edge_allowed(const PartialGraph& g, int v, int w) const {
    if (clique_ == 0) return true;
    return !has_clique_in(g, g.adj[static_cast<std::size_t>(v)] & g.adj[static_cast<std::size_t>(w)], clique_ - 2);
  }

  void begin_row(PartialGraph& g, int v) {
    if (task_sink_ != nullptr && v == split_rows_) {
      task_sink_->push_back({g, v});
      return;
    }
    if (v == n_) {
      if (mode_ == SearchMode::exists) {
        found_ = to_graph(g, n_);
        stop_ = true;
      } else {
        all_.push_back(to_graph(g, n_));
      }
      return;
    }
    fill(g, v, v + 1, d_ - g.deg[static_cast<std::size_t>(v)]);
  }

  void fill(PartialGraph& g, int v, int start, int need) {
    ++nodes_;
    if (need == 0) {
      finish_row(g, v);
      return;
    }
    for (int w = start; w <= n_ - need; ++w) {
      if (g.deg[static_cast<std::size_t>(w)] >= d_) continue;
      g.add(v, w);
      if (edge_allowed(g, v, w)) fill(g, v, w + 1, need - 1);
      g.remove(v, w);
      if (stop_) return;
    }
  }

  void finish_row(PartialGraph& g, int v) {
    // Every later vertex must still be able to reach degree d using edges
    // to other later vertices.
    const Mask later = low_bits(n_) & ~low_bits(v + 1);
    Mask open = 0;
    for (Mask m = later; m != 0; m &= m - 1) {
      const int u = std::countr_zero(m);
      if (g.deg[static_cast<std::size_t>(u)] < d_) open |= bit(u);
    }
    for (Mask m = later; m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      const int missing = d_ - g.deg[static_cast<std::size_t>(w)];
      if (missing > std::popcount(open & ~g.adj[static_cast<std::size_t>(w)] & ~bit(w))) return;
    }
    // Trees only grow with the graph, so a copy in the partial graph is
    // a copy in every completion.
    if (!embed_.order.empty() && embeds(g, 0, 0)) return;
    begin_row(g, v + 1);
  }

  bool embeds(const PartialGraph& g, std::size_t i, Mask used) {
    if (i == embed_.order.size()) return true;
    const Vertex p = embed_.order[i];
    const Vertex par = embed_.parent[static_cast<std::size_t>(p)];
    Mask cand = (par < 0 ? low_bits(n_) : g.adj[static_cast<std::size_t>(image_[static_cast<std::size_t>(par)])]) & ~used;
    for (; cand != 0; cand &= cand - 1) {
      const int h = std::countr_zero(cand);
      if (g.deg[static_cast<std::size_t>(h)] < embed_.degree[static_cast<std::size_t>(p)]) continue;
      bool ok = true;
      for (Vertex w : embed_.constraints[i]) {
        if ((g.adj[static_cast<std::size_t>(h)] & bit(image_[static_cast<std::size_t>(w)])) == 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image_[static_cast<std::size_t>(p)] = h;
      if (embeds(g, i + 1, used | bit(h))) return true;
    }
    return false;
  }

  int n_;
  int d_;
  SearchMode mode_;
  int clique_ = 0;
  detail::EmbeddingOrder embed_;
  std::vector<int> image_;

  int split_rows_ = -1;
  std::vector<Task>* task_sink_ = nullptr;

  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  std::optional<Graph> found_;
  std::vector<Graph> all_;
};

void validate_pattern(const Pattern& p) {
  if (const auto* c = std::get_if<CliquePattern>(&p)) {
    if (c->size < 2) throw std::invalid_argument("forbidden clique must have at least 2 vertices");
  } else if (const auto* t = std::get_if<Tree>(&p)) {
    if (t->vertex_count() < 2) throw std::invalid_argument("forbidden tree must have an edge");
  } else if (std::get<Graph>(p).edge_count() == 0) {
    throw std::invalid_argument("forbidden graph must have an edge");
  }
}

int effective_bound(const SearchOptions& options) {
  return std::min(options.max_n, kSearchHardLimit);
}

/// Returns false when the request is trivially empty (parity or range).
bool admit(const SearchSpec& spec, const SearchOptions& options) {
  validate_pattern(spec.forbidden);
  if (spec.n < 1) throw std::invalid_argument("search needs n >= 1");
  if (spec.n > effective_bound(options)) throw OracleRefusal(spec.n, effective_bound(options));
  if (spec.d < 0) throw std::invalid_argument("degree must be non-negative");
  if (spec.d >= spec.n) return false;
  return (spec.n * spec.d) % 2 == 0;
}

struct Outcome {
  std::optional<Graph> found;
  std::vector<Graph> all;
};

Outcome run_search(const SearchSpec& spec, const SearchOptions& options, SearchStats* stats) {
  Outcome out;
  if (options.workers <= 1) {
    RowSearch search(spec.n, spec.d, spec.forbidden, spec.mode);
    search.run();
    if (stats != nullptr) stats->nodes += search.nodes();
    out.found = std::move(search.found());
    out.all = std::move(search.all());
    return out;
  }

  std::vector<Task> tasks;
  RowSearch splitter(spec.n, spec.d, spec.forbidden, spec.mode);
  splitter.collect_tasks_at(std::max(1, options.split_rows), &tasks);
  splitter.run();

  std::vector<std::optional<Graph>> found(tasks.size());
  std::vector<std::vector<Graph>> all(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> nodes{splitter.nodes()};

  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      // A smaller task index already holds the least witness.
      if (spec.mode == SearchMode::exists && i > best.load()) continue;
      RowSearch search(spec.n, spec.d, spec.forbidden, spec.mode);
      search.resume(tasks[i]);
      nodes += search.nodes();
      if (search.found()) {
        found[i] = std::move(search.found());
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
      all[i] = std::move(search.all());
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < options.workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (stats != nullptr) {
    stats->nodes += nodes.load();
    stats->tasks += tasks.size();
  }
  if (best.load() < tasks.size()) out.found = std::move(found[best.load()]);
  for (auto& chunk : all) {
    for (auto& g : chunk) out.all.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::optional<Graph> exists_regular_free(const SearchSpec& spec, const SearchOptions& options,
                                         SearchStats* stats) {
  if (!admit(spec, options)) return std::nullopt;
  SearchSpec s = spec;
  s.mode = SearchMode::exists;
  return run_search(s, options, stats).found;
}

std::vector<Graph> enumerate_regular_free(const SearchSpec& spec, const SearchOptions& options,
                                          SearchStats* stats) {
  if (!admit(spec, options)) return {};
  SearchSpec s = spec;
  s.mode = SearchMode::enumerate;
  auto all = run_search(s, options, stats).all;
  if (!options.dedup_isomorphic) return all;

  std::vector<Graph> reps;
  std::map<std::uint64_t, std::vector<std::size_t>> buckets;
  for (auto& g : all) {
    auto& bucket = buckets[invariant_hash(g)];
    const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                  [&](std::size_t i) { return are_isomorphic(reps[i], g); });
    if (!seen) {
      bucket.push_back(reps.size());
      reps.push_back(std::move(g));
    }
  }
  return reps;
}

OracleResult regex_oracle(int n, const Pattern& forbidden, const SearchOptions& options,
                          SearchStats* stats) {
  validate_pattern(forbidden);
  if (n < 1) throw std::invalid_argument("oracle needs n >= 1");
  if (n > effective_bound(options)) throw OracleRefusal(n, effective_bound(options));
  for (int d = n - 1; d >= 1; --d) {
    if (auto g = exists_regular_free({n, d, forbidden, SearchMode::exists}, options, stats)) {
      return {d, std::move(*g)};
    }
  }
  return {0, make_empty(n)};
}

std::string to_string(ComponentShape shape) {
  switch (shape) {
    case ComponentShape::clique_t_minus_1: return "K_{t-1}";
    case ComponentShape::clique_t_minus_2: return "K_{t-2}";
    case ComponentShape::biclique_t_minus_3: return "K_{t-3,t-3}";
    case ComponentShape::balanced_multipartite: return "balanced-multipartite";
    case ComponentShape::unclassified: return "unclassified";
  }
  return "?";
}

bool ShapeReport::all_classified() const {
  return std::none_of(components.begin(), components.end(),
                      [](const ComponentReport& c) { return c.shape == ComponentShape::unclassified; });
}

bool ShapeReport::only(std::initializer_list<ComponentShape> allowed) const {
  return std::all_of(components.begin(), components.end(), [&](const ComponentReport& c) {
    return std::find(allowed.begin(), allowed.end(), c.shape) != allowed.end();
  });
}

ShapeReport classify_components_shape(const Graph& g, int t) {
  ShapeReport report;
  for (const auto& comp : components(g)) {
    const Graph& c = comp.graph;
    const int m = c.vertex_count();
    ComponentReport r;
    r.vertex_count = m;
    const bool complete = c.edge_count() == m * (m - 1) / 2;
    if (complete && m == t - 1) {
      r.shape = ComponentShape::clique_t_minus_1;
    } else if (complete && m == t - 2) {
      r.shape = ComponentShape::clique_t_minus_2;
      r.parts = m;
    } else if (auto parts = is_complete_multipartite(c); parts && t > 3) {
      const auto& sizes = parts->part_sizes;
      const int size = sizes.front();
      const bool balanced = std::all_of(sizes.begin(), sizes.end(), [&](int x) { return x == size; });
      const int k = static_cast<int>(sizes.size()) - 1;
      if (balanced && k == 1 && size == t - 3) {
        r.shape = ComponentShape::biclique_t_minus_3;
        r.parts = 2;
      } else if (balanced && k >= 1 && (t - 3) % k == 0 && size == (t - 3) / k) {
        r.shape = ComponentShape::balanced_multipartite;
        r.parts = k + 1;
      }
    }
    report.components.push_back(r);
  }
  return report;
}

}  // namespace regexlab
