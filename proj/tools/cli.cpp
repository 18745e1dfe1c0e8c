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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "regexlab/constructions.hpp"
#include "regexlab/errors.hpp"
#include "regexlab/formulas.hpp"
#include "regexlab/graph6.hpp"
#include "regexlab/oracle.hpp"
#include "regexlab/patterns.hpp"
#include "regexlab/trees.hpp"

namespace regexlab::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kTreeGrammar = R"(Tree SPEC grammar:
  path:T | P:T | PT   path on T vertices
  star:T | S:T | ST   star on T vertices (K_{1,T-1})
  A:T                 almost-star, two-vertex class with degrees T-3 and 2
  dstar:P:Q           double star, centres with P and Q leaves
  "T; u-v,u-w,..."    explicit edge list on vertices 0..T-1
Forbidden patterns (--forbidden) take a tree SPEC, Kk or clique:k.
Forests (prop4 --forest) are comma-separated components Pk, Sk, Kk, Ck
or named tree SPECs, e.g. "P3,P4".)";

int parse_count(std::string_view text, std::string_view what) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

bool is_count(std::string_view text) {
  return !text.empty() && text.size() < 10 && text.find_first_not_of("0123456789") == std::string_view::npos;
}

Pattern parse_pattern(const std::string& text) {
  if (text.rfind("clique:", 0) == 0) return CliquePattern{parse_count(std::string_view(text).substr(7), "clique size")};
  if (text.size() > 1 && text[0] == 'K' && text.find_first_not_of("0123456789", 1) == std::string::npos) {
    return CliquePattern{parse_count(std::string_view(text).substr(1), "clique size")};
  }
  return parse_tree_spec(text);
}

Graph parse_forest(const std::string& text) {
  std::vector<Graph> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto first = item.find_first_not_of(' ');
    if (first == std::string::npos) throw std::invalid_argument("empty forest component");
    item = item.substr(first, item.find_last_not_of(' ') - first + 1);
    const bool short_form = item.size() > 1 && std::string("PSKC").find(item[0]) != std::string::npos &&
                            item.find_first_not_of("0123456789", 1) == std::string::npos;
    if (!short_form) {
      parts.push_back(parse_tree_spec(item).graph());
      continue;
    }
    const int k = parse_count(std::string_view(item).substr(1), "component size");
    switch (item[0]) {
      case 'P': parts.push_back(make_path(k).graph()); break;
      case 'S': parts.push_back(make_star(k).graph()); break;
      case 'K': parts.push_back(make_complete(k)); break;
      default: parts.push_back(make_cycle(k)); break;
    }
  }
  if (parts.empty()) throw std::invalid_argument("empty forest");
  return disjoint_union(parts);
}

/// Reads the DOT subset written by to_dot: vertex and "u -- v" statements.
Graph parse_dot(const std::string& text) {
  std::vector<Edge> edges;
  int n = 0;
  std::stringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto dash = line.find("--");
    auto number = [&](std::string_view s) {
      const auto b = s.find_first_of("0123456789");
      const auto e = s.find_first_not_of("0123456789", b == std::string_view::npos ? 0 : b);
      if (b == std::string_view::npos) throw std::invalid_argument("bad DOT line '" + line + "'");
      return parse_count(s.substr(b, e == std::string_view::npos ? std::string_view::npos : e - b), "DOT vertex");
    };
    if (dash != std::string::npos) {
      const int u = number(std::string_view(line).substr(0, dash));
      const int v = number(std::string_view(line).substr(dash + 2));
      edges.emplace_back(u, v);
      n = std::max({n, u + 1, v + 1});
    } else if (line.find_first_of("{}") == std::string::npos &&
               line.find_first_of("0123456789") != std::string::npos) {
      n = std::max(n, number(line) + 1);
    }
  }
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.find('{') != std::string::npos) return parse_dot(text);
  std::stringstream lines(text);
  auto graphs = read_graph6_stream(lines);
  if (graphs.empty()) throw std::invalid_argument("no graph in '" + path + "'");
  return graphs.front();
}

std::string encode(const Graph& g, const std::string& format) {
  return format == "dot" ? to_dot(g) : encode_graph6(g) + "\n";
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << body;
}

json certificate_json(const WitnessCertificate& cert) {
  json j;
  j["n"] = cert.graph.vertex_count();
  j["degree"] = cert.claimed_degree;
  j["forbidden"] = describe(cert.forbidden);
  j["case_tag"] = cert.case_tag ? json(to_string(*cert.case_tag)) : json(nullptr);
  j["regular"] = cert.regular;
  j["free"] = cert.free;
  j["valid"] = cert.valid();
  j["graph6"] = encode_graph6(cert.graph);
  if (cert.counterexample) j["counterexample"] = cert.counterexample->mapping;
  return j;
}

std::string scalar(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void print_table(std::ostream& out, const json& report) {
  auto row = [&](const std::string& key, const json& v) {
    out << key << std::string(key.size() < 26 ? 26 - key.size() : 1, ' ') << scalar(v) << '\n';
  };
  for (const auto& [key, value] : report.items()) {
    if (value.is_object()) {
      for (const auto& [sub, v] : value.items()) row(key + "." + sub, v);
    } else {
      row(key, value);
    }
  }
}

struct Settings {
  bool json_output = false;
  int n = 0;
  std::optional<int> clique;
  std::string tree;
  bool certify = false;
  std::string format = "graph6";
  std::string out_path;
  std::string file;
  std::string forbidden;
  std::optional<int> degree;
  bool enumerate = false;
  bool dedup = false;
  int workers = 1;
  std::optional<int> max_n;
  std::string forest;
  std::optional<int> witness_n;
};

class Runner {
 public:
  Runner(const Settings& s, std::ostream& diag) : s_(s), diag_(diag) {}

  int regex(json& report) {
    const RegexResult r = s_.clique ? (s_.certify ? certified_regex_clique(s_.n, *s_.clique) : regex_clique(s_.n, *s_.clique))
                                    : (s_.certify ? certified_regex_tree(s_.n, parse_tree_spec(s_.tree))
                                                  : regex_tree(s_.n, parse_tree_spec(s_.tree)));
    report["value"] = r.value;
    report["case_tag"] = to_string(r.tag);
    report["rex"] = r.rex.str();
    report["advisory"] = r.advisory;
    return kOk;
  }

  int construct(json& report) {
    WitnessCertificate cert;
    if (s_.clique) {
      cert = clique_witness(s_.n, *s_.clique);
      report["value"] = regex_clique(s_.n, *s_.clique).value;
    } else {
      const Tree tree = parse_tree_spec(s_.tree);
      const auto r = regex_tree(s_.n, tree);
      cert = tree_witness(s_.n, tree, static_cast<int>(r.value));
      report["value"] = r.value;
    }
    if (cert.case_tag) report["case_tag"] = to_string(*cert.case_tag);
    report["advisory"] = !cert.valid();
    return emit_witness(report, cert);
  }

  int verify(json& report) {
    if (!s_.degree) throw std::invalid_argument("verify needs --degree");
    const auto cert = regexlab::verify(read_graph_file(s_.file), parse_pattern(s_.forbidden), *s_.degree);
    report["value"] = cert.valid();
    report["certificate"] = certificate_json(cert);
    return cert.valid() ? kOk : kCheckFailed;
  }

  int oracle(json& report) {
    const Pattern pattern = parse_pattern(s_.forbidden);
    SearchOptions options;
    options.max_n = bound();
    options.workers = s_.workers;
    options.dedup_isomorphic = s_.dedup;
    SearchStats stats;
    if (!s_.degree) {
      if (s_.enumerate) throw std::invalid_argument("--enumerate needs --degree");
      auto result = regex_oracle(s_.n, pattern, options, &stats);
      report["value"] = result.value;
      return emit_witness(report, regexlab::verify(result.witness, pattern, result.value), &stats);
    }
    const SearchSpec spec{s_.n, *s_.degree, pattern, s_.enumerate ? SearchMode::enumerate : SearchMode::exists};
    if (!s_.enumerate) {
      auto found = exists_regular_free(spec, options, &stats);
      report["value"] = found ? 1 : 0;
      if (!found) {
        finish(report, stats);
        return kCheckFailed;
      }
      return emit_witness(report, regexlab::verify(*found, pattern, *s_.degree), &stats);
    }
    const auto graphs = enumerate_regular_free(spec, options, &stats);
    report["value"] = graphs.size();
    std::string body;
    for (const auto& g : graphs) body += encode_graph6(g) + "\n";
    if (!s_.out_path.empty()) {
      write_file(s_.out_path, body);
      report["witness_path"] = s_.out_path;
    }
    finish(report, stats);
    if (s_.out_path.empty() && !s_.json_output) trailer_ = body;
    return graphs.empty() ? kCheckFailed : kOk;
  }

  int classify_tree(json& report) {
    const Tree tree = parse_tree_spec(s_.tree);
    const TreeClass c = classify(tree);
    report["value"] = {{"t", c.t},
                       {"is_star", c.is_star},
                       {"is_almost_star", c.is_almost_star},
                       {"is_A_t", c.is_A_t},
                       {"is_double_star", c.is_double_star},
                       {"bipartition", {c.bipartition_sizes.first, c.bipartition_sizes.second}}};
    return kOk;
  }

  int prop4(json& report) {
    const Graph forest = parse_forest(s_.forest);
    const bool verdict = prop4_infinitely_zero(forest);
    report["value"] = verdict;
    if (verdict || !s_.witness_n) return kOk;
    return emit_witness(report, zero_witness(*s_.witness_n, forest));
  }

 private:
  int bound() const {
    if (s_.max_n) return *s_.max_n;
    if (const char* env = std::getenv("REGEXLAB_MAX_N"); env != nullptr && *env != '\0') {
      return parse_count(env, "REGEXLAB_MAX_N");
    }
    return kDefaultSearchBound;
  }

  void finish(json&, const SearchStats& stats) {
    diag_ << "search: " << stats.nodes << " nodes, " << stats.tasks << " tasks\n";
  }

  int emit_witness(json& report, const WitnessCertificate& cert, const SearchStats* stats = nullptr) {
    report["certificate"] = certificate_json(cert);
    if (!s_.out_path.empty()) {
      write_file(s_.out_path, encode(cert.graph, s_.format));
      report["witness_path"] = s_.out_path;
    }
    if (stats != nullptr) finish(report, *stats);
    if (s_.out_path.empty() && s_.format == "dot" && !s_.json_output) trailer_ = to_dot(cert.graph);
    return cert.valid() ? kOk : kCheckFailed;
  }

 public:
  std::string trailer_;

 private:
  const Settings& s_;
  std::ostream& diag_;
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Regular Turan numbers: closed forms, witnesses and exhaustive search", "regexlab"};
  app.footer(kTreeGrammar);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", s.json_output, "Machine-readable output");

  auto* regex = app.add_subcommand("regex", "Closed-form regex(n,F) for a clique or tree");
  auto* construct = app.add_subcommand("construct", "Build and certify an extremal witness");
  for (auto* sub : {regex, construct}) {
    sub->add_option("--n", s.n, "Vertex count")->required()->check(CLI::PositiveNumber);
    auto* clique = sub->add_option("--clique", s.clique, "r, forbidding K_{r+1}");
    auto* tree = sub->add_option("--tree", s.tree, "Forbidden tree SPEC");
    clique->excludes(tree);
  }
  regex->add_flag("--certify", s.certify, "Clear the advisory flag by building a verified witness");
  for (auto* sub : {construct}) {
    sub->add_option("--format", s.format, "Witness format")->check(CLI::IsMember({"graph6", "dot"}));
    sub->add_option("--out", s.out_path, "Witness file");
  }

  auto* verify = app.add_subcommand("verify", "Check that a graph is d-regular and F-free");
  verify->add_option("--file", s.file, "graph6 or DOT file")->required();
  verify->add_option("--forbidden", s.forbidden, "Forbidden pattern")->required();
  verify->add_option("--degree", s.degree, "Claimed degree")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search for regular F-free graphs");
  oracle->add_option("--n", s.n, "Vertex count")->required();
  oracle->add_option("--forbidden", s.forbidden, "Forbidden pattern")->required();
  oracle->add_option("--degree", s.degree, "Fix the degree (value = number of graphs found)");
  oracle->add_flag("--enumerate", s.enumerate, "List every graph of the given degree");
  oracle->add_flag("--dedup", s.dedup, "One graph per isomorphism class");
  oracle->add_option("--workers", s.workers, "Worker threads")->check(CLI::PositiveNumber);
  oracle->add_option("--max-n", s.max_n, "Size bound (default 14, or REGEXLAB_MAX_N)");
  oracle->add_option("--format", s.format, "Witness format")->check(CLI::IsMember({"graph6", "dot"}));
  oracle->add_option("--out", s.out_path, "Witness file (graph6 lines when enumerating)");

  auto* classify_tree = app.add_subcommand("classify-tree", "Structural class of a tree");
  classify_tree->add_option("--tree", s.tree, "Tree SPEC")->required();

  auto* prop4 = app.add_subcommand("prop4", "Is regex(n,F) = 0 for infinitely many n?");
  prop4->add_option("--forest", s.forest, "Comma-separated components")->required();
  prop4->add_option("--n", s.witness_n, "Build a 2-regular F-free witness on n vertices when the verdict is false");
  prop4->add_option("--format", s.format, "Witness format")->check(CLI::IsMember({"graph6", "dot"}));
  prop4->add_option("--out", s.out_path, "Witness file");

  std::vector<std::string> argv_store{"regexlab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  auto* active = app.get_subcommands().front();
  if ((active == regex || active == construct) && !s.clique && s.tree.empty()) {
    err << "error: " << active->get_name() << " needs --clique or --tree\n";
    return kUsage;
  }

  json report;
  report["command"] = active->get_name();
  json params = json::object();
  for (const CLI::Option* opt : active->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const std::string key = opt->get_name().substr(2);
    if (opt->get_expected_max() == 0) {
      params[key] = true;
    } else if (const auto text = opt->as<std::string>(); is_count(text)) {
      params[key] = parse_count(text, key);
    } else {
      params[key] = text;
    }
  }
  report["params"] = params;

  Runner runner(s, err);
  int code = kOk;
  try {
    if (active == regex) code = runner.regex(report);
    else if (active == construct) code = runner.construct(report);
    else if (active == verify) code = runner.verify(report);
    else if (active == oracle) code = runner.oracle(report);
    else if (active == classify_tree) code = runner.classify_tree(report);
    else code = runner.prop4(report);
  } catch (const OracleRefusal& e) {
    err << "error: " << e.what() << '\n';
    return kRefused;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }

  if (s.json_output) {
    out << report.dump(2) << '\n';
  } else {
    print_table(out, report);
    out << runner.trailer_;
  }
  return code;
}

}  // namespace regexlab::cli
