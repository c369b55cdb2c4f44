// Copyright 2026 The burling-tools Authors
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

// Command-line front end. Exit codes: 0 affirmative, 1 negative verdict,
// 2 input error, 3 budget exceeded.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "burling/generators.hpp"
#include "burling/graph.hpp"
#include "burling/recognition.hpp"
#include "burling/sequential.hpp"
#include "burling/structure.hpp"
#include "burling/transforms.hpp"
#include "burling/tree.hpp"

namespace {

using namespace burling;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::string join(const VertexSet& s) {
  std::string out;
  for (const auto& v : s) out += (out.empty() ? "" : " ") + v;
  return out;
}

std::string join(const std::vector<VertexId>& s) {
  std::string out;
  for (const auto& v : s) out += (out.empty() ? "" : " ") + v;
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error("not an integer list: '" + text + "'");
    }
  }
  return out;
}

int to_int(const std::string& text) {
  auto v = parse_ints(text);
  if (v.size() != 1) throw Error("not an integer: '" + text + "'");
  return v[0];
}

// ---- derive / verify ------------------------------------------------------

int run_derive(const std::string& tree_path) {
  Derivation d = parse_derivation(read_input(tree_path));
  require_valid(d);
  std::cout << serialize(derive(d));
  return kOk;
}

int run_verify(const std::string& tree_path, const std::string& graph_path) {
  if (tree_path == "-" && graph_path == "-") throw Error("only one input may be '-'");
  Derivation d = parse_derivation(read_input(tree_path));
  AnyGraph g = parse_graph(read_input(graph_path));
  std::optional<std::string> mismatch;
  if (auto* o = std::get_if<OrientedGraph>(&g)) {
    mismatch = derivation_mismatch(*o, d);
  } else {
    auto errors = validate_tree(d.tree);
    if (!errors.empty()) {
      mismatch = errors.front();
    } else if (underlying(derive(d)) != std::get<Graph>(g)) {
      mismatch = "the underlying graph of the derived graph differs from the input";
    }
  }
  if (mismatch) {
    std::cout << "MISMATCH " << *mismatch << "\n";
    return kNegative;
  }
  std::cout << "OK\n";
  return kOk;
}

// ---- recognize / nobility -------------------------------------------------

struct RecognizeArgs {
  std::string graph;
  std::size_t budget = kDefaultExactBudget;
  bool obstructions_only = false;
  std::string cert;
  int threads = 1;
  std::size_t hole_budget = 24;
};

int run_recognize(const RecognizeArgs& a) {
  AnyGraph g = parse_graph(read_input(a.graph));
  RecognizeOptions opts;
  opts.budget = a.budget;
  opts.obstructions_only = a.obstructions_only;
  opts.threads = a.threads;
  opts.hole_budget = a.hole_budget;
  Verdict v = std::holds_alternative<Graph>(g) ? recognize(std::get<Graph>(g), opts)
                                               : recognize_oriented(std::get<OrientedGraph>(g), opts);
  if (!a.cert.empty()) write_output(a.cert, serialize(v));
  switch (v.outcome) {
    case Verdict::Outcome::Burling:
      std::cout << "BURLING\n";
      return kOk;
    case Verdict::Outcome::NotBurling:
      std::cout << "NOT_BURLING " << to_string(v.reason) << "\n";
      return kNegative;
    case Verdict::Outcome::Undecided:
      break;
  }
  std::cout << "UNDECIDED\n";
  return kBudget;
}

int run_nobility(const std::string& path, bool oriented, std::size_t budget, int threads) {
  AnyGraph g = parse_graph(read_input(path));
  SearchOptions opts;
  opts.budget = budget;
  opts.threads = threads;
  std::optional<int> k;
  if (oriented) {
    auto* o = std::get_if<OrientedGraph>(&g);
    if (!o) throw Error("--oriented needs a directed graph file");
    k = nobility_oriented(*o, opts);
  } else {
    // For a directed file this is the nobility of its underlying graph.
    const Graph u = std::holds_alternative<Graph>(g) ? std::get<Graph>(g)
                                                     : underlying(std::get<OrientedGraph>(g));
    k = nobility(u, opts);
  }
  if (!k) {
    std::cout << "NOT_BURLING\n";
    return kNegative;
  }
  std::cout << *k << "\n";
  return kOk;
}

// ---- transform ------------------------------------------------------------

int run_transform(const std::string& path, const std::string& op,
                  const std::vector<std::string>& args) {
  Derivation d = parse_derivation(read_input(path));
  auto want = [&](std::size_t n, const char* usage) {
    if (args.size() != n) throw Error("usage: transform <tree-file> " + op + " " + usage);
  };
  Derivation out;
  if (op == "normalize") {
    want(0, "");
    out = normalize(d);
  } else if (op == "subdivide-bottom") {
    want(3, "<u> <v> <w>");
    out = subdivide_bottom(d, args[0], args[1], args[2]);
  } else if (op == "top-subdivide") {
    want(3, "<u> <v> <w>");
    out = top_subdivide(d, args[0], args[1], args[2]);
  } else if (op == "contract") {
    want(2, "<u> <v>");
    out = contract(d, args[0], args[1]);
  } else if (op == "expand") {
    want(1, "<u>v:bottom|top:len,...>");
    out = expand_arcs(d, parse_expand_plan(args[0]));
  } else {
    throw Error("unknown transform '" + op +
                "' (normalize, subdivide-bottom, top-subdivide, expand, contract)");
  }
  std::cout << serialize(out);
  return kOk;
}

// ---- decompose / analyze --------------------------------------------------

int run_decompose(const std::string& path) {
  AnyGraph g = parse_graph(read_input(path));
  auto* o = std::get_if<OrientedGraph>(&g);
  if (!o) throw Error("decompose needs a directed graph file");
  DecompositionNode root = decompose(*o);
  std::cout << serialize(root);
  return has_failure(root) ? kNegative : kOk;
}

void print_holes(const Graph& u, const OrientedGraph* o) {
  std::cout << "holes:\n";
  for (const auto& h : enumerate_holes(u, 24, kDefaultHoleCap)) {
    std::cout << "  - cycle: " << join(h.cycle) << "\n";
    if (!o) continue;
    auto rs = hole_readings(*o, h);
    if (rs.empty()) {
      std::cout << "    chandelier: no\n";
      continue;
    }
    std::cout << "    readings:\n";
    for (const auto& r : rs) {
      std::cout << "      - pivot: " << r.pivot << "\n";
      std::cout << "        antennas: " << r.antennas.first << " " << r.antennas.second << "\n";
      std::cout << "        bottom: " << r.bottom << "\n";
      std::cout << "        subordinate: " << join(r.subordinate) << "\n";
    }
  }
}

void print_cutsets(const std::vector<StarCutset>& cs, const char* title) {
  std::cout << title << ":\n";
  for (const auto& c : cs) {
    std::cout << "  - center: " << c.center << "\n";
    std::cout << "    cutset: " << join(c.cutset) << "\n";
    std::cout << "    components:\n";
    for (const auto& comp : c.components) std::cout << "      - " << join(comp) << "\n";
  }
}

void print_top_set(const Derivation& d, const char* source) {
  TopSetReport r = top_set(d);
  std::cout << "top_set:\n";
  std::cout << "  source: " << source << "\n";
  std::cout << "  vertices: " << join(r.top_set) << "\n";
  std::cout << "  pivots: " << join(r.pivots) << "\n";
  std::cout << "  antennas: " << join(r.antennas) << "\n";
}

// Accepts a graph file or a tree file. The top-set needs a tree: for a
// graph file one is looked for with the exact search.
int run_analyze(const std::string& path, std::size_t budget) {
  const std::string text = read_input(path);
  std::optional<Derivation> tree;
  AnyGraph g;
  try {
    g = parse_graph(text);
  } catch (const ParseError& graph_error) {
    try {
      tree = parse_derivation(text);
    } catch (const ParseError&) {
      throw graph_error;
    }
    require_valid(*tree);
    g = derive(*tree);
  }
  const OrientedGraph* o = std::get_if<OrientedGraph>(&g);
  const Graph u = o ? underlying(*o) : std::get<Graph>(g);
  std::cout << "graph: " << (o ? "directed" : "undirected") << "\n";
  std::cout << "vertices: " << u.num_vertices() << "\n";
  std::cout << "edges: " << u.num_edges() << "\n";

  if (tree) {
    print_top_set(*tree, "tree file");
  } else if (o) {
    RecognizeOptions opts;
    opts.budget = budget;
    try {
      Verdict v = recognize_oriented(*o, opts);
      if (v.derivation) {
        print_top_set(*v.derivation, "search");
      } else {
        std::cout << "top_set: none (not derivable: " << to_string(v.reason) << ")\n";
      }
    } catch (const ResourceError&) {
      std::cout << "top_set: unknown (over budget)\n";
    }
  } else {
    std::cout << "top_set: none (undirected graph)\n";
  }
  print_holes(u, o);
  if (o) {
    print_cutsets(full_in_star_cutsets(*o), "in_star_cutsets");
  } else {
    print_cutsets(full_star_cutsets(u), "star_cutsets");
  }
  return kOk;
}

// ---- gen ------------------------------------------------------------------

int run_gen(const std::string& family, const std::vector<std::string>& p) {
  auto want = [&](std::size_t n, const char* usage) {
    if (p.size() != n) throw Error("usage: gen " + family + " " + usage);
  };
  FigureInstance out;
  if (family == "wheel") {
    want(2, "<rim> <spokes, e.g. 0,2,4>");
    out = gen_wheel(to_int(p[0]), parse_ints(p[1]));
  } else if (family == "theta") {
    want(3, "<l1> <l2> <l3>");
    out = gen_theta(to_int(p[0]), to_int(p[1]), to_int(p[2]));
  } else if (family == "flower") {
    want(2, "<core> <petal lengths, e.g. 3,3,3,3>");
    out = gen_flower(to_int(p[0]), parse_ints(p[1]));
  } else if (family == "k4") {
    want(1, "<ab,ac,ad,bc,bd,cd lengths>");
    auto ls = parse_ints(p[0]);
    if (ls.size() != 6) throw Error("k4 needs six path lengths");
    out = gen_k4_subdivision({ls[0], ls[1], ls[2], ls[3], ls[4], ls[5]});
  } else if (family == "chandelier") {
    want(1, "<parent indices, -1 for the sink>");
    out = gen_chandelier(parse_ints(p[0]));
  } else if (family == "luxury-chandelier") {
    want(1, "<parent indices, -1 for the sink>");
    out = gen_luxury_chandelier(parse_ints(p[0]));
  } else if (family == "figure") {
    want(1, "<name>");
    out = gen_figure(p[0]);
  } else if (family == "figures") {
    want(0, "");
    for (const auto& n : figure_names()) std::cout << n << "\n";
    return kOk;
  } else if (family == "random-tree") {
    want(2, "<seed> <max tree vertices>");
    std::mt19937_64 rng(static_cast<std::uint64_t>(std::stoull(p[0])));
    out = random_derivation(rng, to_int(p[1]));
  } else {
    throw Error("unknown family '" + family +
                "' (wheel, theta, flower, k4, chandelier, luxury-chandelier, figure, figures, "
                "random-tree)");
  }
  std::cout << serialize(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burling trees, derived graphs and Burling graph recognition"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string tree_path;
  std::string graph_path;
  std::size_t budget = kDefaultExactBudget;
  int threads = 1;

  auto* derive_cmd = app.add_subcommand("derive", "Print the graph derived from a tree file");
  derive_cmd->add_option("tree", tree_path, "Tree file ('-' for stdin)")->required();
  derive_cmd->callback([&] { action = [&] { return run_derive(tree_path); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Check that a tree derives a graph");
  verify_cmd->add_option("tree", tree_path, "Tree file or certificate")->required();
  verify_cmd->add_option("graph", graph_path, "Graph file")->required();
  verify_cmd->callback([&] { action = [&] { return run_verify(tree_path, graph_path); }; });

  RecognizeArgs rec;
  auto* rec_cmd = app.add_subcommand("recognize", "Decide whether a graph is a Burling graph");
  rec_cmd->add_option("graph", rec.graph, "Graph file ('-' for stdin)")->required();
  rec_cmd->add_option("--budget", rec.budget, "Largest graph for the exact search")
      ->envname("BURLING_BUDGET");
  rec_cmd->add_flag("--obstructions-only", rec.obstructions_only,
                    "Run the detectors only; never the exact search");
  rec_cmd->add_option("--cert", rec.cert, "Write the certificate here ('-' for stdout)");
  rec_cmd->add_option("--threads", rec.threads, "Worker threads for the exact search")
      ->check(CLI::PositiveNumber);
  rec_cmd->add_option("--hole-budget", rec.hole_budget,
                      "Largest graph on which holes are enumerated");
  rec_cmd->callback([&] { action = [&] { return run_recognize(rec); }; });

  bool oriented = false;
  auto* nob_cmd = app.add_subcommand("nobility", "Print the nobility of a graph");
  nob_cmd->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
  nob_cmd->add_flag("--oriented", oriented, "Keep the orientation of a directed graph");
  nob_cmd->add_option("--budget", budget, "Largest graph for the exact search")
      ->envname("BURLING_BUDGET");
  nob_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  nob_cmd->callback([&] {
    action = [&] { return run_nobility(graph_path, oriented, budget, threads); };
  });

  std::string op;
  std::vector<std::string> op_args;
  auto* tr_cmd = app.add_subcommand("transform", "Rewrite a tree file");
  tr_cmd->add_option("tree", tree_path, "Tree file ('-' for stdin)")->required();
  tr_cmd->add_option("op", op, "normalize, subdivide-bottom, top-subdivide, expand, contract")
      ->required();
  tr_cmd->add_option("args", op_args, "Arguments of the operation");
  tr_cmd->callback([&] { action = [&] { return run_transform(tree_path, op, op_args); }; });

  auto* dec_cmd = app.add_subcommand("decompose", "Decomposition tree of a directed graph");
  dec_cmd->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
  dec_cmd->callback([&] { action = [&] { return run_decompose(graph_path); }; });

  auto* an_cmd = app.add_subcommand("analyze", "Top-set, holes and star cutsets");
  an_cmd->add_option("input", graph_path, "Graph or tree file ('-' for stdin)")->required();
  an_cmd->add_option("--budget", budget, "Largest graph for the exact search")
      ->envname("BURLING_BUDGET");
  an_cmd->callback([&] { action = [&] { return run_analyze(graph_path, budget); }; });

  std::string family;
  std::vector<std::string> params;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a family member or a figure");
  gen_cmd->add_option("family", family, "wheel, theta, flower, k4, chandelier, ...")->required();
  gen_cmd->add_option("params", params, "Family parameters");
  gen_cmd->callback([&] { action = [&] { return run_gen(family, params); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    return action();
  } catch (const ResourceError& e) {
    std::cerr << "burling: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "burling: " << e.what() << "\n";
    return kInputError;
  }
}
