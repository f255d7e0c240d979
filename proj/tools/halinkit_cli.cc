// Copyright 2026 The Halinkit Authors
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


// halinkit: command-line front end. Prints one JSON report per run, or a
// plain-text rendering of it with --pretty.
//
// Exit codes: 0 success, 2 input or usage error, 3 precondition error,
// 4 search budget or truncation exhausted.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "halinkit/automorphisms.h"
#include "halinkit/errors.h"
#include "halinkit/generators.h"
#include "halinkit/graph.h"
#include "halinkit/graph_io.h"
#include "halinkit/halin_limit.h"
#include "halinkit/invariants.h"
#include "halinkit/perm_group.h"
#include "halinkit/perm_topology.h"
#include "halinkit/serialize.h"

#ifndef HALINKIT_VERSION
#define HALINKIT_VERSION "0.0.0"
#endif

namespace halinkit {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitExhausted = 4;

// Errors in reading flags or input; reported with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphFlags {
  std::string family;
  int n = 0;
  int depth = 0;
  std::string input;
};

void AddGraphFlags(CLI::App* cmd, GraphFlags& flags) {
  cmd->add_option("--family", flags.family,
                  "path, cycle, complete, petersen, binary-tree or comb");
  cmd->add_option("--n", flags.n, "vertex count for path/cycle/complete");
  cmd->add_option("--depth", flags.depth, "depth for binary-tree/comb");
  cmd->add_option("--input", flags.input,
                  "graph6 or JSON edge-list file, '-' for stdin");
}

std::string ReadAll(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct LoadedGraph {
  Graph graph;
  std::string source;
};

LoadedGraph LoadGraph(const GraphFlags& flags) {
  const bool has_family = !flags.family.empty();
  const bool has_input = !flags.input.empty();
  if (has_family == has_input) {
    throw InputError("give exactly one of --family or --input");
  }
  try {
    if (has_input) {
      return {ParseGraphAuto(ReadAll(flags.input)), "input:" + flags.input};
    }
    const bool tree = flags.family == "binary-tree" || flags.family == "comb";
    const int size = tree ? flags.depth : flags.n;
    if (flags.family != "petersen" && size < 1) {
      throw InputError(std::string("family ") + flags.family + " needs " +
                       (tree ? "--depth" : "--n") + " >= 1");
    }
    std::string source = "family:" + flags.family;
    if (flags.family != "petersen") source += ":" + std::to_string(size);
    return {GenerateByName(flags.family, size), source};
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
}

std::string Digest(const Graph& g) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : EncodeGraph6(g)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

Json InputJson(const LoadedGraph& loaded) {
  return {{"source", loaded.source},
          {"vertices", loaded.graph.num_vertices()},
          {"edges", loaded.graph.num_edges()},
          {"digest", "fnv1a64:" + Digest(loaded.graph)}};
}

VertexSet ParseVertexList(const std::string& text, int n) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InputError("bad vertex \"" + item + "\"");
    if (v < 0 || v >= n) {
      throw InputError("vertex " + item + " out of range [0, " +
                       std::to_string(n) + ")");
    }
    out.push_back(v);
  }
  return MakeVertexSet(std::move(out));
}

SearchOptions OptionsFromEnvironment() {
  SearchOptions options;
  if (const char* budget = std::getenv("HALINKIT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(budget, &end, 10);
    if (end == budget || *end != '\0' || value == 0) {
      throw InputError(std::string("HALINKIT_BUDGET must be a positive integer, got \"") +
                       budget + "\"");
    }
    options.subset_budget = value;
  }
  return options;
}

// Plain-text rendering for --pretty.
std::string Scalar(const Json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

bool IsTable(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const Json& row : j) {
    if (!row.is_object()) return false;
  }
  return true;
}

void Render(const Json& j, int indent, std::ostream& out) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      Render(value, indent + 2, out);
    } else if (IsTable(value)) {
      out << pad << key << ":\n";
      std::vector<std::string> columns;
      for (const auto& [column, cell] : value.front().items()) columns.push_back(column);
      std::vector<std::vector<std::string>> rows;
      std::vector<std::size_t> width;
      for (const std::string& c : columns) width.push_back(c.size());
      for (const Json& row : value) {
        std::vector<std::string> cells;
        for (std::size_t c = 0; c < columns.size(); ++c) {
          cells.push_back(row.contains(columns[c]) ? Scalar(row[columns[c]]) : "");
          width[c] = std::max(width[c], cells.back().size());
        }
        rows.push_back(std::move(cells));
      }
      auto line = [&](const std::vector<std::string>& cells) {
        out << pad << "  ";
        for (std::size_t c = 0; c < cells.size(); ++c) {
          out << std::left << std::setw(static_cast<int>(width[c]) + 2) << cells[c];
        }
        out << "\n";
      };
      line(columns);
      for (const auto& row : rows) line(row);
    } else {
      out << pad << key << ": " << Scalar(value) << "\n";
    }
  }
}

struct Report {
  Json input;
  Json result;
  int exit_code = kExitOk;
};

Report RunAut(const GraphFlags& flags) {
  const LoadedGraph g = LoadGraph(flags);
  return {InputJson(g), GroupToJson(AutomorphismGroup(g.graph))};
}

Report RunBase(const GraphFlags& flags) {
  const LoadedGraph g = LoadGraph(flags);
  const SearchOptions options = OptionsFromEnvironment();
  const PermGroup aut = AutomorphismGroup(g.graph);
  const SubsetWitness base = DeterminingNumber(aut, options);
  return {InputJson(g),
          {{"order", OrderToJson(aut.order())},
           {"determining_number", base.size},
           {"witness", base.witness}}};
}

Report RunCost(const GraphFlags& flags) {
  const LoadedGraph g = LoadGraph(flags);
  const SearchOptions options = OptionsFromEnvironment();
  const PermGroup aut = AutomorphismGroup(g.graph);
  const std::optional<SubsetWitness> cost = DistinguishingCost(aut, options);
  Json result = {{"order", OrderToJson(aut.order())}};
  result["rho"] = cost ? Json(cost->size) : Json(nullptr);
  result["witness"] = cost ? Json(cost->witness) : Json(nullptr);
  return {InputJson(g), result};
}

Report RunMotion(const GraphFlags& flags) {
  const LoadedGraph g = LoadGraph(flags);
  const SearchOptions options = OptionsFromEnvironment();
  const PermGroup aut = AutomorphismGroup(g.graph);
  Json result = MotionToJson(Motion(aut, options));
  result["order"] = OrderToJson(aut.order());
  return {InputJson(g), result};
}

Report RunGreedy(const GraphFlags& flags, const std::string& base_text) {
  const LoadedGraph g = LoadGraph(flags);
  const PermGroup aut = AutomorphismGroup(g.graph);
  VertexSet base;
  std::string origin = "given";
  if (base_text.empty()) {
    base = DeterminingNumber(aut, OptionsFromEnvironment()).witness;
    origin = "minimum";
  } else {
    base = ParseVertexList(base_text, g.graph.num_vertices());
  }
  Json result = {{"base_origin", origin}};
  result["chain"] = ChainToJson(GreedyDistinguishingChain(aut, base));
  return {InputJson(g), result};
}

Report RunSubdegrees(const GraphFlags& flags) {
  const LoadedGraph g = LoadGraph(flags);
  const PermGroup aut = AutomorphismGroup(g.graph);
  return {InputJson(g), {{"order", OrderToJson(aut.order())},
                         {"subdegrees", SubdegreesToJson(SubdegreeReport(aut))}}};
}

struct LimitFlags {
  std::string family = "binary-tree";
  int depth = 0;
  int k = 0;
  bool maps = false;
  std::size_t max_witnesses = 32;
};

Report RunLimitSim(const LimitFlags& flags) {
  TruncatedFamily family;
  int depth = flags.depth;
  if (flags.family == "binary-tree") {
    if (depth == 0) depth = RequiredTreeDepth(flags.k);
    if (depth < 1 || depth > 24) throw InputError("--depth must be in [1, 24]");
    family = BinaryTree(depth);
  } else if (flags.family == "comb") {
    if (depth < 1) throw InputError("comb needs --depth >= 1");
    family = Comb(depth);
  } else {
    throw InputError("limit-sim supports binary-tree and comb, got " + flags.family);
  }
  const ConstructionState state = RunConstruction(family, flags.k);
  Report report;
  report.input = {{"source", "family:" + flags.family + ":" + std::to_string(depth)},
                  {"vertices", family.graph.num_vertices()},
                  {"edges", family.graph.num_edges()},
                  {"digest", "fnv1a64:" + Digest(family.graph)}};
  report.result["construction"] = ConstructionToJson(state, flags.maps);
  report.result["invariant_violations"] = CheckConstruction(state);
  if (state.exhausted) {
    report.exit_code = kExitExhausted;
    return report;
  }
  report.result["distinctness"] = DistinctnessToJson(
      VerifyDistinctness(state, flags.k, flags.max_witnesses > 0),
      flags.max_witnesses);
  // id, alpha_0, ..., alpha_{K-1} for the all-ones word, against the
  // exhaustion by the F_k.
  const EpsilonWord ones(std::vector<int>(flags.k, 1));
  const std::vector<Permutation> sequence = AlphaSequence(state, ones);
  Json cauchy = Json::array();
  const std::vector<Dyadic> table =
      CheckCauchy(Exhaustion::FromConstruction(state), sequence);
  for (std::size_t k = 0; k < table.size(); ++k) {
    cauchy.push_back({{"k", k},
                      {"max_tail_distance", DyadicToJson(table[k])},
                      {"bound", DyadicToJson(Dyadic::PowerOfHalf(static_cast<int>(k) + 1))},
                      {"within", table[k] <= Dyadic::PowerOfHalf(static_cast<int>(k) + 1)}});
  }
  report.result["cauchy_word"] = ones.ToString();
  report.result["cauchy"] = cauchy;
  return report;
}

struct TopologyFlags {
  std::string exhaustion = "prefix";
  std::vector<std::string> perms;
  int triples = 1000;
  std::uint64_t seed = 1;
};

Exhaustion ParseExhaustion(const std::string& text, int n) {
  if (text == "prefix") return Exhaustion::Prefixes(n);
  std::vector<VertexSet> sets;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) sets.push_back(ParseVertexList(part, n));
  try {
    return Exhaustion(n, std::move(sets));
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
}

Permutation ParsePermutation(const std::string& text, int n) {
  std::vector<int> images;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      images.push_back(std::stoi(item, &used));
      if (used != item.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad permutation entry \"" + item + "\"");
    }
  }
  if (static_cast<int>(images.size()) != n) {
    throw InputError("permutation \"" + text + "\" has degree " +
                     std::to_string(images.size()) + ", graph has " +
                     std::to_string(n) + " vertices");
  }
  try {
    return Permutation(std::move(images));
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
}

Report RunTopology(const GraphFlags& graph_flags, const TopologyFlags& flags) {
  const LoadedGraph g = LoadGraph(graph_flags);
  const int n = g.graph.num_vertices();
  const Exhaustion e = ParseExhaustion(flags.exhaustion, n);
  std::vector<Permutation> perms;
  for (const std::string& p : flags.perms) perms.push_back(ParsePermutation(p, n));

  Json exhaustion = Json::array();
  for (const VertexSet& s : e.sets()) exhaustion.push_back(s);
  Report report{InputJson(g), {{"exhaustion", exhaustion}, {"cover", e.cover()}}};

  Json distances = Json::array();
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = i + 1; j < perms.size(); ++j) {
      const std::optional<int> conf = Confluent(e, perms[i], perms[j]);
      distances.push_back({{"a", i},
                           {"b", j},
                           {"conf", conf ? Json(*conf) : Json("equal-on-all")},
                           {"d", DyadicToJson(Dist(e, perms[i], perms[j]))},
                           {"d_star", DyadicToJson(DistStar(e, perms[i], perms[j]))}});
    }
  }
  report.result["distances"] = distances;

  const PermGroup aut = AutomorphismGroup(g.graph);
  report.result["order"] = OrderToJson(aut.order());
  if (flags.triples > 0) {
    const std::vector<std::string> violations =
        CheckUltrametric(e, RandomTriples(aut, flags.triples, flags.seed));
    report.result["ultrametric"] = {{"triples", flags.triples},
                                    {"seed", flags.seed},
                                    {"violations", violations}};
  }
  if (aut.order() <= kDefaultEnumerationLimit) {
    Json balls = Json::array();
    for (int k = 0; k < e.size(); ++k) {
      const BallReport b = BallVersusStabilizer(aut, e, k);
      balls.push_back({{"k", k},
                       {"ball_size", b.ball_size},
                       {"stabilizer_order", OrderToJson(b.stabilizer_order)},
                       {"matches", b.matches}});
    }
    report.result["balls"] = balls;
  }
  return report;
}

int Main(int argc, char** argv) {
  CLI::App app{"Graph symmetry toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HALINKIT_VERSION);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "render tables instead of JSON");

  GraphFlags graph;
  std::string base_text;
  LimitFlags limit;
  TopologyFlags topology;

  auto* aut = app.add_subcommand("aut", "automorphism group generators and order");
  auto* base = app.add_subcommand("base", "determining number and a minimum base");
  auto* cost = app.add_subcommand("cost", "distinguishing cost and a witness set");
  auto* motion = app.add_subcommand("motion", "minimum motion of a nontrivial automorphism");
  auto* greedy = app.add_subcommand("greedy", "greedy distinguishing chain from a base");
  auto* subdegrees = app.add_subcommand("subdegrees", "largest point-stabilizer orbit per vertex");
  auto* limit_sim = app.add_subcommand("limit-sim", "simulate the 2^K automorphism construction");
  auto* topo = app.add_subcommand("topology", "permutation distances over an exhaustion");
  for (CLI::App* cmd : {aut, base, cost, motion, greedy, subdegrees, topo}) {
    AddGraphFlags(cmd, graph);
    cmd->add_flag("--pretty", pretty, "render tables instead of JSON");
  }
  greedy->add_option("--base", base_text, "comma-separated base (default: a minimum base)");
  limit_sim->add_option("--family", limit.family, "binary-tree or comb");
  limit_sim->add_option("--depth", limit.depth, "truncation depth (binary-tree default: smallest sufficient)");
  limit_sim->add_option("--k", limit.k, "rounds K")->required()->check(CLI::Range(1, 20));
  limit_sim->add_flag("--maps", limit.maps, "include phi_k image arrays");
  limit_sim->add_option("--max-witnesses", limit.max_witnesses, "witness records to print");
  limit_sim->add_flag("--pretty", pretty, "render tables instead of JSON");
  topo->add_option("--exhaustion", topology.exhaustion,
                   "'prefix' or sets separated by ';', e.g. 0;0,1;0,1,2");
  topo->add_option("--perm", topology.perms, "permutation as comma-separated images (repeatable)");
  topo->add_option("--triples", topology.triples, "random triples for the ultrametric sweep")
      ->check(CLI::NonNegativeNumber);
  topo->add_option("--seed", topology.seed, "seed for the sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (cmd == aut) report = RunAut(graph);
    if (cmd == base) report = RunBase(graph);
    if (cmd == cost) report = RunCost(graph);
    if (cmd == motion) report = RunMotion(graph);
    if (cmd == greedy) report = RunGreedy(graph, base_text);
    if (cmd == subdegrees) report = RunSubdegrees(graph);
    if (cmd == limit_sim) report = RunLimitSim(limit);
    if (cmd == topo) report = RunTopology(graph, topology);
  } catch (const InputError& e) {
    std::cerr << "halinkit: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "halinkit: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "halinkit: precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ExhaustedError& e) {
    std::cerr << "halinkit: exhausted: " << e.what() << "\n";
    return kExitExhausted;
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start).count();

  std::vector<std::string> args(argv + 1, argv + argc);
  Json out = {{"command", {{"name", cmd->get_name()}, {"args", args}}},
              {"input", report.input},
              {"result", report.result},
              {"version", HALINKIT_VERSION}};
  out["wall_time_ms"] = std::round(ms * 1000.0) / 1000.0;
  if (pretty) {
    Render(out, 0, std::cout);
  } else {
    std::cout << out.dump() << "\n";
  }
  if (report.exit_code == kExitExhausted) {
    std::cerr << "halinkit: exhausted after "
              << report.result["construction"]["rounds_completed"] << " of "
              << limit.k << " rounds\n";
  }
  return report.exit_code;
}

}  // namespace
}  // namespace halinkit

int main(int argc, char** argv) { return halinkit::Main(argc, argv); }
