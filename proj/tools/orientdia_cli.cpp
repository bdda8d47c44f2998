// Command-line front end. Talks to the library only through the C API.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "orientdia/orientdia.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitContract = 3;
constexpr int kExitVerifyFailed = 4;

struct Failure {
  int code;
};

int exit_code(od_status s) {
  switch (s) {
    case OD_OK: return kExitOk;
    case OD_ERR_INPUT:
    case OD_ERR_RESOURCE: return kExitInput;
    case OD_ERR_INFEASIBLE: return kExitInfeasible;
    case OD_ERR_CONTRACT:
    case OD_ERR_INTERNAL: return kExitContract;
  }
  return kExitContract;
}

void check(od_status s) {
  if (s == OD_OK) return;
  std::cerr << "error: " << od_last_error() << "\n";
  throw Failure{exit_code(s)};
}

struct GraphDeleter {
  void operator()(od_graph* g) const { od_graph_free(g); }
};
struct DigraphDeleter {
  void operator()(od_digraph* d) const { od_digraph_free(d); }
};
struct StringDeleter {
  void operator()(char* s) const { od_string_free(s); }
};
using GraphPtr = std::unique_ptr<od_graph, GraphDeleter>;
using DigraphPtr = std::unique_ptr<od_digraph, DigraphDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

GraphPtr load_graph(const std::string& path) {
  od_graph* g = nullptr;
  check(od_graph_load(path.c_str(), &g));
  return GraphPtr(g);
}

void write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{kExitInput};
  }
}

void print(const char* text) { std::cout << text << std::flush; }

unsigned default_threads() {
  if (const char* env = std::getenv("ORIENTDIA_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    std::cerr << "warning: ignoring ORIENTDIA_THREADS=" << env << "\n";
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong orientations of bridgeless graphs with small diameter"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string arcs_path;

  auto* decompose = app.add_subcommand("decompose", "Blocks, cut vertices and bridges as JSON");
  decompose->add_option("graph", graph_path, "Edge-list file")->required();
  bool structural = false;
  decompose->add_flag("--structural", structural, "Report the structural inequalities instead");

  auto* bounds = app.add_subcommand("bounds", "Closed-form diameter bounds");
  bounds->add_option("graph", graph_path, "Edge-list file (alternative to --n/--p/--s)");
  std::optional<std::size_t> bn, bp, bs;
  bounds->add_option("--n", bn, "Order");
  bounds->add_option("--p", bp, "Number of blocks");
  bounds->add_option("--s", bs, "Number of cut vertices");

  auto* orient = app.add_subcommand("orient", "Construct a strong orientation");
  orient->add_option("graph", graph_path, "Edge-list file")->required();
  std::string strategy = "theorem1";
  orient->add_option("--strategy", strategy, "robbins, theorem1 or blockgraph")
      ->check(CLI::IsMember({"robbins", "theorem1", "blockgraph"}));
  std::string out_path, dot_path;
  orient->add_option("--out", out_path, "Write the arc list here");
  orient->add_option("--dot", dot_path, "Write a DOT rendering here");

  auto* exact = app.add_subcommand("exact", "Exact oriented diameter with a witness");
  exact->add_option("graph", graph_path, "Edge-list file")->required();
  std::string method = "brute";
  exact->add_option("--method", method, "brute or decomposed")->check(CLI::IsMember({"brute", "decomposed"}));
  od_exact_options exact_opts;
  od_exact_options_default(&exact_opts);
  exact->add_option("--edge-budget", exact_opts.edge_budget, "Brute force: maximum edge count");
  exact->add_option("--block-budget", exact_opts.block_budget_log2,
                    "Decomposed: maximum log2 of orientations per block");
  std::optional<unsigned> threads;
  exact->add_option("--threads", threads, "Worker threads (default: ORIENTDIA_THREADS or all cores)");
  std::string witness_path;
  exact->add_option("--out", witness_path, "Write the witness arc list here");

  auto* generate = app.add_subcommand("generate", "Generate an extremal or random graph");
  std::string family;
  generate->add_option("--family", family, "gnp, block, random or random-block")->required();
  std::size_t gn = 0, gp = 0;
  std::uint64_t seed = 0;
  generate->add_option("--n", gn, "Order")->required();
  generate->add_option("--p", gp, "Number of blocks (gnp, random)");
  generate->add_option("--seed", seed, "Seed for random families");
  std::string gen_out, emit_path;
  generate->add_option("--out", gen_out, "Write the edge list here (default: stdout)");
  generate->add_option("--emit-orientation", emit_path, "Write the canonical orientation here");

  auto* verify = app.add_subcommand("verify", "Check an orientation against a bound");
  verify->add_option("graph", graph_path, "Edge-list file")->required();
  verify->add_option("arcs", arcs_path, "Arc-list file")->required();
  std::string bound = "theorem1";
  verify->add_option("--bound", bound, "theorem1, corollary, blockgraph, strong or none")
      ->check(CLI::IsMember({"theorem1", "corollary", "blockgraph", "strong", "none"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*decompose) {
      auto g = load_graph(graph_path);
      char* json = nullptr;
      check(structural ? od_structural_json(g.get(), &json) : od_decompose_json(g.get(), &json));
      StringPtr owned(json);
      print(json);
    } else if (*bounds) {
      char* json = nullptr;
      if (!graph_path.empty()) {
        if (bn || bp || bs) {
          std::cerr << "error: give either a graph file or --n/--p/--s, not both\n";
          return kExitInput;
        }
        auto g = load_graph(graph_path);
        check(od_graph_bounds_json(g.get(), &json));
      } else {
        if (!bn || !bp || !bs) {
          std::cerr << "error: bounds needs a graph file or all of --n, --p and --s\n";
          return kExitInput;
        }
        check(od_bounds_json(*bn, *bp, *bs, &json));
      }
      StringPtr owned(json);
      print(json);
    } else if (*orient) {
      auto g = load_graph(graph_path);
      od_strategy st;
      check(od_strategy_parse(strategy.c_str(), &st));
      od_digraph* d = nullptr;
      char* json = nullptr;
      check(od_orient(g.get(), st, &d, &json));
      DigraphPtr owned_d(d);
      StringPtr owned_json(json);
      if (!out_path.empty()) {
        char* text = nullptr;
        check(od_digraph_to_arc_list(d, &text));
        StringPtr owned(text);
        write_file(out_path, text);
      }
      if (!dot_path.empty()) {
        char* text = nullptr;
        check(od_digraph_to_dot(d, &text));
        StringPtr owned(text);
        write_file(dot_path, text);
      }
      print(json);
    } else if (*exact) {
      auto g = load_graph(graph_path);
      od_exact_method m;
      check(od_exact_method_parse(method.c_str(), &m));
      exact_opts.threads = threads.value_or(default_threads());
      od_digraph* d = nullptr;
      char* json = nullptr;
      check(od_exact(g.get(), m, &exact_opts, &d, &json));
      DigraphPtr owned_d(d);
      StringPtr owned_json(json);
      if (!witness_path.empty()) {
        char* text = nullptr;
        check(od_digraph_to_arc_list(d, &text));
        StringPtr owned(text);
        write_file(witness_path, text);
      }
      print(json);
    } else if (*generate) {
      od_family f;
      check(od_family_parse(family.c_str(), &f));
      od_graph* g = nullptr;
      od_digraph* canonical = nullptr;
      check(od_generate(f, gn, gp, seed, &g, &canonical));
      GraphPtr owned_g(g);
      DigraphPtr owned_c(canonical);
      if (!emit_path.empty()) {
        if (canonical == nullptr) {
          std::cerr << "error: family '" << family << "' has no canonical orientation\n";
          return kExitInput;
        }
        char* text = nullptr;
        check(od_digraph_to_arc_list(canonical, &text));
        StringPtr owned(text);
        write_file(emit_path, text);
      }
      char* text = nullptr;
      check(od_graph_to_edge_list(g, &text));
      StringPtr owned(text);
      if (gen_out.empty()) {
        print(text);
      } else {
        write_file(gen_out, text);
      }
    } else if (*verify) {
      auto g = load_graph(graph_path);
      od_digraph* d = nullptr;
      check(od_digraph_load(arcs_path.c_str(), &d));
      DigraphPtr owned_d(d);
      int ok = 0;
      char* json = nullptr;
      check(od_verify(g.get(), d, bound.c_str(), &ok, &json));
      StringPtr owned(json);
      print(json);
      return ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitOk;
}
