// Batch front end: parses LG-space and graph documents, dispatches to the
// library, prints one JSON report to stdout.  Exit codes: 0 ok, 1 failed
// verification, 2 parse error, 3 semantic error, 4 resource cap.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lgcalc/io.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int finish(const lgcalc::io::CmdResult& r) {
  std::cout << r.report;
  if (r.exit_code != 0) std::cerr << "exit " << r.exit_code << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-Ginzburg space calculator"};
  app.require_subcommand(1);

  std::string space_file, graph_file, suite = "axioms";
  int genus = 0, marks = 0, dim = 4;
  bool narrow = false, numeric = false, all = false;
  long cap = 1000000;
  int edge = -1, tail = -1, total_g = -1;
  std::vector<int> ranks, coranks;

  auto* analyze = app.add_subcommand("analyze", "weights, symmetries and invariant lattice");
  analyze->add_option("space", space_file, "space document (JSON)")->required();

  auto* sectors = app.add_subcommand("sectors", "enumerate admissible sector tuples");
  sectors->add_option("space", space_file)->required();
  sectors->add_option("-g,--genus", genus)->required();
  sectors->add_option("-l,--marks", marks)->required();
  sectors->add_flag("--narrow", narrow, "narrow sectors only");
  sectors->add_option("--cap", cap, "enumeration cap (default 10^6)");

  auto* free_class = app.add_subcommand("free-class", "free-case virtual class");
  free_class->add_option("space", space_file)->required();
  free_class->add_option("--ranks", ranks, "ranks r_j of R^0")->delimiter(',')->required();
  free_class->add_option("--coranks", coranks, "ranks s_j of R^1")->delimiter(',')->required();
  free_class->add_option("--dim", dim, "truncation degree of the base");
  free_class->add_flag("--numeric", numeric, "point base: the class is a rational number");

  auto* graph = app.add_subcommand("graph", "decorated dual graph operations");
  graph->add_option("graph", graph_file, "graph document (JSON)")->required();
  graph->add_option("--space", space_file, "space document (JSON)")->required();
  std::string sub;
  graph->add_option("op", sub, "validate | contract | split | aut | forget")->required();
  graph->add_option("--edge", edge, "edge index for contract");
  graph->add_flag("--all", all, "contract all edges (contract/aut)");
  graph->add_option("--tail", tail, "tail index for forget");
  graph->add_option("--total-genus", total_g, "expected total genus for validate");

  auto* verify = app.add_subcommand("verify", "built-in symbolic verification suite");
  verify->add_option("--suite", suite, "axioms | concavity | index-zero | segre");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is a parse error; --help stays 0
  }

  using namespace lgcalc::io;
  if (*analyze) return finish(cmd_analyze(slurp(space_file)));
  if (*sectors) return finish(cmd_sectors(slurp(space_file), genus, marks, narrow, lgcalc::Int(cap)));
  if (*free_class)
    return finish(cmd_free_class(slurp(space_file), ranks, coranks, dim, numeric));
  if (*graph) {
    GraphCmd op;
    if (sub == "validate")
      op = GraphCmd::validate;
    else if (sub == "contract")
      op = GraphCmd::contract;
    else if (sub == "split")
      op = GraphCmd::split;
    else if (sub == "aut")
      op = GraphCmd::aut;
    else if (sub == "forget")
      op = GraphCmd::forget;
    else {
      std::cerr << "unknown graph op '" << sub << "'\n";
      return 2;
    }
    GraphCmdOptions opt;
    if (edge >= 0) opt.edge = edge;
    opt.all = all;
    if (tail >= 0) opt.tail = tail;
    if (total_g >= 0) opt.total_genus = total_g;
    return finish(cmd_graph(slurp(graph_file), slurp(space_file), op, opt));
  }
  if (*verify) return finish(cmd_verify(suite));
  return 2;
}
