#ifndef LGCALC_IO_HPP
#define LGCALC_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "lgcalc/chow.hpp"
#include "lgcalc/graph.hpp"
#include "lgcalc/lg_space.hpp"
#include "lgcalc/sectors.hpp"

namespace lgcalc::io {

// Space documents (JSON): keys `n`, `polynomial`, `group` ("aut" | "minimal"
// | list of phase vectors as "p/q" arrays), optional `weights` = {d, delta}.
struct SpaceDocument {
  int n = 0;
  std::string polynomial;
  GroupSpec group;
  std::optional<WeightBlock> weight_override;
};

SpaceDocument parse_space_document(const std::string& text);

struct BuiltSpace {
  LgSpace space;
  std::vector<std::string> warnings;
};

BuiltSpace build_space(const SpaceDocument& doc);

// Graph documents (JSON): `vertices` = [{genus}], `edges` = [{tail, head,
// decoration}], `tails` = [{vertex, decoration}], decorations as "p/q" arrays.
DecoratedGraph parse_graph_document(const std::string& text);
std::string graph_document(const DecoratedGraph& g);

PhaseVec parse_phase_vector(const std::vector<std::string>& entries);

// FNV-1a 64-bit content digest, as fixed-width hex.
std::string digest(const std::string& content);

// Command backends; each returns the JSON report (deterministic bytes for
// identical inputs) plus the process exit code: 0 ok, 1 verification
// failure, 2 parse error, 3 semantic error, 4 resource cap.
struct CmdResult {
  std::string report;
  int exit_code = 0;
};

CmdResult cmd_analyze(const std::string& space_text);
CmdResult cmd_sectors(const std::string& space_text, int genus, int ell, bool narrow_only,
                      const Int& cap);
CmdResult cmd_free_class(const std::string& space_text, const std::vector<int>& ranks,
                         const std::vector<int>& coranks, int dim, bool numeric);

enum class GraphCmd { validate, contract, split, aut, forget };
struct GraphCmdOptions {
  std::optional<int> edge;       // contract: single edge
  bool all = false;              // contract/aut: full contraction
  std::optional<int> tail;       // forget
  std::optional<int> total_genus;  // validate
};
CmdResult cmd_graph(const std::string& graph_text, const std::string& space_text, GraphCmd sub,
                    const GraphCmdOptions& opt);

// Built-in symbolic verification: "axioms" (everything), "concavity",
// "index-zero", "segre".
CmdResult cmd_verify(const std::string& suite);

}  // namespace lgcalc::io

#endif
