#ifndef LGCALC_GRAPH_HPP
#define LGCALC_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgcalc/lg_space.hpp"

namespace lgcalc {

// Dual graph of a nodal spin curve.  Edges are directed and carry a single
// decoration, the monodromy seen from the head ("+") branch; the tail branch
// always sees the inverse, which encodes the balanced-node condition.
struct DecoratedGraph {
  struct Vertex {
    int genus = 0;
  };
  struct Edge {
    int tail = 0;  // v^-
    int head = 0;  // v^+
    PhaseVec decoration;
  };
  struct TailMark {
    int vertex = 0;
    PhaseVec decoration;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<TailMark> tails;  // ordered marks

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_tails() const { return static_cast<int>(tails.size()); }

  // Edge ends (loops count twice) plus tails.
  int valence(int v) const;
  bool connected() const;
  // Endpoint indices in range; throws on malformed data.
  void check_structure() const;

  friend bool operator==(const DecoratedGraph& a, const DecoratedGraph& b);
};

// Structure map of an iterated edge contraction.  Contracted edges map to
// vertices of the target; the rest map bijectively onto the target's edges.
struct ContractionMap {
  struct EdgeImage {
    bool contracted = false;
    int index = 0;  // target edge, or target vertex when contracted
  };

  DecoratedGraph source, target;
  std::vector<int> vertex_map;
  std::vector<EdgeImage> edge_map;
  std::vector<int> tail_map;

  static ContractionMap identity(const DecoratedGraph& g);
};

// Composite of two contractions (b after a).
ContractionMap compose(const ContractionMap& a, const ContractionMap& b);

struct GraphReport {
  struct Violation {
    std::string code;  // "structure" | "decoration" | "stability" | "admissibility" | "genus" | "connectivity"
    int where = -1;    // vertex/edge/tail index when applicable
    std::string detail;
  };
  std::vector<Violation> violations;
  // Local selection-rule verdict per vertex (marks = tails plus inward
  // edge decorations).
  std::vector<bool> vertex_admissible;

  bool ok() const { return violations.empty(); }
};

GraphReport validate(const DecoratedGraph& g, const LgSpace& space,
                     std::optional<int> total_g = std::nullopt);

// sum_v g_v + #E - #V + 1; requires a connected graph.
int total_genus(const DecoratedGraph& g);

// Remove edge e; distinct endpoints merge with genus g_- + g_+, a loop bumps
// its vertex's genus by one.
std::pair<DecoratedGraph, ContractionMap> contract(const DecoratedGraph& g, int edge);

// Contract every edge (result has one vertex per connected component).
std::pair<DecoratedGraph, ContractionMap> contract_all(const DecoratedGraph& g);

// Break every edge into a pair of tails decorated gamma_e^{-1} (at v^-) and
// gamma_e (at v^+); original tails keep their order, new tails are appended
// in edge order, minus side first.
DecoratedGraph split(const DecoratedGraph& g);

// Canonical representative under edge-direction reversal: each edge oriented
// so its decoration is lexicographically <= its inverse; self-inverse
// decorations orient toward the lower vertex index.
DecoratedGraph canonical_form(const DecoratedGraph& g);

// |Aut(Gamma/Gamma')|: automorphisms of the source preserving genera, tails,
// and decorations up to direction reversal, commuting with the contraction.
// Brute force; throws SearchCapExceededError beyond 8 vertices / 12 edges.
Int automorphism_order(const ContractionMap& cm);

// Remove tail `index` (its decoration must equal the grading element) and
// stabilize genus-0 vertices per the one-slot and two-slot rules.
DecoratedGraph forget_tail(const DecoratedGraph& g, int index, const LgSpace& space);

}  // namespace lgcalc

#endif
