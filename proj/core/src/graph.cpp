#include "lgcalc/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <tuple>

#include "lgcalc/errors.hpp"
#include "lgcalc/sectors.hpp"

namespace lgcalc {

int DecoratedGraph::valence(int v) const {
  int c = 0;
  for (const auto& e : edges) {
    if (e.tail == v) ++c;
    if (e.head == v) ++c;
  }
  for (const auto& t : tails)
    if (t.vertex == v) ++c;
  return c;
}

bool DecoratedGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<bool> seen(vertices.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : edges) {
      int other = -1;
      if (e.tail == v) other = e.head;
      if (e.head == v) other = e.tail;
      if (other >= 0 && !seen[other]) {
        seen[other] = true;
        stack.push_back(other);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

void DecoratedGraph::check_structure() const {
  const int n = num_vertices();
  for (const auto& e : edges)
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
      throw LgError(ErrorKind::semantic, "edge endpoint out of range");
  for (const auto& t : tails)
    if (t.vertex < 0 || t.vertex >= n)
      throw LgError(ErrorKind::semantic, "tail vertex out of range");
}

namespace {

bool phase_vec_eq(const PhaseVec& a, const PhaseVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

bool operator==(const DecoratedGraph& a, const DecoratedGraph& b) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() ||
      a.tails.size() != b.tails.size())
    return false;
  for (std::size_t i = 0; i < a.vertices.size(); ++i)
    if (a.vertices[i].genus != b.vertices[i].genus) return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    if (a.edges[i].tail != b.edges[i].tail || a.edges[i].head != b.edges[i].head ||
        !phase_vec_eq(a.edges[i].decoration, b.edges[i].decoration))
      return false;
  for (std::size_t i = 0; i < a.tails.size(); ++i)
    if (a.tails[i].vertex != b.tails[i].vertex ||
        !phase_vec_eq(a.tails[i].decoration, b.tails[i].decoration))
      return false;
  return true;
}

ContractionMap ContractionMap::identity(const DecoratedGraph& g) {
  ContractionMap cm;
  cm.source = g;
  cm.target = g;
  cm.vertex_map.resize(g.num_vertices());
  std::iota(cm.vertex_map.begin(), cm.vertex_map.end(), 0);
  cm.edge_map.resize(g.num_edges());
  for (int i = 0; i < g.num_edges(); ++i) cm.edge_map[i] = {false, i};
  cm.tail_map.resize(g.num_tails());
  std::iota(cm.tail_map.begin(), cm.tail_map.end(), 0);
  return cm;
}

ContractionMap compose(const ContractionMap& a, const ContractionMap& b) {
  ContractionMap cm;
  cm.source = a.source;
  cm.target = b.target;
  cm.vertex_map.resize(a.vertex_map.size());
  for (std::size_t v = 0; v < a.vertex_map.size(); ++v)
    cm.vertex_map[v] = b.vertex_map[a.vertex_map[v]];
  cm.edge_map.resize(a.edge_map.size());
  for (std::size_t e = 0; e < a.edge_map.size(); ++e) {
    if (a.edge_map[e].contracted) {
      cm.edge_map[e] = {true, b.vertex_map[a.edge_map[e].index]};
    } else {
      cm.edge_map[e] = b.edge_map[a.edge_map[e].index];
    }
  }
  cm.tail_map.resize(a.tail_map.size());
  for (std::size_t t = 0; t < a.tail_map.size(); ++t) cm.tail_map[t] = b.tail_map[a.tail_map[t]];
  return cm;
}

GraphReport validate(const DecoratedGraph& g, const LgSpace& space, std::optional<int> total_g) {
  GraphReport report;
  const int n = g.num_vertices();

  bool structural = true;
  for (int i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edges[i];
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      report.violations.push_back({"structure", i, "edge endpoint out of range"});
      structural = false;
    }
  }
  for (int i = 0; i < g.num_tails(); ++i)
    if (g.tails[i].vertex < 0 || g.tails[i].vertex >= n) {
      report.violations.push_back({"structure", i, "tail vertex out of range"});
      structural = false;
    }
  for (int v = 0; v < n; ++v)
    if (g.vertices[v].genus < 0)
      report.violations.push_back({"genus", v, "negative genus label"});
  if (!structural) return report;

  for (int i = 0; i < g.num_edges(); ++i)
    if (!space.group().contains(g.edges[i].decoration))
      report.violations.push_back({"decoration", i, "edge decoration not in the group"});
  for (int i = 0; i < g.num_tails(); ++i)
    if (!space.group().contains(g.tails[i].decoration))
      report.violations.push_back({"decoration", i, "tail decoration not in the group"});

  report.vertex_admissible.assign(n, false);
  for (int v = 0; v < n; ++v) {
    const int val = g.valence(v);
    if (2 * g.vertices[v].genus - 2 + val <= 0)
      report.violations.push_back(
          {"stability", v, "2g-2+valence = " + std::to_string(2 * g.vertices[v].genus - 2 + val)});

    SectorTuple local;
    local.genus = g.vertices[v].genus;
    auto push = [&](const PhaseVec& dec) {
      local.sectors.push_back(Sector{dec, element_order(dec)});
    };
    for (const auto& t : g.tails)
      if (t.vertex == v) push(t.decoration);
    for (const auto& e : g.edges) {
      if (e.head == v) push(e.decoration);
      if (e.tail == v) push(inverse(e.decoration));
    }
    report.vertex_admissible[v] = is_admissible(space, local);
    if (!report.vertex_admissible[v])
      report.violations.push_back({"admissibility", v, "local selection rule fails"});
  }

  if (total_g) {
    if (!g.connected()) {
      report.violations.push_back({"connectivity", -1, "graph is not connected"});
    } else {
      int tg = total_genus(g);
      if (tg != *total_g)
        report.violations.push_back(
            {"genus", -1, "total genus " + std::to_string(tg) + " != " + std::to_string(*total_g)});
    }
  }
  return report;
}

int total_genus(const DecoratedGraph& g) {
  if (!g.connected()) throw DisconnectedError();
  int sum = 0;
  for (const auto& v : g.vertices) sum += v.genus;
  return sum + g.num_edges() - g.num_vertices() + 1;
}

std::pair<DecoratedGraph, ContractionMap> contract(const DecoratedGraph& g, int edge) {
  if (edge < 0 || edge >= g.num_edges()) throw NoSuchEdgeError(edge);
  g.check_structure();
  const auto& e = g.edges[edge];

  ContractionMap cm;
  cm.source = g;
  cm.vertex_map.resize(g.num_vertices());

  DecoratedGraph t;
  if (e.tail == e.head) {
    t.vertices = g.vertices;
    t.vertices[e.tail].genus += 1;  // loop contraction adds one to the genus
    std::iota(cm.vertex_map.begin(), cm.vertex_map.end(), 0);
  } else {
    const int a = std::min(e.tail, e.head), b = std::max(e.tail, e.head);
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (v == b)
        cm.vertex_map[v] = a;
      else
        cm.vertex_map[v] = v < b ? v : v - 1;
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (v == b) continue;
      t.vertices.push_back(g.vertices[v]);
    }
    t.vertices[a].genus = g.vertices[e.tail].genus + g.vertices[e.head].genus;
  }

  cm.edge_map.resize(g.num_edges());
  for (int i = 0; i < g.num_edges(); ++i) {
    if (i == edge) {
      cm.edge_map[i] = {true, cm.vertex_map[e.tail]};
      continue;
    }
    cm.edge_map[i] = {false, static_cast<int>(t.edges.size())};
    t.edges.push_back({cm.vertex_map[g.edges[i].tail], cm.vertex_map[g.edges[i].head],
                       g.edges[i].decoration});
  }
  cm.tail_map.resize(g.num_tails());
  for (int i = 0; i < g.num_tails(); ++i) {
    cm.tail_map[i] = i;
    t.tails.push_back({cm.vertex_map[g.tails[i].vertex], g.tails[i].decoration});
  }
  cm.target = std::move(t);
  return {cm.target, cm};
}

std::pair<DecoratedGraph, ContractionMap> contract_all(const DecoratedGraph& g) {
  ContractionMap acc = ContractionMap::identity(g);
  while (acc.target.num_edges() > 0) {
    auto [next, step] = contract(acc.target, 0);
    acc = compose(acc, step);
  }
  return {acc.target, acc};
}

DecoratedGraph split(const DecoratedGraph& g) {
  DecoratedGraph out;
  out.vertices = g.vertices;
  out.tails = g.tails;
  for (const auto& e : g.edges) {
    out.tails.push_back({e.tail, inverse(e.decoration)});
    out.tails.push_back({e.head, e.decoration});
  }
  return out;
}

DecoratedGraph canonical_form(const DecoratedGraph& g) {
  DecoratedGraph out = g;
  for (auto& e : out.edges) {
    PhaseVec inv = inverse(e.decoration);
    if (lex_less(inv, e.decoration)) {
      std::swap(e.tail, e.head);
      e.decoration = std::move(inv);
    } else if (!lex_less(e.decoration, inv) && e.tail > e.head) {
      // self-inverse decoration: orient toward the lower vertex index
      std::swap(e.tail, e.head);
    }
  }
  return out;
}

namespace {

std::string phases_key(const PhaseVec& v) {
  std::string s;
  for (const auto& p : v) s += p.str() + ",";
  return s;
}

// Order-reversal-invariant key of a decorated edge after relabeling vertices
// through perm (identity when perm is empty).
std::tuple<int, int, std::string> edge_key(const DecoratedGraph::Edge& e,
                                           const std::vector<int>& perm) {
  int t = perm.empty() ? e.tail : perm[e.tail];
  int h = perm.empty() ? e.head : perm[e.head];
  PhaseVec inv = inverse(e.decoration);
  std::tuple<int, int, std::string> fwd{t, h, phases_key(e.decoration)};
  std::tuple<int, int, std::string> rev{h, t, phases_key(inv)};
  return std::min(fwd, rev);
}

Int factorial(std::size_t k) {
  Int f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

}  // namespace

Int automorphism_order(const ContractionMap& cm) {
  const DecoratedGraph& g = cm.source;
  if (g.num_vertices() > 8 || g.num_edges() > 12) throw SearchCapExceededError();
  g.check_structure();

  const std::vector<int> id;  // empty = identity relabeling
  std::vector<std::tuple<int, int, std::string>> base_key(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) base_key[e] = edge_key(g.edges[e], id);

  // Contracted edges grouped by their image vertex in the target.
  std::vector<std::vector<int>> groups;
  {
    std::vector<int> group_of(cm.target.num_vertices(), -1);
    for (int e = 0; e < g.num_edges(); ++e) {
      if (!cm.edge_map[e].contracted) continue;
      int tv = cm.edge_map[e].index;
      if (group_of[tv] < 0) {
        group_of[tv] = static_cast<int>(groups.size());
        groups.emplace_back();
      }
      groups[group_of[tv]].push_back(e);
    }
  }

  Int total = 0;
  std::vector<int> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < g.num_vertices() && ok; ++v) {
      if (g.vertices[perm[v]].genus != g.vertices[v].genus) ok = false;
      if (ok && cm.vertex_map[perm[v]] != cm.vertex_map[v]) ok = false;
    }
    for (const auto& t : g.tails) {
      if (!ok) break;
      if (perm[t.vertex] != t.vertex) ok = false;
    }
    // A non-contracted edge must map to itself (up to reversal).
    for (int e = 0; e < g.num_edges() && ok; ++e) {
      if (cm.edge_map[e].contracted) continue;
      if (edge_key(g.edges[e], perm) != base_key[e]) ok = false;
    }
    if (!ok) continue;

    // Contracted edges may permute within their group when keys match.
    Int ways = 1;
    for (const auto& grp : groups) {
      std::vector<std::tuple<int, int, std::string>> want, have;
      for (int e : grp) {
        want.push_back(edge_key(g.edges[e], perm));
        have.push_back(base_key[e]);
      }
      std::sort(want.begin(), want.end());
      std::sort(have.begin(), have.end());
      if (want != have) {
        ways = 0;
        break;
      }
      std::size_t run = 1;
      for (std::size_t i = 1; i <= want.size(); ++i) {
        if (i < want.size() && want[i] == want[i - 1]) {
          ++run;
        } else {
          ways *= factorial(run);
          run = 1;
        }
      }
    }
    total += ways;
  } while (std::next_permutation(perm.begin(), perm.end()));

  return total;
}

namespace {

struct IncidentEnd {
  int edge;
  bool at_head;
};

std::vector<IncidentEnd> edge_ends(const DecoratedGraph& g, int v) {
  std::vector<IncidentEnd> ends;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.edges[e].tail == v) ends.push_back({e, false});
    if (g.edges[e].head == v) ends.push_back({e, true});
  }
  return ends;
}

PhaseVec inward_decoration(const DecoratedGraph& g, const IncidentEnd& end) {
  const auto& e = g.edges[end.edge];
  return end.at_head ? e.decoration : inverse(e.decoration);
}

// Erase vertex v (assumed isolated) and reindex.
DecoratedGraph drop_vertex(const DecoratedGraph& g, int v) {
  DecoratedGraph out;
  for (int i = 0; i < g.num_vertices(); ++i)
    if (i != v) out.vertices.push_back(g.vertices[i]);
  auto fix = [v](int i) { return i < v ? i : i - 1; };
  for (const auto& e : g.edges) out.edges.push_back({fix(e.tail), fix(e.head), e.decoration});
  for (const auto& t : g.tails) out.tails.push_back({fix(t.vertex), t.decoration});
  return out;
}

}  // namespace

DecoratedGraph forget_tail(const DecoratedGraph& g, int index, const LgSpace& space) {
  if (index < 0 || index >= g.num_tails())
    throw LgError(ErrorKind::semantic, "no tail with index " + std::to_string(index));
  g.check_structure();
  if (!phase_vec_eq(g.tails[index].decoration, space.j())) throw WrongDecorationError();

  DecoratedGraph cur = g;
  cur.tails.erase(cur.tails.begin() + index);

  for (;;) {
    bool acted = false;
    for (int v = 0; v < cur.num_vertices() && !acted; ++v) {
      if (cur.vertices[v].genus != 0) continue;
      auto ends = edge_ends(cur, v);
      int ntails = 0;
      for (const auto& t : cur.tails)
        if (t.vertex == v) ++ntails;

      if (ends.size() == 1 && ntails == 0) {
        // Dangling rational component: contract its edge away.
        cur = contract(cur, ends[0].edge).first;
        acted = true;
      } else if (ends.size() == 1 && ntails == 1) {
        // The tail migrates across the node.
        cur = contract(cur, ends[0].edge).first;
        acted = true;
      } else if (ends.size() == 2 && ntails == 0) {
        if (ends[0].edge == ends[1].edge) continue;  // a bare loop; no smoothing applies
        PhaseVec in0 = inward_decoration(cur, ends[0]);
        PhaseVec in1 = inward_decoration(cur, ends[1]);
        if (!is_zero(add(in0, in1))) throw StabilizationConflictError(v);
        // Merge the two edges across v; the surviving edge points from the far
        // end of the first edge to the far end of the second and keeps the
        // monodromy that the second edge's far side saw, i.e. in0.
        const auto& e0 = cur.edges[ends[0].edge];
        const auto& e1 = cur.edges[ends[1].edge];
        int far0 = ends[0].at_head ? e0.tail : e0.head;
        int far1 = ends[1].at_head ? e1.tail : e1.head;
        DecoratedGraph next = cur;
        int hi = std::max(ends[0].edge, ends[1].edge), lo = std::min(ends[0].edge, ends[1].edge);
        next.edges.erase(next.edges.begin() + hi);
        next.edges.erase(next.edges.begin() + lo);
        next.edges.push_back({far0, far1, in0});
        cur = drop_vertex(next, v);
        acted = true;
      }
    }
    if (!acted) break;
  }
  return cur;
}

}  // namespace lgcalc
