#include "lgcalc/io.hpp"

#include <cstdint>
#include <cstdio>

#include <json.hpp>

#include "lgcalc/errors.hpp"

namespace lgcalc::io {

using json = nlohmann::ordered_json;

namespace {

std::string rstr(const Rational& r) { return r.str(); }
std::string istr(const Int& x) { return x.get_str(); }

json phases_json(const PhaseVec& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(p.str());
  return a;
}

json weights_json(const WeightSystem& w) {
  json blocks = json::array();
  for (const auto& b : w.blocks()) {
    json delta = json::array();
    for (const auto& x : b.delta) delta.push_back(istr(x));
    blocks.push_back(json{{"d", istr(b.d)}, {"delta", delta}});
  }
  return json{{"blocks", blocks}};
}

json group_json(const DiagonalGroup& g) {
  json factors = json::array();
  for (const auto& f : g.invariant_factors()) factors.push_back(istr(f));
  json gens = json::array();
  for (const auto& gen : g.generators()) gens.push_back(phases_json(gen));
  return json{{"order", istr(g.order())}, {"invariant_factors", factors}, {"generators", gens}};
}

json class_json(const GradedRing& ring, const RingElem& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms()) {
    json mono = json::array();
    for (const auto& f : m.factors)
      mono.push_back(json{{"bundle", ring.name(f.bundle)}, {"index", f.index}, {"power", f.power}});
    terms.push_back(json{{"coeff", rstr(c)}, {"monomial", mono}});
  }
  return json{{"terms", terms}, {"text", to_string(ring, e)}};
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse:
      return "parse";
    case ErrorKind::semantic:
      return "semantic";
    case ErrorKind::cap:
      return "cap";
  }
  return "unknown";
}

int kind_exit(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse:
      return 2;
    case ErrorKind::semantic:
      return 3;
    case ErrorKind::cap:
      return 4;
  }
  return 3;
}

struct ReportBuilder {
  json report;

  explicit ReportBuilder(const std::string& command) {
    report["command"] = command;
    report["inputs"] = json::object();
    report["results"] = json::object();
    report["warnings"] = json::array();
    report["status"] = "ok";
    report["exit"] = 0;
  }
  void input(const std::string& key, const std::string& content) {
    report["inputs"][key] = "fnv1a:" + digest(content);
  }
  void warn(const std::string& w) { report["warnings"].push_back(w); }

  CmdResult ok() {
    return {report.dump(2) + "\n", 0};
  }
  CmdResult fail(const LgError& e) {
    report["results"] = json::object();
    report["status"] = "error";
    report["error"] = json{{"kind", kind_name(e.kind())}, {"message", e.what()}};
    report["exit"] = kind_exit(e.kind());
    return {report.dump(2) + "\n", kind_exit(e.kind())};
  }
  CmdResult verify_fail() {
    report["status"] = "failed";
    report["exit"] = 1;
    return {report.dump(2) + "\n", 1};
  }
};

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw DocumentError("document is not valid JSON");
  return doc;
}

}  // namespace

std::string digest(const std::string& content) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : content) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

PhaseVec parse_phase_vector(const std::vector<std::string>& entries) {
  PhaseVec v;
  for (const auto& s : entries) v.emplace_back(Rational::parse(s));
  return v;
}

namespace {

PhaseVec phases_from_json(const json& a, int expect_dim) {
  if (!a.is_array()) throw DocumentError("decoration must be an array of \"p/q\" strings");
  std::vector<std::string> entries;
  for (const auto& x : a) {
    if (!x.is_string()) throw DocumentError("decoration entries must be \"p/q\" strings");
    entries.push_back(x.get<std::string>());
  }
  if (expect_dim >= 0 && static_cast<int>(entries.size()) != expect_dim)
    throw DocumentError("decoration has wrong length");
  return parse_phase_vector(entries);
}

}  // namespace

SpaceDocument parse_space_document(const std::string& text) {
  json doc = parse_json(text);
  SpaceDocument out;
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw DocumentError("space document needs an integer field `n`");
  out.n = doc["n"].get<int>();
  if (out.n < 0) throw DocumentError("`n` must be nonnegative");
  if (!doc.contains("polynomial") || !doc["polynomial"].is_string())
    throw DocumentError("space document needs a string field `polynomial`");
  out.polynomial = doc["polynomial"].get<std::string>();

  if (!doc.contains("group")) {
    out.group = GroupSpec::aut();
  } else if (doc["group"].is_string()) {
    const std::string g = doc["group"].get<std::string>();
    if (g == "aut")
      out.group = GroupSpec::aut();
    else if (g == "minimal")
      out.group = GroupSpec::minimal();
    else
      throw DocumentError("`group` must be \"aut\", \"minimal\" or a list of phase vectors");
  } else if (doc["group"].is_array()) {
    std::vector<PhaseVec> gens;
    for (const auto& g : doc["group"]) gens.push_back(phases_from_json(g, out.n));
    out.group = GroupSpec::explicit_gens(std::move(gens));
  } else {
    throw DocumentError("`group` must be \"aut\", \"minimal\" or a list of phase vectors");
  }

  if (doc.contains("weights")) {
    const json& w = doc["weights"];
    if (!w.is_object() || !w.contains("d") || !w.contains("delta"))
      throw DocumentError("`weights` must be an object with fields `d` and `delta`");
    WeightBlock block;
    try {
      block.d = Int(w["d"].is_string() ? w["d"].get<std::string>()
                                       : std::to_string(w["d"].get<long long>()));
      for (const auto& x : w["delta"])
        block.delta.emplace_back(x.is_string() ? x.get<std::string>()
                                               : std::to_string(x.get<long long>()));
    } catch (const std::invalid_argument&) {
      throw DocumentError("`weights` entries must be integers");
    }
    if (static_cast<int>(block.delta.size()) != out.n)
      throw DocumentError("`weights.delta` must have length n");
    out.weight_override = std::move(block);
  }
  return out;
}

BuiltSpace build_space(const SpaceDocument& doc) {
  BuiltSpace out;
  QuasiHomogPoly W = QuasiHomogPoly::parse(doc.polynomial, doc.n);
  std::optional<WeightSystem> override;
  if (doc.weight_override) override = WeightSystem(*doc.weight_override);
  out.space = LgSpace::build(std::move(W), doc.group, override);

  if (doc.weight_override) {
    try {
      WeightSystem inferred = infer_weights(out.space.polynomial());
      bool same = inferred.str() == out.space.weights().str();
      if (!same)
        out.warnings.push_back("weight override " + out.space.weights().str() +
                               " differs from inferred " + inferred.str());
    } catch (const LgError& e) {
      out.warnings.push_back(std::string("weight inference failed: ") + e.what());
    }
  }
  return out;
}

DecoratedGraph parse_graph_document(const std::string& text) {
  json doc = parse_json(text);
  DecoratedGraph g;
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw DocumentError("graph document needs an array field `vertices`");
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("genus") || !v["genus"].is_number_integer())
      throw DocumentError("each vertex needs an integer `genus`");
    g.vertices.push_back({v["genus"].get<int>()});
  }
  if (doc.contains("edges")) {
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("tail") || !e.contains("head") || !e.contains("decoration"))
        throw DocumentError("each edge needs `tail`, `head`, `decoration`");
      g.edges.push_back({e["tail"].get<int>(), e["head"].get<int>(),
                         phases_from_json(e["decoration"], -1)});
    }
  }
  if (doc.contains("tails")) {
    for (const auto& t : doc["tails"]) {
      if (!t.is_object() || !t.contains("vertex") || !t.contains("decoration"))
        throw DocumentError("each tail needs `vertex`, `decoration`");
      g.tails.push_back({t["vertex"].get<int>(), phases_from_json(t["decoration"], -1)});
    }
  }
  return g;
}

namespace {

json graph_json(const DecoratedGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices) vertices.push_back(json{{"genus", v.genus}});
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(
        json{{"tail", e.tail}, {"head", e.head}, {"decoration", phases_json(e.decoration)}});
  json tails = json::array();
  for (const auto& t : g.tails)
    tails.push_back(json{{"vertex", t.vertex}, {"decoration", phases_json(t.decoration)}});
  return json{{"vertices", vertices}, {"edges", edges}, {"tails", tails}};
}

}  // namespace

std::string graph_document(const DecoratedGraph& g) { return graph_json(g).dump(2) + "\n"; }

CmdResult cmd_analyze(const std::string& space_text) {
  ReportBuilder rb("analyze");
  rb.input("space", space_text);
  try {
    SpaceDocument doc = parse_space_document(space_text);
    BuiltSpace built = build_space(doc);
    for (const auto& w : built.warnings) rb.warn(w);
    const LgSpace& space = built.space;

    json results;
    results["n"] = space.nvars();
    results["polynomial"] = space.polynomial().str();
    results["weights"] = weights_json(space.weights());
    try {
      results["inferred_weights"] = weights_json(infer_weights(space.polynomial()));
    } catch (const LgError&) {
      results["inferred_weights"] = nullptr;  // ambiguous or inconsistent without the override
    }
    results["j"] = phases_json(space.j());

    NondegeneracyReport nd = check_nondegenerate(space.polynomial(), space.weights());
    const char* iso = nd.isolated_origin == Tri::yes         ? "yes"
                      : nd.isolated_origin == Tri::no        ? "no"
                                                             : "indeterminate";
    results["nondegeneracy"] = json{{"no_cross_terms", nd.no_cross_terms},
                                    {"isolated_origin", iso},
                                    {"nondegenerate", nd.nondegenerate()}};
    if (!nd.nondegenerate())
      rb.warn(nd.no_cross_terms ? "isolated-origin check did not certify non-degeneracy"
                                : "polynomial has a cross term x_i*x_j");

    try {
      results["aut"] = group_json(aut_group(space.polynomial()));
    } catch (const InfiniteAutError&) {
      results["aut"] = nullptr;
      rb.warn("symmetry group of the polynomial is infinite");
    }
    results["group"] = group_json(space.group());

    json lambda = json::array();
    for (std::size_t k = 0; k < space.lambda_basis().size(); ++k) {
      json expo = json::array();
      for (const auto& c : space.lambda_basis()[k].exponents) expo.push_back(istr(c));
      lambda.push_back(json{{"exponents", expo},
                            {"monomial", space.lambda_basis()[k].str()},
                            {"weight", istr(space.lambda_weights()[k])}});
    }
    results["lambda_basis"] = lambda;

    rb.report["results"] = results;
    return rb.ok();
  } catch (const LgError& e) {
    return rb.fail(e);
  }
}

CmdResult cmd_sectors(const std::string& space_text, int genus, int ell, bool narrow_only,
                      const Int& cap) {
  ReportBuilder rb("sectors");
  rb.input("space", space_text);
  try {
    BuiltSpace built = build_space(parse_space_document(space_text));
    for (const auto& w : built.warnings) rb.warn(w);
    const LgSpace& space = built.space;

    json results;
    results["genus"] = genus;
    results["marks"] = ell;
    results["narrow_only"] = narrow_only;
    json degrees = json::array();
    for (const auto& d : line_bundle_degrees(genus, ell, space)) degrees.push_back(rstr(d));
    results["line_bundle_degrees"] = degrees;

    auto tuples = enumerate_admissible(space, genus, ell, narrow_only, cap);
    results["count"] = tuples.size();
    json list = json::array();
    for (const auto& t : tuples) {
      json sectors = json::array();
      json orders = json::array();
      for (const auto& s : t.sectors) {
        sectors.push_back(phases_json(s.theta));
        orders.push_back(istr(s.r));
      }
      json chi = json::array();
      for (const auto& x : euler_characteristics(space, t)) chi.push_back(rstr(x));
      list.push_back(json{{"sectors", sectors},
                          {"orders", orders},
                          {"chi", chi},
                          {"virtual_dimension", istr(virtual_dimension(space, t))}});
    }
    results["tuples"] = list;
    rb.report["results"] = results;
    return rb.ok();
  } catch (const LgError& e) {
    return rb.fail(e);
  }
}

CmdResult cmd_free_class(const std::string& space_text, const std::vector<int>& ranks,
                         const std::vector<int>& coranks, int dim, bool numeric) {
  ReportBuilder rb("free-class");
  rb.input("space", space_text);
  try {
    BuiltSpace built = build_space(parse_space_document(space_text));
    for (const auto& w : built.warnings) rb.warn(w);
    const LgSpace& space = built.space;
    if (static_cast<int>(ranks.size()) != space.nvars() ||
        static_cast<int>(coranks.size()) != space.nvars())
      throw LgError(ErrorKind::semantic, "rank vectors must have length n");

    FreeCaseInput in;
    in.ranks = ranks;
    in.coranks = coranks;
    in.weights = space.weights();
    in.truncation = dim;
    if (numeric) in.numeric.assign(ranks.size(), true);
    GradedRing ring = make_free_case_ring(in);
    RingElem cls = free_case_class(ring, in);

    json results;
    results["ranks"] = ranks;
    results["coranks"] = coranks;
    json eps = json::array();
    for (int j = 0; j < space.nvars(); ++j)
      eps.push_back(rstr(Rational(space.weights().delta(j)) - Rational(space.weights().d_of(j))));
    results["epsilon"] = eps;
    results["coefficient_index"] = in.total_corank() - in.total_rank();
    results["dimension"] = dim;
    results["numeric"] = numeric;
    if (numeric) {
      results["value"] = rstr(*cls.as_constant());
    } else {
      results["class"] = class_json(ring, cls);
    }
    rb.report["results"] = results;
    return rb.ok();
  } catch (const LgError& e) {
    return rb.fail(e);
  }
}

CmdResult cmd_graph(const std::string& graph_text, const std::string& space_text, GraphCmd sub,
                    const GraphCmdOptions& opt) {
  const char* names[] = {"graph validate", "graph contract", "graph split", "graph aut",
                         "graph forget"};
  ReportBuilder rb(names[static_cast<int>(sub)]);
  rb.input("graph", graph_text);
  rb.input("space", space_text);
  try {
    BuiltSpace built = build_space(parse_space_document(space_text));
    for (const auto& w : built.warnings) rb.warn(w);
    const LgSpace& space = built.space;
    DecoratedGraph g = parse_graph_document(graph_text);

    json results;
    switch (sub) {
      case GraphCmd::validate: {
        GraphReport report = validate(g, space, opt.total_genus);
        json violations = json::array();
        for (const auto& v : report.violations)
          violations.push_back(json{{"code", v.code}, {"where", v.where}, {"detail", v.detail}});
        results["valid"] = report.ok();
        results["violations"] = violations;
        json adm = json::array();
        for (bool b : report.vertex_admissible) adm.push_back(b);
        results["vertex_admissible"] = adm;
        if (g.connected()) results["total_genus"] = total_genus(g);
        rb.report["results"] = results;
        if (!report.ok()) {
          rb.report["status"] = "invalid";
          rb.report["exit"] = 3;
          return {rb.report.dump(2) + "\n", 3};
        }
        return rb.ok();
      }
      case GraphCmd::contract: {
        if (opt.all) {
          auto [h, cm] = contract_all(g);
          results["graph"] = graph_json(h);
        } else {
          if (!opt.edge) throw LgError(ErrorKind::semantic, "contract needs --edge or --all");
          auto [h, cm] = contract(g, *opt.edge);
          results["graph"] = graph_json(h);
        }
        rb.report["results"] = results;
        return rb.ok();
      }
      case GraphCmd::split: {
        results["graph"] = graph_json(split(g));
        rb.report["results"] = results;
        return rb.ok();
      }
      case GraphCmd::aut: {
        ContractionMap cm;
        if (opt.all)
          cm = contract_all(g).second;
        else
          cm = ContractionMap::identity(g);
        results["order"] = istr(automorphism_order(cm));
        results["full_contraction"] = opt.all;
        rb.report["results"] = results;
        return rb.ok();
      }
      case GraphCmd::forget: {
        if (!opt.tail) throw LgError(ErrorKind::semantic, "forget needs --tail");
        results["graph"] = graph_json(forget_tail(g, *opt.tail, space));
        rb.report["results"] = results;
        return rb.ok();
      }
    }
    throw LgError(ErrorKind::semantic, "unknown graph subcommand");
  } catch (const LgError& e) {
    return rb.fail(e);
  }
}

namespace {

// Series inverse by naive long division; the verify suite's own route,
// independent of invert()'s geometric expansion.
GradedSeries long_division_inverse(const GradedRing& ring, const GradedSeries& p, int T) {
  const Rational c0 = *p.coeff(0).as_constant();
  GradedSeries q(T);
  q.set_coeff(0, RingElem::constant(Rational(1) / c0));
  for (int k = 1; k <= T; ++k) {
    RingElem acc;
    for (int i = 1; i <= k; ++i) acc = acc + mul(ring, p.coeff(i), q.coeff(k - i));
    q.set_coeff(k, acc.scaled(Rational(-1) / c0));
  }
  return q;
}

struct Check {
  std::string name;
  bool passed;
  std::vector<std::string> warnings;
};

Check check_segre_weighted() {
  Check c{"segre-weighted", true, {}};
  const std::vector<int> ranks{1, 2};
  const std::vector<Int> e{2, 3};
  const int T = 6, r = 3;
  GradedRing ring = make_segre_ring(ranks, T);
  GradedSeries got = weighted_segre_series(ring, ranks, e, T);

  std::vector<Rational> w{Rational(2), Rational(3)};
  GradedSeries p(T);
  p.set_coeff(0, RingElem::one());
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    GradedSeries f(T);
    f.set_coeff(0, RingElem::constant(pow(w[j], ranks[j])));
    for (int i = 1; i <= ranks[j]; ++i)
      f.set_coeff(i, RingElem::chern(ring, static_cast<int>(j), i).scaled(pow(w[j], ranks[j] - i)));
    p = series_mul(ring, p, f);
  }
  GradedSeries inv = long_division_inverse(ring, p, T);
  for (int i = 0; i <= T; ++i) {
    RingElem want = i >= r ? inv.coeff(i - r) : RingElem{};
    if (!(got.coeff(i) == want)) c.passed = false;
  }
  return c;
}

Check check_segre_classical() {
  Check c{"segre-classical", true, {}};
  const std::vector<int> ranks{1, 2};
  const std::vector<Int> e{1, 1};
  const int T = 6, r = 3;
  GradedRing ring = make_segre_ring(ranks, T);
  GradedSeries got = weighted_segre_series(ring, ranks, e, T);

  // Classical projective-bundle expansion: t^r * c(F)(t)^{-1} with
  // c(F) = prod_j c(F_j).
  GradedSeries cf(T);
  cf.set_coeff(0, RingElem::one());
  for (std::size_t j = 0; j < ranks.size(); ++j)
    cf = series_mul(ring, cf, chern_series(ring, static_cast<int>(j)));
  GradedSeries inv = long_division_inverse(ring, cf, T);
  for (int i = 0; i <= T; ++i) {
    RingElem want = i >= r ? inv.coeff(i - r) : RingElem{};
    if (!(got.coeff(i) == want)) c.passed = false;
  }
  return c;
}

Check check_concavity_sweep() {
  Check c{"concavity", true, {}};
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> s(n, 0);
    for (;;) {
      WeightBlock block;
      block.d = 2;
      block.delta.assign(n, Int(1));  // eps_j = -1
      int total = 0;
      for (int x : s) total += x;
      ConcavityReport rep = check_concavity(s, WeightSystem(block), std::max(total, 1));
      if (!rep.equal) c.passed = false;
      int k = n - 1;
      while (k >= 0 && s[k] == 3) s[k--] = 0;
      if (k < 0) break;
      ++s[k];
    }
  }
  return c;
}

Check check_index_zero_sweep() {
  Check c{"index-zero", true, {}};
  for (int n = 1; n <= 2; ++n) {
    std::vector<int> s(n, 0);
    for (;;) {
      for (long d = 2; d <= 4; ++d) {
        WeightBlock block;
        block.d = d;
        block.delta.assign(n, Int(1));
        IndexZeroReport rep = check_index_zero(s, WeightSystem(block));
        Rational expected(1);
        for (int j = 0; j < n; ++j) expected *= pow(Rational(1) - Rational(d), s[j]);
        if (rep.computed != expected) c.passed = false;
        if (rep.flagged) {
          std::string shape = "(";
          for (int j = 0; j < n; ++j) shape += (j ? "," : "") + std::to_string(s[j]);
          c.warnings.push_back("printed-formula factor differs at r=s=" + shape +
                               "), d=" + std::to_string(d));
        }
      }
      int k = n - 1;
      while (k >= 0 && s[k] == 2) s[k--] = 0;
      if (k < 0) break;
      ++s[k];
    }
  }
  return c;
}

}  // namespace

CmdResult cmd_verify(const std::string& suite) {
  ReportBuilder rb("verify");
  rb.report["inputs"]["suite"] = suite;
  std::vector<Check> checks;
  try {
    if (suite == "axioms" || suite == "segre") {
      checks.push_back(check_segre_weighted());
      checks.push_back(check_segre_classical());
    }
    if (suite == "axioms" || suite == "concavity") checks.push_back(check_concavity_sweep());
    if (suite == "axioms" || suite == "index-zero") checks.push_back(check_index_zero_sweep());
    if (checks.empty())
      throw LgError(ErrorKind::semantic,
                    "unknown suite '" + suite + "' (axioms, concavity, index-zero, segre)");
  } catch (const LgError& e) {
    return rb.fail(e);
  }

  bool all = true;
  json list = json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    json w = json::array();
    for (const auto& x : c.warnings) {
      w.push_back(x);
      rb.warn(c.name + ": " + x);
    }
    list.push_back(json{{"name", c.name}, {"passed", c.passed}, {"warnings", w}});
  }
  rb.report["results"] = json{{"checks", list}, {"all_passed", all}};
  return all ? rb.ok() : rb.verify_fail();
}

}  // namespace lgcalc::io
