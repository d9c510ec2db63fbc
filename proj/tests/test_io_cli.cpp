#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lgcalc/errors.hpp"
#include "lgcalc/io.hpp"

using namespace lgcalc;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const std::string& name) {
  const char* dir = std::getenv("LGDATA");
  REQUIRE(dir != nullptr);
  return slurp(std::string(dir) + "/" + name);
}

json results_of(const io::CmdResult& r) { return json::parse(r.report)["results"]; }

}  // namespace

TEST_CASE("space documents") {
  auto doc = io::parse_space_document(data("a2.json"));
  CHECK(doc.n == 1);
  CHECK(doc.polynomial == "x1^3");
  CHECK(doc.group.kind == GroupSpec::Kind::aut);

  auto built = io::build_space(doc);
  CHECK(built.space.group().order() == 3);
  CHECK(built.warnings.empty());

  SUBCASE("weight override produces a mismatch warning only when it differs") {
    auto with = io::parse_space_document(
        R"({"n": 1, "polynomial": "x1^3", "group": "aut", "weights": {"d": 3, "delta": [1]}})");
    CHECK(io::build_space(with).warnings.empty());
  }
  SUBCASE("explicit generator groups") {
    auto exp = io::parse_space_document(
        R"({"n": 1, "polynomial": "x1^3", "group": [["2/3"]]})");
    CHECK(io::build_space(exp).space.group().order() == 3);
  }
  SUBCASE("malformed documents") {
    CHECK_THROWS_AS(io::parse_space_document("{"), DocumentError);
    CHECK_THROWS_AS(io::parse_space_document(R"({"polynomial": "x1"})"), DocumentError);
    CHECK_THROWS_AS(io::parse_space_document(R"({"n": 1})"), DocumentError);
    CHECK_THROWS_AS(io::parse_space_document(R"({"n": 1, "polynomial": "x1", "group": "full"})"),
                    DocumentError);
    CHECK_THROWS_AS(io::parse_space_document(
                        R"({"n": 2, "polynomial": "x1*x2", "group": [["1/2"]]})"),
                    DocumentError);  // wrong decoration length
  }
}

TEST_CASE("graph documents round-trip") {
  auto g = io::parse_graph_document(data("banana.json"));
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 2);
  auto again = io::parse_graph_document(io::graph_document(g));
  CHECK(again == g);
  CHECK_THROWS_AS(io::parse_graph_document(R"({"edges": []})"), DocumentError);
}

TEST_CASE("analyze report") {
  auto r = io::cmd_analyze(data("a2.json"));
  CHECK(r.exit_code == 0);
  json res = results_of(r);
  CHECK(res["n"] == 1);
  CHECK(res["weights"]["blocks"][0]["d"] == "3");
  CHECK(res["weights"]["blocks"][0]["delta"][0] == "1");
  CHECK(res["inferred_weights"] == res["weights"]);
  CHECK(res["j"][0] == "1/3");
  CHECK(res["aut"]["order"] == "3");
  CHECK(res["nondegeneracy"]["nondegenerate"] == true);
  CHECK(res["lambda_basis"][0]["weight"] == "1");

  SUBCASE("identical inputs give byte-identical reports") {
    auto r2 = io::cmd_analyze(data("a2.json"));
    CHECK(r.report == r2.report);
  }
  SUBCASE("loop polynomial") {
    json res2 = results_of(io::cmd_analyze(data("loop_aut.json")));
    CHECK(res2["aut"]["order"] == "3");
    CHECK(res2["aut"]["generators"][0][0] == "1/3");
    CHECK(res2["aut"]["generators"][0][1] == "1/3");
  }
  SUBCASE("cross terms produce a warning, not an error") {
    auto rc = io::cmd_analyze(data("cross_term.json"));
    CHECK(rc.exit_code == 0);
    json rep = json::parse(rc.report);
    CHECK(rep["results"]["nondegeneracy"]["no_cross_terms"] == false);
    CHECK(!rep["warnings"].empty());
  }
  SUBCASE("weight override with ambiguous inference") {
    auto ra = io::cmd_analyze(data("ambiguous_override.json"));
    CHECK(ra.exit_code == 0);
    json rep = json::parse(ra.report);
    CHECK(rep["results"]["inferred_weights"].is_null());
    CHECK(rep["results"]["weights"]["blocks"][0]["d"] == "2");
    bool inference_warning = false;
    for (const auto& w : rep["warnings"])
      if (w.get<std::string>().find("inference failed") != std::string::npos)
        inference_warning = true;
    CHECK(inference_warning);
  }
  SUBCASE("parse failures exit 2") {
    auto rb = io::cmd_analyze(data("bad_poly.json"));
    CHECK(rb.exit_code == 2);
    CHECK(json::parse(rb.report)["error"]["kind"] == "parse");
  }
  SUBCASE("semantic failures exit 3") {
    auto rj = io::cmd_analyze(data("j_missing.json"));
    CHECK(rj.exit_code == 3);
    CHECK(json::parse(rj.report)["error"]["kind"] == "semantic");
  }
}

TEST_CASE("sectors report") {
  auto r = io::cmd_sectors(data("a2.json"), 0, 3, true, Int(1000000));
  CHECK(r.exit_code == 0);
  json res = results_of(r);
  CHECK(res["count"] == 3);
  CHECK(res["line_bundle_degrees"][0] == "1/3");
  for (const auto& t : res["tuples"]) {
    CHECK(t["virtual_dimension"] == "0");
    CHECK(t["chi"][0] == "0/1");
  }

  json all = results_of(io::cmd_sectors(data("a2.json"), 0, 3, false, Int(1000000)));
  CHECK(all["count"] == 9);

  json one = results_of(io::cmd_sectors(data("a2.json"), 0, 1, true, Int(1000000)));
  CHECK(one["count"] == 1);
  CHECK(one["tuples"][0]["sectors"][0][0] == "2/3");

  auto capped = io::cmd_sectors(data("a2.json"), 0, 3, true, Int(8));
  CHECK(capped.exit_code == 4);
  CHECK(json::parse(capped.report)["error"]["kind"] == "cap");
}

TEST_CASE("free-class report") {
  json cls = results_of(io::cmd_free_class(data("a2.json"), {0}, {1}, 2, false));
  CHECK(cls["class"]["text"] == "c1(G1)");
  CHECK(cls["class"]["terms"][0]["coeff"] == "1/1");
  CHECK(cls["class"]["terms"][0]["monomial"][0]["bundle"] == "G1");
  CHECK(cls["epsilon"][0] == "-2/1");

  json numeric = results_of(io::cmd_free_class(data("a2.json"), {1}, {1}, 0, true));
  CHECK(numeric["value"] == "-2/1");

  json zero = results_of(io::cmd_free_class(data("a2.json"), {1}, {0}, 2, false));
  CHECK(zero["class"]["terms"].empty());
  CHECK(zero["class"]["text"] == "0");

  auto wrong_len = io::cmd_free_class(data("a2.json"), {1, 2}, {0, 0}, 2, false);
  CHECK(wrong_len.exit_code == 3);
}

TEST_CASE("graph reports") {
  io::GraphCmdOptions none;
  SUBCASE("validate") {
    io::GraphCmdOptions opt;
    opt.total_genus = 0;
    auto ok = io::cmd_graph(data("three_tails.json"), data("a2.json"), io::GraphCmd::validate, opt);
    CHECK(ok.exit_code == 0);
    CHECK(results_of(ok)["valid"] == true);

    auto bad = io::cmd_graph(data("banana.json"), data("a2.json"), io::GraphCmd::validate, none);
    CHECK(bad.exit_code == 3);
    CHECK(results_of(bad)["valid"] == false);
  }
  SUBCASE("contract all concentrates the genus") {
    io::GraphCmdOptions opt;
    opt.all = true;
    json res = results_of(io::cmd_graph(data("banana.json"), data("a2.json"),
                                        io::GraphCmd::contract, opt));
    CHECK(res["graph"]["vertices"].size() == 1);
    CHECK(res["graph"]["vertices"][0]["genus"] == 3);
  }
  SUBCASE("split emits inverse tail pairs") {
    json res =
        results_of(io::cmd_graph(data("banana.json"), data("a2.json"), io::GraphCmd::split, none));
    CHECK(res["graph"]["edges"].empty());
    CHECK(res["graph"]["tails"].size() == 4);
    CHECK(res["graph"]["tails"][0]["decoration"][0] == "2/3");
    CHECK(res["graph"]["tails"][1]["decoration"][0] == "1/3");
  }
  SUBCASE("automorphisms after full contraction") {
    io::GraphCmdOptions opt;
    opt.all = true;
    json res =
        results_of(io::cmd_graph(data("banana.json"), data("a2.json"), io::GraphCmd::aut, opt));
    CHECK(res["order"] == "2");
    json id =
        results_of(io::cmd_graph(data("banana.json"), data("a2.json"), io::GraphCmd::aut, none));
    CHECK(id["order"] == "1");
  }
  SUBCASE("forget the grading tail") {
    io::GraphCmdOptions opt;
    opt.tail = 1;
    json res =
        results_of(io::cmd_graph(data("jtail.json"), data("a2.json"), io::GraphCmd::forget, opt));
    CHECK(res["graph"]["vertices"].size() == 1);
    CHECK(res["graph"]["vertices"][0]["genus"] == 1);
    CHECK(res["graph"]["tails"].size() == 1);

    io::GraphCmdOptions wrong;
    wrong.tail = 0;
    auto err =
        io::cmd_graph(data("jtail.json"), data("a2.json"), io::GraphCmd::forget, wrong);
    CHECK(err.exit_code == 3);
  }
}

TEST_CASE("verify reports") {
  auto all = io::cmd_verify("axioms");
  CHECK(all.exit_code == 0);
  json res = json::parse(all.report);
  CHECK(res["results"]["all_passed"] == true);
  CHECK(res["results"]["checks"].size() == 4);
  CHECK(!res["warnings"].empty());  // flagged index-zero instances surface here

  auto segre = io::cmd_verify("segre");
  CHECK(segre.exit_code == 0);
  CHECK(json::parse(segre.report)["results"]["checks"].size() == 2);

  auto unknown = io::cmd_verify("nope");
  CHECK(unknown.exit_code == 3);

  SUBCASE("byte stability") {
    auto again = io::cmd_verify("axioms");
    CHECK(again.report == all.report);
  }
}

TEST_CASE("command line binary") {
  const char* tool = std::getenv("LGTOOL");
  const char* dir = std::getenv("LGDATA");
  REQUIRE(tool != nullptr);
  REQUIRE(dir != nullptr);
  auto run = [&](const std::string& args) {
    std::string cmd = std::string(tool) + " " + args + " > cli_out.json 2> cli_err.txt";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return (rc >> 8) & 0xff;
  };
  std::string d(dir);

  CHECK(run("analyze " + d + "/a2.json") == 0);
  json res = json::parse(slurp("cli_out.json"));
  CHECK(res["command"] == "analyze");
  CHECK(res["results"]["aut"]["order"] == "3");

  CHECK(run("sectors " + d + "/a2.json -g 0 -l 3 --narrow") == 0);
  CHECK(json::parse(slurp("cli_out.json"))["results"]["count"] == 3);

  CHECK(run("free-class " + d + "/a2.json --ranks 0 --coranks 1 --dim 2") == 0);
  CHECK(json::parse(slurp("cli_out.json"))["results"]["class"]["text"] == "c1(G1)");

  CHECK(run("graph " + d + "/banana.json --space " + d + "/a2.json aut --all") == 0);
  CHECK(json::parse(slurp("cli_out.json"))["results"]["order"] == "2");

  CHECK(run("verify --suite concavity") == 0);

  CHECK(run("analyze " + d + "/bad_poly.json") == 2);
  CHECK(run("analyze " + d + "/j_missing.json") == 3);
  CHECK(run("sectors " + d + "/a2.json -g 0 -l 3 --cap 5") == 4);
}
