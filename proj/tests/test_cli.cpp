#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eulercount/multigraph.hpp"
#include "run_command.hpp"

using namespace eulercount::testing;

namespace {

CommandResult cli(const std::string& args) { return run_command(cli_command(args)); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const char* name) { return std::string(EULERCOUNT_TEST_TMP) + "/" + name; }

}  // namespace

TEST_CASE("count-circuits") {
  auto tri = cli("count-circuits " + data_file("triangle.g"));
  CHECK(tri.exit_code == 0);
  CHECK(field(tri.out, "circuits") == "2");
  CHECK(field(tri.out, "engine") == "orb");

  auto bt = cli("count-circuits " + data_file("bowtie.g") + " --engine brute");
  CHECK(bt.exit_code == 0);
  CHECK(field(bt.out, "circuits") == "4");

  auto path = cli("count-circuits " + data_file("path.g"));
  CHECK(path.exit_code == 0);
  CHECK(field(path.out, "circuits") == "0");

  CHECK(field(cli("count-circuits " + data_file("bowtie.g") + " --root 5").out, "circuits") == "4");
  CHECK(field(cli("count-circuits " + data_file("k5.g")).out, "circuits") == "264");
}

TEST_CASE("count-orientations and count-orbs") {
  for (const char* engine : {"naive", "bundled"}) {
    auto o = cli("count-orientations " + data_file("bowtie.g") + " --engine " + engine);
    CHECK(field(o.out, "orientations") == "4");
    CHECK(field(o.out, "engine") == engine);
    auto b = cli("count-orbs " + data_file("bowtie.g") + " --root 5 --engine " + engine);
    CHECK(field(b.out, "orbs") == "4");
  }
  CHECK(field(cli("count-orbs " + data_file("digon.g") + " --root 1").out, "orbs") == "2");
}

TEST_CASE("reduce recover-n") {
  auto tri = cli("reduce recover-n " + data_file("triangle.g"));
  CHECK(tri.exit_code == 0);
  CHECK(field(tri.out, "orientations") == "2");
  CHECK(field(tri.out, "residues") == "3:2 5:2");

  auto bt = cli("reduce recover-n " + data_file("bowtie.g") + " --check");
  CHECK(field(bt.out, "orientations") == "4");
  CHECK(field(bt.out, "residues") == "3:1 5:4 7:4");
  CHECK(field(bt.out, "check_prime") == "11");

  auto wide = cli("reduce recover-n " + data_file("c4.g") + " --policy paper-range");
  CHECK(field(wide.out, "orientations") == "2");
  CHECK(field(wide.out, "residues") == "5:2 7:2");
}

TEST_CASE("census") {
  auto r = cli("census " + data_file("triangle.g") + " --p 3");
  CHECK(r.exit_code == 0);
  CHECK(field(r.out, "special_total") == "16");
  CHECK(field(r.out, "special_expected") == "16");
  CHECK(field(r.out, "nonspecial_not_divisible") == "0");
}

TEST_CASE("lemma1") {
  auto one = cli("lemma1 --n 4");
  CHECK(field(one.out, "product") == "5005");
  CHECK(field(one.out, "bound") == "384");
  CHECK(field(one.out, "holds") == "true");
  auto sweep = cli("lemma1 --sweep 4..150");
  CHECK(field(sweep.out, "holds") == "true");
  CHECK(field(sweep.out, "checked") == "147");
  CHECK(cli("lemma1 --n 3").exit_code == 2);
  CHECK(cli("lemma1 --sweep 4-9").exit_code == 2);
}

TEST_CASE("gadget files parse back") {
  const auto out = temp_path("digon_g3.g");
  auto r = cli("gadget gp " + data_file("digon.g") + " --p 3 -o '" + out + "'");
  REQUIRE(r.exit_code == 0);
  const auto g = eulercount::parse_graph(slurp(out));
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 10);
  CHECK(field(r.out, "edges") == "10");

  const auto nae_out = temp_path("one_clause.g");
  auto n = cli("nae gadget " + data_file("one_clause.cnf") + " -o '" + nae_out + "'");
  REQUIRE(n.exit_code == 0);
  CHECK(field(n.out, "p") == "3");
  const auto h = eulercount::parse_graph(slurp(nae_out));
  CHECK(h.vertex_count() == 8);
  CHECK(h.edge_count() == 28);
}

TEST_CASE("nae verify") {
  auto two = cli("nae verify " + data_file("two_clause.cnf"));
  CHECK(field(two.out, "nae") == "4");
  CHECK(field(two.out, "unanimous") == "4");
  CHECK(field(two.out, "congruent") == "true");
  auto zero = cli("nae verify " + data_file("unsat.cnf"));
  CHECK(field(zero.out, "nae") == "0");
  CHECK(field(zero.out, "exact") == "true");
  CHECK(field(cli("nae verify " + data_file("one_clause.cnf") + " --p 5").out, "p") == "5");
}

TEST_CASE("json reports carry the same fields") {
  auto text = cli("count-orbs " + data_file("bowtie.g") + " --root 5");
  auto json = cli("count-orbs " + data_file("bowtie.g") + " --root 5 --json");
  REQUIRE(json.exit_code == 0);
  const auto obj = nlohmann::json::parse(json.out);
  CHECK(obj.at("orbs") == "4");
  CHECK(obj.at("root") == "5");
  CHECK(obj.at("input") == field(text.out, "input"));
  CHECK(obj.contains("seconds"));
}

TEST_CASE("exit codes") {
  CHECK(cli("count-circuits " + data_file("loop.g")).exit_code == 2);
  CHECK(cli("count-circuits " + data_file("missing.g")).exit_code == 2);
  CHECK(cli("nae verify " + data_file("repeated.cnf")).exit_code == 2);
  CHECK(cli("gadget gp " + data_file("digon.g") + " --p 4 -o '" + temp_path("x.g") + "'").exit_code == 2);
  CHECK(cli("count-orbs " + data_file("k5.g") + " --root 9").exit_code == 2);
  CHECK(cli("no-such-command").exit_code == 2);
  CHECK(cli("count-circuits " + data_file("k5.g") + " --budget 3").exit_code == 3);
  CHECK(cli("count-orientations " + data_file("k5.g") + " --budget 3 --threads 4").exit_code == 3);
  CHECK(cli("reduce recover-n " + data_file("bowtie.g") + " --check --perturb-oracle").exit_code == 4);
}

TEST_CASE("loop error names the line") {
  FILE* pipe = popen((cli_command("count-circuits " + data_file("loop.g")) + " 2>&1").c_str(), "r");
  REQUIRE(pipe);
  char buf[256] = {};
  const auto got = std::fread(buf, 1, sizeof buf - 1, pipe);
  pclose(pipe);
  CHECK(std::string(buf, got).find("line 2") != std::string::npos);
}
