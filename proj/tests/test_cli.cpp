#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

// Run the CLI binary with stderr folded into stdout and capture both the
// text and the exit code.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SILTLAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(SILTLAB_FIXTURES_DIR) + "/" + name;
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
  int count = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    if (text.compare(pos, prefix.size(), prefix) == 0) ++count;
    pos = end + 1;
  }
  return count;
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("table on the A3 fixture prints one row per silting object") {
  RunResult r = run_cli("table " + fixture("a3.quiver"));
  CHECK(r.code == 0);
  CHECK(count_lines_starting(r.out, "row ") == 14);
  CHECK(contains(r.out, "seed=20240901"));
  CHECK(contains(r.out, "14 rows (complete)"));
}

TEST_CASE("hom prints the module Hom dimension") {
  RunResult r = run_cli("hom " + fixture("a3.quiver") + " P1 P3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "dim Hom(P1, P3) = 1"));

  RunResult shifted = run_cli("hom " + fixture("a3.quiver") + " 'P1[1]' 'P2[1]'");
  CHECK(shifted.code == 0);
  CHECK(contains(shifted.out, "= 1"));
  CHECK(contains(shifted.out, "[complex]"));
}

TEST_CASE("semistable M-notion accepts fixture aliases") {
  RunResult r = run_cli("semistable " + fixture("square.quiver") +
                        " --complex X1 --module P2 --notion M");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "semistable"));
  CHECK_FALSE(contains(r.out, "not semistable"));

  RunResult self = run_cli("semistable " + fixture("square.quiver") +
                           " --complex X1 --module P1 --notion M");
  CHECK(self.code == 0);
  CHECK(contains(self.out, "not semistable"));
}

TEST_CASE("numerical verdicts separate refutations from budget-limited passes") {
  RunResult refuted = run_cli("semistable " + fixture("square.quiver") +
                              " --complex 'P1,P1[1]' --notion numerical --theta 1,1");
  CHECK(refuted.code == 0);  // exact refutation: clean exit
  CHECK(contains(refuted.out, "not semistable"));
  CHECK(contains(refuted.out, "pairing -1"));

  RunResult limited = run_cli("semistable " + fixture("square.quiver") +
                              " --complex 'X1,X2' --notion numerical --theta 1,1");
  CHECK(limited.code == 2);  // survived the search, flagged as within budget
  CHECK(contains(limited.out, "within budget"));
}

TEST_CASE("king notion runs over a prime field and is refused over Q") {
  RunResult fp = run_cli("semistable " + fixture("a3.quiver") +
                         " --module S2 --notion king --theta -1,1,0 --field Fp:5");
  CHECK(fp.code == 0);

  RunResult q = run_cli("semistable " + fixture("a3.quiver") +
                        " --module S2 --notion king --theta -1,1,0");
  CHECK(q.code == 1);
  CHECK(contains(q.out, "finite field"));
}

TEST_CASE("unknown object names and unsupported formats are hard errors") {
  CHECK(run_cli("hom " + fixture("a3.quiver") + " P1 ZZZ").code == 1);
  CHECK(run_cli("semistable " + fixture("a3.quiver") +
                " --complex ZZZ --module P1 --notion M")
            .code == 1);
  CHECK(run_cli("silting " + fixture("a3.quiver") + " --format dot").code == 1);
  CHECK(run_cli("table " + fixture("a3.quiver") + " --dim-bound 0").code == 1);
  CHECK(run_cli("table no_such_file.quiver").code == 1);
}

TEST_CASE("truncated universes exit with the incompleteness code") {
  RunResult r = run_cli("indecs " + fixture("kronecker.quiver") + " --dim-bound 6");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "truncated"));
}

TEST_CASE("identical config and seed give byte-identical output") {
  const std::string cmd = "table " + fixture("a3.quiver") + " --format json --seed 7";
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"seed\": 7"));
}

TEST_CASE("json outputs parse and carry the documented fields") {
  RunResult r = run_cli("table " + fixture("a3.quiver") + " --format json");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "table");
  CHECK(j["field"] == "Q");
  CHECK(j["seed"] == 20240901);
  CHECK(j["complete"] == true);
  REQUIRE(j["rows"].size() == 14);
  for (const auto& row : j["rows"]) {
    CHECK(row["silting"].size() == 3);
    CHECK(row.contains("cotorsion_x"));
    CHECK(row.contains("cotorsion_y"));
    CHECK(row.contains("thick"));
    CHECK(row.contains("wide"));
    CHECK(row.contains("torsion_t"));
  }
  // round trip: parse -> dump -> parse is the identity
  CHECK(nlohmann::json::parse(j.dump(2)) == j);

  RunResult s = run_cli("semistable " + fixture("square.quiver") +
                        " --complex 'X1,X2' --notion numerical --theta 1,1 --format json");
  CHECK(s.code == 2);
  nlohmann::json sj = nlohmann::json::parse(s.out);
  CHECK(sj["semistable"] == "true-within-budget");
  CHECK(sj["budget"]["mult_bound"] == 2);
  CHECK(sj["seed"] == 20240901);
}

TEST_CASE("the AR-quiver DOT output reproduces the A3 mesh") {
  RunResult r = run_cli("indecs " + fixture("a3.quiver") + " --format dot");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "digraph ar_quiver"));
  CHECK(contains(r.out, "seed=20240901"));
  // 6 solid irreducible-map arrows and 3 dashed translate edges
  CHECK(count_lines_starting(r.out, "  m") - 6 /* node lines */ == 9);
  CHECK(count_lines_starting(r.out, "digraph") == 1);

  RunResult fp = run_cli("indecs " + fixture("a3.quiver") + " --format dot --field Fp:5");
  CHECK(fp.code == 1);  // the trace-form radical is a characteristic-zero tool
}

TEST_CASE("the thick-subcategory poset has a bottom and a top") {
  RunResult r = run_cli("table " + fixture("a3.quiver") + " --format dot");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "digraph thick_poset"));
  CHECK(contains(r.out, "[label=\"{}\"]"));
  CHECK(contains(r.out, "[label=\"{I3,S2,P1,I2,P2,P3,P1[1],P2[1],P3[1]}\"]"));
}

TEST_CASE("diagram and silting commands succeed on the fixtures") {
  RunResult d = run_cli("diagram " + fixture("a3.quiver"));
  CHECK(d.code == 0);
  CHECK(contains(d.out, "all rows commute"));

  RunResult s = run_cli("silting " + fixture("onevertex.quiver"));
  CHECK(s.code == 0);
  CHECK(contains(s.out, "2 silting objects (complete)"));

  RunResult i = run_cli("info " + fixture("a3.quiver"));
  CHECK(i.code == 0);
  CHECK(contains(i.out, "dim_k algebra = 6"));
}
