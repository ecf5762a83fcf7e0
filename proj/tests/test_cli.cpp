#include <json.hpp>

#include <sstream>

#include "doctest.h"
#include "gradix/cli.hpp"
#include "gradix/oracle.hpp"
#include "gradix/parser.hpp"
#include "gradix/star.hpp"

using namespace gradix;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run gradix_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(GRADIX_FIXTURE_DIR) + "/" + name; }

// The JSON ring string plus a rendered ideal re-parse into a document.
Ideal reparse(const json& doc, const json& gens) {
  std::string body;
  for (const auto& g : gens) body += (body.empty() ? "" : ", ") + g.get<std::string>();
  return parse_document("ring " + doc["ring"].get<std::string>() + ";\nideal J = " + (body.empty() ? "0" : body) + ";")
      .ideal("J");
}

}  // namespace

TEST_CASE("index of the running example") {
  const Run r = gradix_run({"index", "-i", fixture("running.gx"), "--ideal", "I"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "2\n");
  CHECK(gradix_run({"gindex", "-i", fixture("running.gx")}).out == "2\n");
  CHECK(gradix_run({"index", "-i", fixture("running_gf3.gx")}).out == "2\n");
  CHECK(gradix_run({"type", "-i", fixture("running.gx"), "--ideal", "J1"}).out == "1\n");
}

TEST_CASE("zero ideal") {
  const Run r = gradix_run({"gb", "-i", fixture("empty.gx"), "--ideal", "Z"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  const json j = json::parse(gradix_run({"gb", "-i", fixture("empty.gx"), "--json"}).out);
  CHECK(j["result"]["basis"].empty());
}

TEST_CASE("json schema") {
  const Run r = gradix_run({"compare-star", "-i", fixture("three_var_graded.gx"), "--ideal", "I", "--json"});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  for (const char* key : {"schema", "command", "ring", "inputs", "result", "certificates", "theorem_contradictions",
                          "timings"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "compare-star");
  CHECK(j["timings"].is_null());
  CHECK(j["result"]["r"] == 3);
  // I is graded, so I* = I and r* = r
  CHECK(j["result"]["r_star"] == 3);
  CHECK(j["result"]["radical_graded"] == true);
  CHECK(j["theorem_contradictions"].empty());

  const json t = json::parse(gradix_run({"index", "-i", fixture("running.gx"), "--json", "--timings"}).out);
  CHECK(t["timings"]["total_ms"].is_number());

  const json b = json::parse(gradix_run({"compare-star", "-i", fixture("three_var_local.gx"), "--json"}).out);
  CHECK(b["result"]["r"] == 1);
  CHECK(b["result"]["r_star"] == 3);
  CHECK(b["result"]["conclusion_holds"] == false);
  CHECK(b["result"]["hypothesis_met"] == false);
}

TEST_CASE("reported ideals re-parse") {
  const json j = json::parse(gradix_run({"star", "-i", fixture("laurent.gx"), "--json"}).out);
  const Document doc = parse_document("ring QQ[x,y,t,t^-1] weights(0,1,1);\nideal I = x-y, t-1, x^2;");
  CHECK(ideal_equal(reparse(j, j["result"]["star"]), star(doc.ideal("I")).ideal));
  CHECK(j["certificates"]["method"] == "lambda");

  const json d = json::parse(gradix_run({"decompose", "-i", fixture("running.gx"), "--graded", "--json"}).out);
  REQUIRE(d["result"]["components"].size() == 2);
  for (const auto& c : d["result"]["components"]) {
    const Ideal comp = parse_document("ring " + d["ring"].get<std::string>() + ";\nideal J = " + c.get<std::string>() +
                                      ";")
                           .ideal("J");
    CHECK(is_graded(comp));
  }
  for (const char* cmd : {"gb", "socle"}) {
    const json g = json::parse(gradix_run({cmd, "-i", fixture("running.gx"), "--json"}).out);
    CHECK_NOTHROW(reparse(g, g["result"]["basis"]));
  }
}

TEST_CASE("ideal operations from the command line") {
  const std::string running = fixture("running.gx");
  CHECK(gradix_run({"nf", "-i", running, "--poly", "x^2"}).out == "y^2\n");
  CHECK(gradix_run({"member", "-i", running, "--poly", "x^3"}).out == "true\n");
  CHECK(gradix_run({"member", "-i", running, "--poly", "x"}).out == "false\n");
  CHECK(gradix_run({"intersect", "-i", running, "--ideal", "A", "--with", "B"}).out ==
        "ideal: x*y+y^2, x^2-y^2, y^3\n");
  CHECK(gradix_run({"quotient", "-i", running, "--poly", "x+y"}).out == "ideal: y, x\n");
  CHECK(gradix_run({"quotient", "-i", running, "--with", "B"}).code == cli::kExitOk);
  CHECK(gradix_run({"saturate", "-i", running, "--poly", "x"}).out == "ideal: 1\n");
  CHECK(gradix_run({"eliminate", "-i", running, "--vars", "x"}).out == "ideal: y^3\n");
  CHECK(gradix_run({"hilbert", "-i", running}).out == "1 2 1\n");
  const Run v = gradix_run({"verify", "-i", running, "--with", "J1,J2"});
  CHECK(v.code == cli::kExitOk);
  CHECK(v.out.find("valid: yes") != std::string::npos);
  CHECK(v.out.find("irreducible: true, true") != std::string::npos);
  CHECK(gradix_run({"gb", "-i", running, "--order", "lex"}).code == cli::kExitOk);
  CHECK(gradix_run({"star", "-i", fixture("three_var_local.gx"), "--bound", "3"}).out.find("certified") != std::string::npos);
  CHECK(gradix_run({"star", "-i", fixture("empty.gx"), "--ideal", "N", "--bound", "3"}).out ==
        "star: 0\nmethod: truncated, certificate: bounded\n");
}

TEST_CASE("exit codes") {
  CHECK(gradix_run({}).code == cli::kExitUsage);
  CHECK(gradix_run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(gradix_run({"index"}).code == cli::kExitUsage);
  CHECK(gradix_run({"index", "-i", fixture("missing.gx")}).code == cli::kExitUsage);
  CHECK(gradix_run({"index", "-i", fixture("running.gx"), "--ideal", "Nope"}).code == cli::kExitUsage);
  CHECK(gradix_run({"nf", "-i", fixture("running.gx")}).code == cli::kExitUsage);
  CHECK(gradix_run({"gb", "-i", fixture("running.gx"), "--order", "weird"}).code == cli::kExitUsage);
  CHECK(gradix_run({"--help"}).code == cli::kExitOk);

  const Run refused = gradix_run({"gindex", "-i", fixture("laurent.gx")});
  CHECK(refused.code == cli::kExitRefused);
  CHECK(refused.err.find("NotGraded") != std::string::npos);
  CHECK(gradix_run({"index", "-i", fixture("empty.gx")}).code == cli::kExitRefused);

  const Run doctored = gradix_run({"oracle", "-i", fixture("doctored.gx")});
  CHECK(doctored.code == cli::kExitContradiction);
  CHECK(doctored.err.find("theorem contradiction") != std::string::npos);
}

TEST_CASE("oracle and corpus commands") {
  const json o = json::parse(gradix_run({"oracle", "-i", fixture("running_gf3.gx"), "--json"}).out);
  CHECK(o["result"]["r"] == 2);
  CHECK(o["result"]["r_graded"] == 2);
  CHECK(o["result"]["ideals"] == 11);

  const Run dumped = gradix_run({"oracle", "--dump", "-i", fixture("running_gf3.gx")});
  REQUIRE(dumped.code == cli::kExitOk);
  const OracleReport again = oracle_theorems(load_fixture(dumped.out));
  CHECK(again.lattice_size == 11);
  CHECK(again.index == 2);

  const Run a = gradix_run({"verify-thm", "--count", "12", "--seed", "4", "--json"});
  CHECK(a.code == cli::kExitOk);
  const Run b = gradix_run({"verify-thm", "--count", "12", "--seed", "4", "--json", "--jobs", "3"});
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["result"]["failed"] == 0);
  const Run c = gradix_run({"verify-thm", "-i", fixture("running.gx"), "--json"});
  // J1 and J2 are not graded: those entries fail the graded checks
  CHECK(json::parse(c.out)["result"]["passed"] == 3);
}

TEST_CASE("Moh curves") {
  const Run r = gradix_run({"moh", "--n", "1", "--l", "3", "--json"});
  CHECK(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["result"]["star_principal"] == true);
  CHECK(j["result"]["local_generators"] >= 1);
  const Run even = gradix_run({"moh", "--n", "2", "--l", "25"});
  CHECK(even.code == cli::kExitUsage);
  CHECK(even.err.find("odd") != std::string::npos);
  CHECK(gradix_run({"moh", "--n", "1", "--l", "2"}).code == cli::kExitUsage);
  CHECK(gradix_run({"moh", "--n", "3", "--l", "26", "--slow"}).code == cli::kExitUsage);
  CHECK(gradix_run({"moh", "--n", "3", "--l", "25"}).code == cli::kExitUsage);
  CHECK_THROWS_AS(cli::moh_report(3, 24, Field::prime(32003)), Error);
}

TEST_CASE("seeds are reproducible") {
  const auto a = gradix_run({"verify-thm", "--count", "6", "--seed", "99", "--json"}).out;
  const auto b = gradix_run({"verify-thm", "--count", "6", "--seed", "99", "--json"}).out;
  CHECK(a == b);
  CHECK(a != gradix_run({"verify-thm", "--count", "6", "--seed", "98", "--json"}).out);
}
