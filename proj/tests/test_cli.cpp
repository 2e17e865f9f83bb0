#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using diagcat::cli::Command;
using diagcat::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("compose prints the scalar, sign and diagram") {
  auto r = call({"compose", "--category", "brauer", "2->0:(b1 b2)", "0->2:(t1 t2)"});
  CHECK(r.code == 0);
  CHECK(r.out == "d^1 * 1 * (0->0:)\n");
  r = call({"compose", "--category", "brauer", "--delta", "-2", "2->0:(b1 b2)", "0->2:(t1 t2)"});
  CHECK(r.out == "-2 * 1 * (0->0:)\n");
  r = call({"compose", "--category", "brauer", "--delta", "0", "2->0:(b1 b2)", "0->2:(t1 t2)"});
  CHECK(r.out == "0\n");
  r = call({"compose", "--category", "degenerate_partition", "2->1:{b1 b2 t1}", "1->2:{b1 t1 t2}"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
  r = call({"compose", "--category", "signed", "2->0:(b1>b2)", "0->2:(t2>t1)"});
  CHECK(r.out == "d^1 * 1 * (0->0:)\n");
  r = call({"compose", "--category", "signed", "2->0:(b1>b2)", "0->2:(t1>t2)"});
  CHECK(r.out == "d^1 * -1 * (0->0:)\n");
}

TEST_CASE("worked examples through the command line") {
  auto r = call({"compose", "--category", "brauer", "7->5:(b1 t1)(b6 t2)(b2 t4)(b4 b7)(b3 b5)(t3 t5)",
                 "3->7:(b1 t2)(b2 t1)(b3 t6)(t3 t4)(t5 t7)"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("d^1 * 1 * (", 0) == 0);
  r = call({"compose", "--category", "partition", "--json", "7->5:{b1 t1}{t2 t3}{b2}{b3}{b4}{b5 t4 t5}{b6 b7}",
            "4->7:{t1}{t3}{t4}{b1 t2}{b2 b3}{t5 t6}{b4 t7}"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("closed_count") == 2);
  CHECK(doc.at("text") == "d^2 * 1 * (4->5:{b1}{b2 b3}{b4 t4 t5}{t1}{t2 t3})");
}

TEST_CASE("enumerate counts") {
  CHECK(call({"enumerate", "--category", "temperley_lieb", "3", "3", "--count"}).out == "5\n");
  CHECK(call({"enumerate", "--category", "brauer", "2", "2", "--count"}).out == "3\n");
  CHECK(call({"enumerate", "--category", "partition", "2", "2", "--count"}).out == "15\n");
  CHECK(call({"enumerate", "--category", "walled", "1+1", "1+1", "--count"}).out == "2\n");
  CHECK(call({"enumerate", "--category", "brauer", "1", "0"}).out.empty());
  const auto r = call({"enumerate", "--category", "brauer", "0", "2"});
  CHECK(r.out == "0->2:(t1 t2)\n");
  CHECK(call({"enumerate", "--category", "walled", "2", "2"}).code == 2);
}

TEST_CASE("domain errors exit 1 with stable codes") {
  auto r = call({"compose", "--category", "brauer", "2->1:(b1 b2)", "1->1:(b1 t1)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("ParityViolation") != std::string::npos);
  r = call({"compose", "--category", "brauer", "2->2:(b1 t1)(b1 t2)", "2->2:(b1 t1)(b2 t2)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("NotAMatching") != std::string::npos);
  r = call({"compose", "--category", "brauer", "--json", "2->2:(b1 x)", "2->2:(b1 t1)(b2 t2)"});
  CHECK(r.code == 1);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("error").at("code") == "SyntaxError");
  CHECK(doc.at("error").at("position") == 9);
  r = call({"compose", "--category", "brauer", "2->2:(b1 t1)(b2 t2)", "1->1:(b1 t1)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("ShapeMismatch") != std::string::npos);
  r = call({"taut", "--category", "signed", "--dim", "3", "0->0:"});
  CHECK(r.code == 1);
  r = call({"char", "2", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("SizeMismatch") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"compose", "--category", "brauer", "0->0:"}).code == 2);
  CHECK(call({"compose", "--category", "nonsense", "0->0:", "0->0:"}).code == 2);
  CHECK(call({"compose", "0->0:", "0->0:"}).code == 2);
  CHECK(call({"compose", "--category", "brauer", "--delta", "x", "0->0:", "0->0:"}).code == 2);
  CHECK(call({"taut", "--category", "brauer", "0->0:"}).code == 2);
  CHECK(call({"mult", "--weight", "2"}).code == 2);
  CHECK(call({"semisimple", "--n", "2"}).code == 2);
  CHECK(call({"verify", "--category", "brauer", "--max-size", "2"}).code == 2);
  CHECK(call({"verify", "--axioms", "--principal", "--category", "brauer", "--max-size", "2"}).code == 2);
  const auto help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("compose") != std::string::npos);
  CHECK(call({"compose", "--help"}).code == 0);
}

TEST_CASE("taut, mult, char, semisimple, factor") {
  CHECK(call({"taut", "--category", "brauer", "--dim", "2", "2->0:(b1 b2)"}).out == "1 0 0 1\n");
  CHECK(call({"taut", "--category", "tl", "--q", "2", "0->2:(t1 t2)"}).out == "0\n1\n-2\n0\n");
  CHECK(call({"mult", "--delta-of", "2,1", "--weight", "3,1,1"}).out == "1\n");
  CHECK(call({"mult", "--delta-of", "", "--weight", "1,1"}).out == "0\n");
  CHECK(call({"mult", "--ptilde", "2", "--weight", ""}).out == "1\n");
  CHECK(call({"mult", "--ptilde", "2"}).out == "Ptilde(2) () 1\nPtilde(2) (2) 1\n");
  CHECK(call({"mult", "--delta-of", "1", "--weight", "3", "--oracle"}).out == "1\noracle 1\n");
  CHECK(call({"char", "2,1", "3"}).out == "-1\n");
  CHECK(call({"char", "1,1", "2"}).out == "-1\n");
  CHECK(call({"semisimple", "--category", "brauer", "--n", "2", "--delta", "0"}).out == "false\n");
  CHECK(call({"semisimple", "--category", "brauer", "--n", "2", "--delta", "1/2"}).out == "true\n");
  CHECK(call({"semisimple", "--discriminant", "--n", "2"}).out == "4*d^2\n");
  CHECK(call({"semisimple", "--discriminant", "--n", "4"}).code == 1);
  const auto f = call({"factor", "--category", "brauer", "2->2:(b1 b2)(t1 t2)"});
  CHECK(f.out == "middle: 0\ndown: 2->0:(b1 b2)\nup: 0->2:(t1 t2)\n");
}

TEST_CASE("verification subcommands report JSON and gate the exit code") {
  auto r = call({"verify", "--axioms", "--category", "brauer", "--max-size", "3"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("pass") == true);
  CHECK(doc.at("checks").size() == 5);
  for (const auto& c : doc.at("checks")) CHECK(c.at("pass") == true);
  r = call({"verify", "--principal", "2", "4"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("pass") == true);
  r = call({"verify", "--functoriality", "--category", "partition", "--dim", "2", "--max-size", "2"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("failures") == 0);
  CHECK(call({"verify", "--principal", "1", "2"}).code == 1);
}

TEST_CASE("commands round-trip through their canonical form") {
  const std::vector<std::vector<std::string>> cases = {
      {"compose", "--category", "brauer", "2->0:(b1 b2)", "0->2:(t1 t2)", "--json"},
      {"compose", "--delta", "-1/2", "--category", "signed", "0->0:", "0->0:"},
      {"enumerate", "3", "3", "--count", "--category", "tl"},
      {"taut", "--dim", "2", "--category", "partition", "1->2:{b1 t1 t2}"},
      {"mult", "--delta-of", "", "--max-weight", "4"},
      {"char", "2,1"},
      {"semisimple", "--discriminant", "--n", "3", "--delta", "1"},
      {"verify", "--principal", "2", "4"},
      {"factor", "--category", "fi_sharp", "2->2:[b1->t2]"},
  };
  for (const auto& args : cases) {
    const Command c = diagcat::cli::parse_command(args);
    CHECK(diagcat::cli::parse_command(diagcat::cli::canonical_args(c)) == c);
    CHECK(diagcat::cli::canonical_args(diagcat::cli::parse_command(diagcat::cli::canonical_args(c))) ==
          diagcat::cli::canonical_args(c));
  }
  const Command c = diagcat::cli::parse_command({"compose", "--json", "--category", "brauer", "2->0:(b1 b2)", "0->0:"});
  CHECK(diagcat::cli::to_string(c) == "compose --json --category brauer '2->0:(b1 b2)' '0->0:'");
}

TEST_CASE("output is deterministic and --out writes the JSON document") {
  const std::vector<std::string> args = {"enumerate", "--category", "partition", "2", "1", "--json"};
  CHECK(call(args).out == call(args).out);
  const std::string path = "diagcat_cli_test_out.json";
  auto r = call({"char", "3", "--out", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc.at("dimension") == 1);
  std::remove(path.c_str());
}
