#include <doctest.h>

#include "diagcat/diagram.hpp"
#include "diagcat/error.hpp"
#include "diagcat/notation.hpp"

using namespace diagcat;

TEST_CASE("parse brauer text") {
  const auto d = parse_diagram(Category::brauer, "3->5:(b1 b3)(b2 t4)(t1 t2)(t3 t5)");
  CHECK(d == Diagram(BrauerDiagram(3, 5, {{bottom(1), bottom(3)}, {bottom(2), top(4)}, {top(1), top(2)}, {top(3), top(5)}})));
  CHECK(parse_diagram(Category::brauer, "0->0:") == Diagram(BrauerDiagram::identity(0)));
  CHECK(parse_diagram(Category::brauer, "  3 -> 5 : (b1  b3) (b2 t4)(t1 t2)(t3 t5) ") == d);
}

TEST_CASE("semantic errors surface with their codes") {
  try {
    parse_diagram(Category::brauer, "2->2:(b1 b2)");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_matching);
  }
  CHECK_THROWS_AS(parse_diagram(Category::temperley_lieb, "2->2:(b1 t2)(b2 t1)"), Error);
  CHECK_THROWS_AS(parse_diagram(Category::brauer, "2->0:(b1>b2)"), Error);
  CHECK_THROWS_AS(parse_diagram(Category::signed_brauer, "2->0:(b1 b2)"), Error);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_diagram(Category::brauer, "2->0:(b1 x2)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 9);
    CHECK(e.code() == ErrorCode::syntax_error);
  }
  CHECK_THROWS_AS(parse_diagram(Category::brauer, "2-0:"), SyntaxError);
  CHECK_THROWS_AS(parse_diagram(Category::brauer, "2->0:(b1 b2) trailing"), SyntaxError);
  CHECK_THROWS_AS(parse_diagram(Category::partition, "1->1:{b1 t1"), SyntaxError);
  CHECK_THROWS_AS(parse_diagram(Category::fi_sharp, "1->1:[t1->b1]"), SyntaxError);
}

TEST_CASE("text round trip for every variant") {
  const std::vector<std::pair<Category, std::string>> samples{
      {Category::brauer, "3->5:(b1 b3)(b2 t4)(t1 t2)(t3 t5)"},
      {Category::temperley_lieb, "2->2:(b1 b2)(t1 t2)"},
      {Category::signed_brauer, "2->2:(b1>b2)(t2>t1)"},
      {Category::walled_brauer, "1+1->1+1:(b1 t1)(b2 t2)"},
      {Category::partition, "4->5:{b1}{b2 b3}{b4 t4 t5}{t1}{t2 t3}"},
      {Category::degenerate_partition, "1->1:{b1}{t1}"},
      {Category::fi_sharp, "2->2:[b1->t2, b2->t1]"},
      {Category::fi_sharp, "2->2:[]"},
      {Category::fa, "2->1:[b1->t1, b2->t1]"},
  };
  for (const auto& [c, text] : samples) {
    const auto d = parse_diagram(c, text);
    CHECK(format_diagram(d) == text);
    CHECK(diagram_from_json(diagram_to_json(c, d)) == d);
  }
}

TEST_CASE("signed orientation survives text and json") {
  const auto d = parse_diagram(Category::signed_brauer, "2->0:(b2>b1)");
  CHECK(format_diagram(d) == "2->0:(b2>b1)");
  const auto j = diagram_to_json(Category::signed_brauer, d);
  CHECK(j["edges"][0][0] == "b2");
  CHECK(diagram_from_json(j) == d);
}

TEST_CASE("json schema") {
  const auto d = parse_diagram(Category::partition, "1->1:{b1 t1}");
  const auto j = diagram_to_json(Category::partition, d);
  CHECK(j["variant"] == "partition");
  CHECK(j["bottom"] == 1);
  CHECK(j["blocks"].size() == 1);
  CHECK_THROWS_AS(diagram_from_json(nlohmann::json{{"variant", "brauer"}}), Error);
}
