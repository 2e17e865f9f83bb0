#include <doctest.h>

#include "diagcat/compose.hpp"
#include "diagcat/error.hpp"
#include "diagcat/notation.hpp"
#include "diagcat/taut.hpp"
#include "oracles/tensor.hpp"

using namespace diagcat;

namespace {

std::vector<std::vector<Vertex>> blocks_of(const Diagram& d) {
  if (const auto* p = std::get_if<PartitionDiagram>(&d)) return p->blocks();
  std::vector<std::vector<Vertex>> out;
  for (const auto& e : std::get<BrauerDiagram>(d).edges()) out.push_back({e.first, e.second});
  return out;
}

void check_against_oracle(const TautContext& ctx, const Diagram& d) {
  const int n = source(ctx.category, d).size(), m = target(ctx.category, d).size();
  const auto mat = taut_matrix_as<std::int64_t>(ctx, d);
  const auto blocks = blocks_of(d);
  for (Eigen::Index r = 0; r < mat.rows(); ++r)
    for (Eigen::Index c = 0; c < mat.cols(); ++c)
      REQUIRE(mat(r, c) == oracle::constant_on_blocks(blocks, oracle::digits(c, ctx.dimension, n),
                                                      oracle::digits(r, ctx.dimension, m)));
}

} // namespace

TEST_CASE("brauer 3->5 example contracts the first and third factors") {
  const int p = 2;
  const auto d = parse_diagram(Category::brauer, "3->5:(b1 b3)(b2 t4)(t1 t2)(t3 t5)");
  const auto mat = taut_matrix(TautContext::brauer(p), d);
  REQUIRE(mat.rows() == 32);
  REQUIRE(mat.cols() == 8);
  RationalMatrix expected = RationalMatrix::Zero(32, 8);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int r = 0; r < p; ++r)
        for (int s = 0; s < p; ++s) {
          const int col = (i * p + j) * p + i;
          const int row = (((r * p + r) * p + s) * p + j) * p + s;
          expected(row, col) += Rational(1);
        }
  CHECK(mat == expected);
}

TEST_CASE("brauer cup is the sum of diagonal tensors") {
  const auto mat = taut_matrix(TautContext::brauer(3), parse_diagram(Category::brauer, "0->2:(t1 t2)"));
  REQUIRE(mat.rows() == 9);
  REQUIRE(mat.cols() == 1);
  for (int r = 0; r < 9; ++r) CHECK(mat(r, 0) == Rational(r / 3 == r % 3 ? 1 : 0));
}

TEST_CASE("partition a_{1,2} duplicates a basis vector") {
  const auto mat = taut_matrix(TautContext::partition(3), parse_diagram(Category::partition, "1->2:{b1 t1 t2}"));
  REQUIRE(mat.rows() == 9);
  REQUIRE(mat.cols() == 3);
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 3; ++c) CHECK(mat(r, c) == Rational(r == 4 * c ? 1 : 0));
}

TEST_CASE("matrices agree with the block-constancy oracle") {
  for (int p : {1, 2, 3})
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m) {
        for (const auto& d : enumerate_diagrams(Category::brauer, DiagramObject::plain(n), DiagramObject::plain(m)))
          check_against_oracle(TautContext::brauer(p), d);
        for (const auto& d : enumerate_diagrams(Category::partition, DiagramObject::plain(n), DiagramObject::plain(m)))
          check_against_oracle(TautContext::partition(p), d);
      }
}

TEST_CASE("functoriality sweeps") {
  for (int p : {1, 2, 3}) {
    CAPTURE(p);
    const auto b = verify_taut_functoriality(TautContext::brauer(p), 3);
    CHECK_MESSAGE(b.pass, b.first_failure);
    CHECK(b.pairs_checked > 0);
    const auto pt = verify_taut_functoriality(TautContext::partition(p), 3);
    CHECK_MESSAGE(pt.pass, pt.first_failure);
    const auto w = verify_taut_functoriality(TautContext::walled(p), 3);
    CHECK_MESSAGE(w.pass, w.first_failure);
  }
  const auto s = verify_taut_functoriality(TautContext::signed_brauer(2), 3);
  CHECK_MESSAGE(s.pass, s.first_failure);
  const auto s4 = verify_taut_functoriality(TautContext::signed_brauer(4), 2);
  CHECK_MESSAGE(s4.pass, s4.first_failure);
  for (const Rational& q : {Rational(1), Rational(2), Rational(1, 2), Rational(-3, 5)}) {
    CAPTURE(q.str());
    const auto t = verify_taut_functoriality(TautContext::temperley_lieb(q), 3);
    CHECK_MESSAGE(t.pass, t.first_failure);
  }
}

TEST_CASE("brauer cap after cup is the dimension") {
  const auto ctx = TautContext::brauer(3);
  const auto cap = taut_matrix(ctx, parse_diagram(Category::brauer, "2->0:(b1 b2)"));
  const auto cup = taut_matrix(ctx, parse_diagram(Category::brauer, "0->2:(t1 t2)"));
  const RationalMatrix loop = cap * cup;
  REQUIRE(loop.rows() == 1);
  CHECK(loop(0, 0) == Rational(3));
}

TEST_CASE("permutations act by permuting tensor factors") {
  for (Category c : {Category::brauer, Category::partition}) {
    const auto ctx = c == Category::brauer ? TautContext::brauer(2) : TautContext::partition(2);
    for (int n = 0; n <= 3; ++n) {
      const auto perms = automorphisms(c, DiagramObject::plain(n));
      for (const auto& s : perms) {
        const auto ms = taut_matrix_as<std::int64_t>(ctx, s);
        for (Eigen::Index r = 0; r < ms.rows(); ++r) CHECK(ms.row(r).sum() == 1);
        for (Eigen::Index col = 0; col < ms.cols(); ++col) CHECK(ms.col(col).sum() == 1);
        for (const auto& t : perms) {
          const auto st = compose(c, s, t);
          REQUIRE(st.closed_count == 0);
          CHECK(taut_matrix_as<std::int64_t>(ctx, st.result) == ms * taut_matrix_as<std::int64_t>(ctx, t));
        }
      }
    }
  }
}

TEST_CASE("brauer transpose is the matrix transpose") {
  const auto ctx = TautContext::brauer(2);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& d : enumerate_diagrams(Category::brauer, DiagramObject::plain(n), DiagramObject::plain(m))) {
        const auto mat = taut_matrix_as<std::int64_t>(ctx, d);
        CHECK(taut_matrix_as<std::int64_t>(ctx, transpose(d)) == mat.transpose());
      }
}

TEST_CASE("temperley-lieb cap after cup is -q - 1/q") {
  for (const Rational& q : {Rational(1), Rational(2), Rational(1, 2)}) {
    const auto ctx = TautContext::temperley_lieb(q);
    const auto cap = taut_matrix(ctx, parse_diagram(Category::temperley_lieb, "2->0:(b1 b2)"));
    const auto cup = taut_matrix(ctx, parse_diagram(Category::temperley_lieb, "0->2:(t1 t2)"));
    const RationalMatrix loop = cap * cup;
    CHECK(loop(0, 0) == -q - Rational(1) / q);
    CHECK(ctx.parameter() == -q - Rational(1) / q);
    CHECK(cup(1, 0) == Rational(1));
    CHECK(cup(2, 0) == -q);
    CHECK(cap(0, 1) == -Rational(1) / q);
    CHECK(cap(0, 2) == Rational(1));
  }
}

TEST_CASE("p2 to p0 surjectivity holds exactly when delta is nonzero") {
  CHECK(check_p2_p0_surjectivity(Rational(1)));
  CHECK_FALSE(check_p2_p0_surjectivity(Rational(0)));
  CHECK(check_p2_p0_surjectivity(Rational(-2)));
  CHECK(check_p2_p0_surjectivity(Rational(1, 3)));
}

TEST_CASE("context validation and budget") {
  const auto d = parse_diagram(Category::brauer, "1->1:(b1 t1)");
  CHECK_THROWS_AS(taut_matrix(TautContext::brauer(-1), d), Error);
  TautContext odd = TautContext::signed_brauer(3);
  CHECK_THROWS_AS(odd.validate(), Error);
  CHECK_THROWS_AS(TautContext::temperley_lieb(Rational(0)).validate(), Error);
  try {
    taut_matrix(TautContext::partition(2), d);
    FAIL("expected a variant mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::variant_mismatch);
  }
  TautContext small = TautContext::brauer(3);
  small.row_budget = 8;
  try {
    taut_matrix(small, parse_diagram(Category::brauer, "2->2:(b1 t1)(b2 t2)"));
    FAIL("expected the budget guard");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::dimension_budget_exceeded);
  }
  TautContext fa{Category::fa, 2};
  CHECK_THROWS_AS(fa.validate(), Error);
}

TEST_CASE("dimension zero realizes everything as empty or scalar") {
  const auto ctx = TautContext::brauer(0);
  const auto empty = taut_matrix(ctx, parse_diagram(Category::brauer, "0->0:"));
  REQUIRE(empty.rows() == 1);
  CHECK(empty(0, 0) == Rational(1));
  const auto cup = taut_matrix(ctx, parse_diagram(Category::brauer, "0->2:(t1 t2)"));
  CHECK(cup.rows() == 0);
  CHECK(verify_taut_functoriality(ctx, 3).pass);
}

TEST_CASE("report json") {
  const auto j = to_json(verify_taut_functoriality(TautContext::brauer(1), 1));
  CHECK(j.at("pass") == true);
  CHECK(j.at("failures") == 0);
}
