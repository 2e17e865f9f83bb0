#include <doctest.h>

#include <random>

#include "diagcat/delta_poly.hpp"
#include "diagcat/eigen_support.hpp"

using namespace diagcat;

namespace {

DeltaPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(-1, max_degree), num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int k = 0, d = deg(rng); k <= d; ++k) c.emplace_back(num(rng), den(rng));
  return DeltaPoly(std::move(c));
}

} // namespace

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("evaluate") {
  const DeltaPoly d = DeltaPoly::delta();
  CHECK(d.evaluate(3) == Rational(3));
  CHECK((d * d - DeltaPoly(1)).evaluate(2) == Rational(3));
  CHECK(DeltaPoly().evaluate(Rational(7, 3)) == Rational(0));
}

TEST_CASE("normal form") {
  CHECK(DeltaPoly({1, 0, 0}).degree() == 0);
  CHECK(DeltaPoly({0, 0}).is_zero());
  CHECK((DeltaPoly::delta() - DeltaPoly::delta()).coefficients().empty());
}

TEST_CASE("text form round trips") {
  const DeltaPoly p({Rational(-1), Rational(1, 2), Rational(0), Rational(3)});
  CHECK(p.str() == "-1 + 1/2*d + 3*d^3");
  CHECK(DeltaPoly::parse(p.str()) == p);
  CHECK(DeltaPoly::parse("d^2 - 1") == DeltaPoly({-1, 0, 1}));
  CHECK(DeltaPoly::parse("-d") == -DeltaPoly::delta());
  CHECK(DeltaPoly().str() == "0");
  CHECK_THROWS(DeltaPoly::parse("2*"));
  CHECK_THROWS(DeltaPoly::parse(""));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng, 8), b = random_poly(rng, 8), c = random_poly(rng, 8);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const Rational x(trial % 7 - 3, trial % 4 + 1);
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
  }
}

TEST_CASE("division and gcd") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng, 5), b = random_poly(rng, 4);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK((a * b) / b == a);
  }
  const DeltaPoly x = DeltaPoly::delta();
  const auto g = gcd((x - DeltaPoly(1)) * (x + DeltaPoly(2)), (x - DeltaPoly(1)) * x);
  CHECK(g == x - DeltaPoly(1));
  CHECK_THROWS_AS(x / (x + DeltaPoly(1)), std::domain_error);
}

TEST_CASE("rational roots") {
  const DeltaPoly x = DeltaPoly::delta();
  const auto p = x * x * (DeltaPoly(2) * x - DeltaPoly(1)) * (x + DeltaPoly(3)) * (x * x + DeltaPoly(1));
  CHECK(rational_roots(p) == std::vector<Rational>{Rational(-3), Rational(0), Rational(1, 2)});
  CHECK(rational_roots(DeltaPoly(5)).empty());
  CHECK(rational_roots(x * x - DeltaPoly(2)).empty());
}

TEST_CASE("negate variable") {
  const DeltaPoly p({1, 2, 3});
  CHECK(p.negate_variable() == DeltaPoly({1, -2, 3}));
}

TEST_CASE("bareiss determinant over Q[d]") {
  const DeltaPoly d = DeltaPoly::delta();
  PolyMatrix g(3, 3);
  g << DeltaPoly(3), DeltaPoly(1), d, DeltaPoly(1), DeltaPoly(3), d, d, d, d * d;
  CHECK(bareiss_determinant(g) == DeltaPoly::monomial(2, 4));
  RationalMatrix m(2, 2);
  m << Rational(0), Rational(1), Rational(2), Rational(3);
  CHECK(bareiss_determinant(m) == Rational(-2));
  CHECK(rank(m) == 2);
  RationalMatrix s(2, 3);
  s << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6);
  const auto ns = null_space(s);
  CHECK(ns.cols() == 2);
  CHECK((s * ns).isZero());
}
