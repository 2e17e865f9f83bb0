#include <doctest.h>

#include <random>

#include "diagcat/compose.hpp"
#include "diagcat/error.hpp"
#include "diagcat/linear.hpp"
#include "diagcat/notation.hpp"

using namespace diagcat;

namespace {

Morphism mor(Category c, const char* text, const DeltaPoly& coeff = DeltaPoly(1)) {
  return Morphism::from_diagram(c, parse_diagram(c, text), coeff);
}

Morphism random_morphism(std::mt19937& rng, Category c, int n, int m) {
  const auto basis = enumerate_diagrams(c, DiagramObject::plain(n), DiagramObject::plain(m));
  Morphism f(c, DiagramObject::plain(n), DiagramObject::plain(m));
  std::uniform_int_distribution<int> coin(0, 2), num(-3, 3);
  for (const auto& d : basis)
    if (coin(rng) == 0) f.add(d, DeltaPoly({Rational(num(rng)), Rational(num(rng))}));
  return f;
}

// Composition table for every triple of objects, indexed by basis position,
// so that associativity over all triples costs table lookups only.
struct Tables {
  struct Entry {
    int result;
    int closed;
    int sign;
    bool zero;
  };
  Category c;
  int max;
  std::vector<std::vector<Diagram>> basis; // [a * (max+1) + b]
  std::map<std::tuple<int, int, int>, std::vector<Entry>> table;

  Tables(Category cat, int max_size) : c(cat), max(max_size) {
    const int k = max + 1;
    basis.resize(static_cast<std::size_t>(k * k));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) basis[static_cast<std::size_t>(a * k + b)] = hom(a, b);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int d = 0; d < k; ++d) {
          const auto& first = at(a, b);
          const auto& second = at(b, d);
          const auto& target = at(a, d);
          auto& t = table[{a, b, d}];
          t.reserve(first.size() * second.size());
          for (const auto& y : second)
            for (const auto& x : first) {
              const auto r = compose(c, y, x);
              const auto pos = std::lower_bound(target.begin(), target.end(), r.result) - target.begin();
              REQUIRE(target[static_cast<std::size_t>(pos)] == r.result);
              t.push_back({static_cast<int>(pos), r.closed_count, r.sign, r.is_zero});
            }
        }
  }
  std::vector<Diagram> hom(int a, int b) const {
    return enumerate_diagrams(c, DiagramObject::plain(a), DiagramObject::plain(b));
  }
  const std::vector<Diagram>& at(int a, int b) const { return basis[static_cast<std::size_t>(a * (max + 1) + b)]; }
  const Entry& get(int a, int b, int d, int second, int first) const {
    return table.at({a, b, d})[static_cast<std::size_t>(second) * at(a, b).size() + static_cast<std::size_t>(first)];
  }

  long check_associativity() const {
    long checked = 0;
    const int k = max + 1;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int d = 0; d < k; ++d)
          for (int e = 0; e < k; ++e) {
            const int na = static_cast<int>(at(a, b).size()), nb = static_cast<int>(at(b, d).size()),
                      nc = static_cast<int>(at(d, e).size());
            for (int g = 0; g < nc; ++g)
              for (int f = 0; f < nb; ++f) {
                const Entry& gf = get(b, d, e, g, f);
                for (int h = 0; h < na; ++h) {
                  const Entry& fh = get(a, b, d, f, h);
                  const Entry& left = get(a, b, e, gf.result, h);   // (g f) h
                  const Entry& right = get(a, d, e, g, fh.result);  // g (f h)
                  const bool lz = gf.zero || left.zero, rz = fh.zero || right.zero;
                  ++checked;
                  if (lz != rz) FAIL_CHECK("zero mismatch");
                  if (lz) continue;
                  if (left.result != right.result || gf.closed + left.closed != fh.closed + right.closed ||
                      gf.sign * left.sign != fh.sign * right.sign)
                    FAIL_CHECK("associativity fails at sizes " << a << b << d << e);
                }
              }
          }
    return checked;
  }
};

} // namespace

TEST_CASE("morphism composition examples") {
  const auto cap = mor(Category::brauer, "2->0:(b1 b2)");
  const auto cup = mor(Category::brauer, "0->2:(t1 t2)");
  CHECK(compose(cap, cup) == DeltaPoly::delta() * Morphism::identity(Category::brauer, DiagramObject::plain(0)));
  CHECK(compose(cap, cup).str() == "1*d * (0->0:)");
  const auto e = compose(cup, cap);
  CHECK(e == mor(Category::brauer, "2->2:(b1 b2)(t1 t2)"));
  CHECK(compose(e, e) == DeltaPoly::delta() * e);
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_morphism(rng, Category::brauer, 1, 3);
    CHECK(compose(Morphism::identity(Category::brauer, DiagramObject::plain(3)), f) == f);
  }
  CHECK_THROWS_AS(compose(cap, cap), Error);
}

TEST_CASE("morphism tensor examples") {
  const auto id1 = Morphism::identity(Category::brauer, DiagramObject::plain(1));
  CHECK(tensor(id1, id1) == Morphism::identity(Category::brauer, DiagramObject::plain(2)));
  const auto cup = mor(Category::brauer, "0->2:(t1 t2)", 2);
  const auto cap = mor(Category::brauer, "2->0:(b1 b2)", 3);
  CHECK(tensor(cup, cap) == mor(Category::brauer, "2->2:(b1 b2)(t1 t2)", 6));
  const auto f = mor(Category::brauer, "3->5:(b1 b3)(b2 t4)(t1 t2)(t3 t5)", DeltaPoly({1, 1}));
  CHECK(tensor(f, Morphism::identity(Category::brauer, DiagramObject::plain(0))) == f);
  CHECK_THROWS_AS(tensor(f, mor(Category::partition, "1->1:{b1 t1}")), Error);
}

TEST_CASE("signed morphisms fold orientation signs") {
  Morphism f(Category::signed_brauer, DiagramObject::plain(2), DiagramObject::plain(0));
  f.add(parse_diagram(Category::signed_brauer, "2->0:(b1>b2)"), 1);
  f.add(parse_diagram(Category::signed_brauer, "2->0:(b2>b1)"), 1);
  CHECK(f.is_zero());
}

TEST_CASE("bilinearity") {
  std::mt19937 rng(3);
  for (Category c : {Category::brauer, Category::partition, Category::degenerate_partition})
    for (int i = 0; i < 30; ++i) {
      const auto g = random_morphism(rng, c, 2, 3);
      const auto f1 = random_morphism(rng, c, 1, 2), f2 = random_morphism(rng, c, 1, 2);
      const DeltaPoly a({Rational(2, 3), Rational(-1)});
      CHECK(compose(g, a * f1 + f2) == a * compose(g, f1) + compose(g, f2));
    }
}

TEST_CASE("hom parity vanishing") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m)
      CHECK(hom_basis(Category::brauer, DiagramObject::plain(n), DiagramObject::plain(m)).diagrams.empty() ==
            ((n + m) % 2 == 1));
}

TEST_CASE("transpose is contravariant on morphisms") {
  std::mt19937 rng(5);
  for (Category c : {Category::brauer, Category::partition})
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m)
        for (int p = 0; p <= 3; ++p) {
          const auto f = random_morphism(rng, c, n, m), g = random_morphism(rng, c, m, p);
          CHECK(transpose(compose(g, f)) == compose(transpose(f), transpose(g)));
          CHECK(transpose(transpose(f)) == f);
        }
}

TEST_CASE("associativity with loop bookkeeping") {
  CHECK(Tables(Category::brauer, 4).check_associativity() > 0);
  CHECK(Tables(Category::temperley_lieb, 4).check_associativity() > 0);
  CHECK(Tables(Category::signed_brauer, 3).check_associativity() > 0);
  CHECK(Tables(Category::partition, 3).check_associativity() > 0);
  CHECK(Tables(Category::degenerate_partition, 3).check_associativity() > 0);
  CHECK(Tables(Category::fi_sharp, 3).check_associativity() > 0);
  CHECK(Tables(Category::fa, 3).check_associativity() > 0);
}

TEST_CASE("factorization examples") {
  const auto d = parse_diagram(Category::brauer, "3->5:(b1 b3)(b2 t4)(t1 t2)(t3 t5)");
  const auto f = factorize(Category::brauer, d);
  CHECK(f.middle.size() == 1);
  CHECK(f.down == parse_diagram(Category::brauer, "3->1:(b1 b3)(b2 t1)"));
  CHECK(f.up == parse_diagram(Category::brauer, "1->5:(b1 t4)(t1 t2)(t3 t5)"));
  const auto r = compose(Category::brauer, f.up, f.down);
  CHECK(r.result == d);
  CHECK(r.closed_count == 0);

  const auto id = factorize(Category::brauer, BrauerDiagram::identity(3));
  CHECK(id.middle.size() == 3);
  CHECK(id.down == Diagram(BrauerDiagram::identity(3)));
  CHECK(id.up == Diagram(BrauerDiagram::identity(3)));

  const auto p = factorize(Category::partition, parse_diagram(Category::partition, "2->2:{b1 t1}{b2}{t2}"));
  CHECK(p.middle.size() == 1);
  CHECK(p.down == parse_diagram(Category::partition, "2->1:{b1 t1}{b2}"));
  CHECK(p.up == parse_diagram(Category::partition, "1->2:{b1 t1}{t2}"));

  CHECK_THROWS_AS(factorize(Category::signed_brauer, SignedBrauerDiagram(BrauerDiagram::identity(1))), Error);
}

TEST_CASE("factorization recomposes for every diagram") {
  for (Category c : {Category::brauer, Category::partition, Category::temperley_lieb, Category::fi_sharp, Category::fa})
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m) {
        if (c == Category::partition && n + m > 7) continue;
        for (const auto& d : enumerate_diagrams(c, DiagramObject::plain(n), DiagramObject::plain(m))) {
          const auto f = factorize(c, d);
          CHECK(is_upwards(f.up));
          CHECK(is_downwards(f.down));
          const auto r = compose(c, f.up, f.down);
          CHECK(r.result == d);
          CHECK(r.closed_count == 0);
        }
      }
  for (const auto& x : objects_up_to(Category::walled_brauer, 3))
    for (const auto& z : objects_up_to(Category::walled_brauer, 3))
      for (const auto& d : enumerate_diagrams(Category::walled_brauer, x, z)) {
        const auto f = factorize(Category::walled_brauer, d);
        CHECK(compose(Category::walled_brauer, f.up, f.down).result == d);
      }
}

TEST_CASE("verify_t3 examples") {
  const auto a = verify_t3(Category::brauer, DiagramObject::plain(1), DiagramObject::plain(3));
  CHECK(a.lhs_dim == 3);
  CHECK(a.rhs_dim == 3);
  CHECK(a.pass);
  const auto b = verify_t3(Category::brauer, DiagramObject::plain(2), DiagramObject::plain(2));
  CHECK(b.lhs_dim == 3);
  CHECK(b.pass);
  const auto c = verify_t3(Category::brauer, DiagramObject::plain(0), DiagramObject::plain(0));
  CHECK(c.lhs_dim == 1);
  CHECK(c.rhs_dim == 1);
  CHECK(c.pass);
}

TEST_CASE("triangular axioms at small sizes") {
  for (auto [c, size] : std::vector<std::pair<Category, int>>{{Category::brauer, 3},
                                                              {Category::partition, 2},
                                                              {Category::degenerate_partition, 2},
                                                              {Category::temperley_lieb, 3},
                                                              {Category::walled_brauer, 3},
                                                              {Category::fi_sharp, 3},
                                                              {Category::fa, 3}}) {
    const auto r = check_triangular_axioms(c, size);
    INFO(to_json(r).dump(2));
    CHECK(r.pass());
  }
  CHECK_THROWS_AS(check_triangular_axioms(Category::signed_brauer, 2), Error);
}
