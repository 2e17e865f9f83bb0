#include "diagcat/linear.hpp"

#include <algorithm>
#include <set>

#include "diagcat/compose.hpp"
#include "diagcat/error.hpp"
#include "diagcat/notation.hpp"
#include "diagcat/parallel.hpp"

namespace diagcat {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

DiagramObject normalized(Category c, DiagramObject x) {
  if (c == Category::walled_brauer) return DiagramObject::walled(x.first, x.second);
  if (c == Category::temperley_lieb) return DiagramObject::ordered(x.size());
  return DiagramObject::plain(x.size());
}

DiagramObject object_sum(Category c, const DiagramObject& a, const DiagramObject& b) {
  if (c == Category::walled_brauer) return DiagramObject::walled(a.first + b.first, a.second + b.second);
  return normalized(c, DiagramObject::plain(a.size() + b.size()));
}

} // namespace

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(Category c, DiagramObject source, DiagramObject target)
    : category_(c), source_(normalized(c, source)), target_(normalized(c, target)) {}

Morphism Morphism::from_diagram(Category c, const Diagram& d, const DeltaPoly& coeff) {
  Morphism m(c, diagcat::source(c, d), diagcat::target(c, d));
  m.add(d, coeff);
  return m;
}

Morphism Morphism::identity(Category c, DiagramObject x) { return from_diagram(c, diagcat::identity(c, normalized(c, x))); }

DeltaPoly Morphism::coefficient(const Diagram& d) const {
  const auto it = terms_.find(d);
  return it == terms_.end() ? DeltaPoly() : it->second;
}

void Morphism::add(const Diagram& d, const DeltaPoly& coeff) {
  check_category(category_, d);
  if (diagcat::source(category_, d) != source_ || diagcat::target(category_, d) != target_)
    throw Error(ErrorCode::shape_mismatch, "diagram " + format_diagram(d) + " is not in Hom(" + to_string(source_) +
                                               ", " + to_string(target_) + ")");
  if (coeff.is_zero()) return;
  Diagram key = d;
  DeltaPoly c = coeff;
  if (const auto* s = std::get_if<SignedBrauerDiagram>(&d); s != nullptr && !s->is_canonical()) {
    auto [sign, canon] = s->canonicalize();
    key = std::move(canon);
    c *= Rational(sign);
  }
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Morphism::check_operand(const Morphism& o) const {
  if (o.category_ != category_) throw Error(ErrorCode::variant_mismatch, "morphisms of different categories");
  if (o.source_ != source_ || o.target_ != target_)
    throw Error(ErrorCode::shape_mismatch, "morphisms live in different hom spaces");
}

Morphism& Morphism::operator+=(const Morphism& o) {
  check_operand(o);
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) {
  check_operand(o);
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

Morphism& Morphism::operator*=(const DeltaPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, coeff] : terms_) coeff *= c;
  return *this;
}

std::string Morphism::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : terms_) {
    if (!out.empty()) out += " + ";
    const std::string poly = c.str();
    const bool simple = std::count_if(c.coefficients().begin(), c.coefficients().end(),
                                      [](const Rational& r) { return !r.is_zero(); }) == 1;
    out += (simple ? poly : "(" + poly + ")") + " * (" + format_diagram(d) + ")";
  }
  return out;
}

Morphism compose(const Morphism& g, const Morphism& f, const DeltaPoly& loop) {
  if (g.category() != f.category()) throw Error(ErrorCode::variant_mismatch, "morphisms of different categories");
  if (f.target() != g.source())
    throw Error(ErrorCode::shape_mismatch,
                "cannot compose: target " + to_string(f.target()) + " differs from source " + to_string(g.source()));
  const Category c = f.category();
  Morphism out(c, f.source(), g.target());
  std::vector<DeltaPoly> powers{DeltaPoly(1)};
  for (const auto& [dg, cg] : g.terms()) {
    for (const auto& [df, cf] : f.terms()) {
      const auto r = compose(c, dg, df);
      if (r.is_zero) continue;
      while (powers.size() <= static_cast<std::size_t>(r.closed_count)) powers.push_back(powers.back() * loop);
      out.add(r.result, cg * cf * powers[static_cast<std::size_t>(r.closed_count)] * Rational(r.sign));
    }
  }
  return out;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  if (f.category() != g.category()) throw Error(ErrorCode::variant_mismatch, "morphisms of different categories");
  const Category c = f.category();
  Morphism out(c, object_sum(c, f.source(), g.source()), object_sum(c, f.target(), g.target()));
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) out.add(disjoint_union(a, b), ca * cb);
  return out;
}

Morphism transpose(const Morphism& f) {
  Morphism out(f.category(), f.target(), f.source());
  for (const auto& [d, c] : f.terms()) out.add(transpose(d), c);
  return out;
}

Morphism phi(const Morphism& f) {
  if (f.category() != Category::signed_brauer)
    throw Error(ErrorCode::variant_mismatch, "phi expects a signed Brauer morphism");
  Morphism out(Category::brauer, f.source(), f.target());
  for (const auto& [d, c] : f.terms()) {
    auto [sign, plain] = phi_signed_to_brauer(std::get<SignedBrauerDiagram>(d));
    out.add(plain, c * Rational(sign));
  }
  return out;
}

HomBasis hom_basis(Category c, DiagramObject source, DiagramObject target) {
  HomBasis h{c, normalized(c, source), normalized(c, target), enumerate_diagrams(c, source, target), {}, {}};
  for (const auto& d : h.diagrams) {
    h.upwards.push_back(is_upwards(d));
    h.downwards.push_back(is_downwards(d));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Factorization

namespace {

struct BrauerSplit {
  int middle;
  int middle_first; // survivors of color 1 (walled)
  BrauerDiagram down;
  BrauerDiagram up;
};

BrauerSplit split_brauer(const BrauerDiagram& d, int first_color_size) {
  std::vector<Edge> down, up;
  std::vector<int> survivors;
  for (const auto& e : d.edges()) {
    if (!is_horizontal(e))
      survivors.push_back(e.first.index);
    else if (e.first.row == Row::bottom)
      down.push_back(e);
    else
      up.push_back(e);
  }
  std::sort(survivors.begin(), survivors.end());
  const int p = static_cast<int>(survivors.size());
  int p1 = 0;
  for (int k = 1; k <= p; ++k) {
    const int i = survivors[static_cast<std::size_t>(k - 1)];
    if (i <= first_color_size) ++p1;
    down.emplace_back(bottom(i), top(k));
    up.emplace_back(bottom(k), d.mate(bottom(i)));
  }
  return {p, p1, BrauerDiagram(d.bottom(), p, std::move(down)), BrauerDiagram(p, d.top(), std::move(up))};
}

Factorization split_partition(const PartitionDiagram& d) {
  std::vector<Block> down, up;
  int p = 0;
  for (const auto& b : d.blocks()) {
    Block lower, upper;
    for (Vertex v : b) (v.row == Row::bottom ? lower : upper).push_back(v);
    if (lower.empty()) {
      up.push_back(std::move(upper));
    } else if (upper.empty()) {
      down.push_back(std::move(lower));
    } else {
      ++p;
      lower.push_back(top(p));
      upper.push_back(bottom(p));
      down.push_back(std::move(lower));
      up.push_back(std::move(upper));
    }
  }
  return {DiagramObject::plain(p), PartitionDiagram(d.bottom(), p, std::move(down)),
          PartitionDiagram(p, d.top(), std::move(up))};
}

Factorization split_map(const PartialInjection& f) {
  std::vector<std::pair<int, int>> down, up;
  if (f.kind() == MapKind::partial_injection) {
    int k = 0;
    for (auto [s, t] : f.pairs()) {
      ++k;
      down.emplace_back(s, k);
      up.emplace_back(k, t);
    }
    return {DiagramObject::plain(k), PartialInjection(f.source_size(), k, std::move(down)),
            PartialInjection(k, f.target_size(), std::move(up))};
  }
  std::vector<int> image;
  for (auto [s, t] : f.pairs()) image.push_back(t);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  const int p = static_cast<int>(image.size());
  for (auto [s, t] : f.pairs())
    down.emplace_back(s, static_cast<int>(std::lower_bound(image.begin(), image.end(), t) - image.begin()) + 1);
  for (int k = 1; k <= p; ++k) up.emplace_back(k, image[static_cast<std::size_t>(k - 1)]);
  return {DiagramObject::plain(p), PartialInjection(f.source_size(), p, std::move(down), MapKind::function),
          PartialInjection(p, f.target_size(), std::move(up), MapKind::function)};
}

} // namespace

Factorization factorize(Category c, const Diagram& d) {
  check_category(c, d);
  return std::visit(
      overloaded{
          [c](const BrauerDiagram& b) -> Factorization {
            auto s = split_brauer(b, b.bottom());
            return {normalized(c, DiagramObject::plain(s.middle)), std::move(s.down), std::move(s.up)};
          },
          [](const SignedBrauerDiagram&) -> Factorization {
            throw Error(ErrorCode::unsupported_variant, "factorization of signed diagrams is not supported");
          },
          [](const WalledBrauerDiagram& w) -> Factorization {
            auto s = split_brauer(w.underlying(), w.source().first);
            const auto mid = DiagramObject::walled(s.middle_first, s.middle - s.middle_first);
            return {mid, WalledBrauerDiagram(w.source(), mid, std::move(s.down)),
                    WalledBrauerDiagram(mid, w.target(), std::move(s.up))};
          },
          [](const PartitionDiagram& p) { return split_partition(p); },
          [](const PartialInjection& f) { return split_map(f); },
      },
      d);
}

std::vector<DiagramObject> middle_objects(Category c, DiagramObject x, DiagramObject z) {
  std::vector<DiagramObject> out;
  if (c == Category::walled_brauer) {
    for (int a = 0; a <= std::min(x.first, z.first); ++a)
      for (int b = 0; b <= std::min(x.second, z.second); ++b) out.push_back(DiagramObject::walled(a, b));
    return out;
  }
  for (int p = 0; p <= std::min(x.size(), z.size()); ++p) out.push_back(normalized(c, DiagramObject::plain(p)));
  return out;
}

// ---------------------------------------------------------------------------
// (T3)

namespace {

bool distinguished(const Composite<Diagram>& r) { return !r.is_zero && r.closed_count == 0 && r.sign == 1; }

std::vector<Diagram> filtered(const std::vector<Diagram>& all, bool (*pred)(const Diagram&)) {
  std::vector<Diagram> out;
  for (const auto& d : all)
    if (pred(d)) out.push_back(d);
  return out;
}

} // namespace

T3Report verify_t3(Category c, DiagramObject x, DiagramObject z) {
  x = normalized(c, x);
  z = normalized(c, z);
  T3Report report;
  const auto target_basis = enumerate_diagrams(c, x, z);
  report.rhs_dim = static_cast<long>(target_basis.size());

  using Pair = std::pair<Diagram, Diagram>;
  struct Origin {
    std::size_t middle;
    std::set<Pair> pairs;
  };
  std::map<Diagram, Origin> origins;
  std::vector<std::string> problems;
  const auto problem = [&](std::string s) {
    if (problems.size() < 5) problems.push_back(std::move(s));
  };

  const auto middles = middle_objects(c, x, z);
  std::vector<std::vector<Diagram>> auts;
  for (std::size_t yi = 0; yi < middles.size(); ++yi) {
    const auto& y = middles[yi];
    const auto ups = filtered(enumerate_diagrams(c, y, z), is_upwards);
    const auto downs = filtered(enumerate_diagrams(c, x, y), is_downwards);
    auts.push_back(automorphisms(c, y));
    const long pairs = static_cast<long>(ups.size() * downs.size());
    const long group = static_cast<long>(auts.back().size());
    if (pairs % group != 0) problem("pair count through " + to_string(y) + " not divisible by |Aut|");
    report.lhs_dim += pairs / group;
    for (const auto& u : ups)
      for (const auto& d : downs) {
        const auto r = compose(c, u, d);
        if (!distinguished(r)) {
          problem("up*down through " + to_string(y) + " is not a single diagram: " + format_diagram(u) + " * " +
                  format_diagram(d));
          continue;
        }
        auto [it, fresh] = origins.try_emplace(r.result, Origin{yi, {}});
        if (!fresh && it->second.middle != yi)
          problem(format_diagram(r.result) + " factors through two middle objects");
        it->second.pairs.emplace(u, d);
      }
  }

  for (const auto& target : target_basis) {
    const auto it = origins.find(target);
    if (it == origins.end()) {
      problem(format_diagram(target) + " has no factorization");
      continue;
    }
    const auto& aut = auts[it->second.middle];
    const auto& [u0, d0] = *it->second.pairs.begin();
    std::set<Pair> orbit;
    for (const auto& sigma : aut) {
      // sigma^{-1} is the automorphism tau with tau * sigma = id.
      const auto inv = std::find_if(aut.begin(), aut.end(), [&](const Diagram& tau) {
        const auto r = compose(c, tau, sigma);
        return distinguished(r) && is_bijection(r.result) && r.result == identity(c, middles[it->second.middle]);
      });
      orbit.emplace(compose(c, u0, *inv).result, compose(c, sigma, d0).result);
    }
    if (orbit.size() != aut.size()) problem(format_diagram(target) + ": automorphisms do not act freely");
    if (orbit != it->second.pairs) problem(format_diagram(target) + ": factorizations form more than one orbit");
  }
  if (origins.size() != target_basis.size()) problem("composites outside the basis");
  if (report.lhs_dim != report.rhs_dim) problem("dimension mismatch");

  report.pass = problems.empty();
  for (const auto& p : problems) report.detail += (report.detail.empty() ? "" : "; ") + p;
  return report;
}

// ---------------------------------------------------------------------------
// Axiom sweep

bool TriangularReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& a) { return a.pass; });
}

std::vector<DiagramObject> objects_up_to(Category c, int max_size) {
  std::vector<DiagramObject> out;
  if (c == Category::walled_brauer) {
    for (int total = 0; total <= max_size; ++total)
      for (int a = 0; a <= total; ++a) out.push_back(DiagramObject::walled(a, total - a));
    return out;
  }
  for (int n = 0; n <= max_size; ++n) out.push_back(normalized(c, DiagramObject::plain(n)));
  return out;
}

namespace {

struct Failures {
  long checked = 0;
  std::vector<std::string> examples;
  long failed = 0;

  void fail(std::string s) {
    ++failed;
    if (examples.size() < 3) examples.push_back(std::move(s));
  }
  void merge(const Failures& o) {
    checked += o.checked;
    failed += o.failed;
    for (const auto& e : o.examples)
      if (examples.size() < 3) examples.push_back(e);
  }
  AxiomCheck to_check(std::string name, const std::string& what) const {
    AxiomCheck a{std::move(name), failed == 0, std::to_string(checked) + " " + what};
    if (failed != 0) {
      a.detail += ", " + std::to_string(failed) + " failed";
      for (const auto& e : examples) a.detail += "; " + e;
    }
    return a;
  }
};

} // namespace

TriangularReport check_triangular_axioms(Category c, int max_size) {
  if (c == Category::signed_brauer)
    throw Error(ErrorCode::unsupported_variant, "the triangular sweep does not cover signed diagrams");
  TriangularReport report{c, max_size, {}};
  const auto objects = objects_up_to(c, max_size);
  const std::size_t k = objects.size();

  std::vector<HomBasis> homs(k * k);
  parallel_for(k * k, [&](std::size_t i) { homs[i] = hom_basis(c, objects[i / k], objects[i % k]); });
  const auto hom = [&](std::size_t x, std::size_t y) -> const HomBasis& { return homs[x * k + y]; };
  const auto select = [](const HomBasis& h, bool up) {
    std::vector<const Diagram*> out;
    for (std::size_t i = 0; i < h.diagrams.size(); ++i)
      if (up ? h.upwards[i] : h.downwards[i]) out.push_back(&h.diagrams[i]);
    return out;
  };

  {
    Failures f;
    for (const auto& h : homs) {
      f.checked += static_cast<long>(h.diagrams.size());
      if (std::adjacent_find(h.diagrams.begin(), h.diagrams.end(), std::greater_equal<>()) != h.diagrams.end())
        f.fail("basis of Hom(" + to_string(h.source) + ", " + to_string(h.target) + ") not strictly sorted");
    }
    report.checks.push_back(f.to_check("T0 finite hom spaces", "basis diagrams enumerated"));
  }
  {
    Failures f;
    for (std::size_t x = 0; x < k; ++x) {
      const auto& h = hom(x, x);
      std::vector<Diagram> levi;
      for (std::size_t i = 0; i < h.diagrams.size(); ++i)
        if (h.upwards[i] && h.downwards[i]) levi.push_back(h.diagrams[i]);
      ++f.checked;
      if (levi != automorphisms(c, objects[x])) f.fail("End_M(" + to_string(objects[x]) + ") is not the automorphism group");
      for (const auto& d : levi)
        if (!is_bijection(d)) f.fail(format_diagram(d) + " lies in End_M but is not a bijection");
    }
    auto a = f.to_check("T1 End_M spanned by bijections", "objects checked");
    a.detail += "; semisimplicity of End_M assumed (char 0)";
    report.checks.push_back(std::move(a));
  }
  {
    Failures f;
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) {
        const auto& h = hom(x, y);
        ++f.checked;
        const bool any_up = std::find(h.upwards.begin(), h.upwards.end(), true) != h.upwards.end();
        const bool any_down = std::find(h.downwards.begin(), h.downwards.end(), true) != h.downwards.end();
        if (any_up && objects[x].size() > objects[y].size())
          f.fail("upward diagram " + to_string(objects[x]) + " -> " + to_string(objects[y]) + " decreases size");
        if (any_down && objects[x].size() < objects[y].size())
          f.fail("downward diagram " + to_string(objects[x]) + " -> " + to_string(objects[y]) + " increases size");
      }
    report.checks.push_back(f.to_check("T2 order monotonicity", "hom spaces checked"));
  }
  {
    std::vector<Failures> parts(k * k * k);
    parallel_for(k * k * k, [&](std::size_t t) {
      const std::size_t x = t / (k * k), y = (t / k) % k, z = t % k;
      Failures& f = parts[t];
      const auto ups_xy = select(hom(x, y), true), downs_xy = select(hom(x, y), false);
      const auto ups_yz = select(hom(y, z), true), downs_yz = select(hom(y, z), false);
      for (const auto* b : ups_yz)
        for (const auto* a : ups_xy) {
          ++f.checked;
          const auto r = compose(c, *b, *a);
          if (!r.is_zero && !is_upwards(r.result)) f.fail("up*up not upward: " + format_diagram(*b) + " * " + format_diagram(*a));
        }
      for (const auto* b : downs_yz)
        for (const auto* a : downs_xy) {
          ++f.checked;
          const auto r = compose(c, *b, *a);
          if (!r.is_zero && !is_downwards(r.result))
            f.fail("down*down not downward: " + format_diagram(*b) + " * " + format_diagram(*a));
        }
      for (const auto* b : ups_yz)
        for (const auto* a : downs_xy) {
          ++f.checked;
          if (!distinguished(compose(c, *b, *a)))
            f.fail("up*down not distinguished: " + format_diagram(*b) + " * " + format_diagram(*a));
        }
    });
    Failures all;
    for (const auto& p : parts) all.merge(p);
    report.checks.push_back(all.to_check("closure of U and D, distinguished up*down", "composites checked"));
  }
  {
    std::vector<Failures> parts(k * k);
    std::vector<T3Report> t3(k * k);
    parallel_for(k * k, [&](std::size_t t) {
      const std::size_t x = t / k, z = t % k;
      Failures& f = parts[t];
      for (const auto& d : hom(x, z).diagrams) {
        ++f.checked;
        const auto fac = factorize(c, d);
        const auto r = compose(c, fac.up, fac.down);
        if (!is_upwards(fac.up) || !is_downwards(fac.down) || !distinguished(r) || r.result != d)
          f.fail("factorization of " + format_diagram(d) + " does not recompose");
      }
      t3[t] = verify_t3(c, objects[x], objects[z]);
      if (!t3[t].pass) f.fail("T3 for " + to_string(objects[x]) + " -> " + to_string(objects[z]) + ": " + t3[t].detail);
    });
    Failures all;
    for (const auto& p : parts) all.merge(p);
    long lhs = 0, rhs = 0;
    for (const auto& r : t3) {
      lhs += r.lhs_dim;
      rhs += r.rhs_dim;
    }
    auto a = all.to_check("T3 unique factorization mod automorphisms", "diagrams factorized");
    a.detail += "; total orbit count " + std::to_string(lhs) + ", total basis size " + std::to_string(rhs);
    report.checks.push_back(std::move(a));
  }
  return report;
}

nlohmann::json to_json(const T3Report& r) {
  return {{"lhs_dim", r.lhs_dim}, {"rhs_dim", r.rhs_dim}, {"pass", r.pass}, {"detail", r.detail}};
}

nlohmann::json to_json(const TriangularReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& a : r.checks) checks.push_back({{"axiom", a.name}, {"pass", a.pass}, {"detail", a.detail}});
  return {{"category", std::string(category_name(r.category))},
          {"max_size", r.max_size},
          {"pass", r.pass()},
          {"checks", std::move(checks)}};
}

} // namespace diagcat
