#ifndef DIAGCAT_LINEAR_HPP
#define DIAGCAT_LINEAR_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "diagcat/delta_poly.hpp"
#include "diagcat/diagram.hpp"

namespace diagcat {

/// Finite Q[d]-linear combination of canonical diagrams with a common source
/// and target. Zero coefficients are never stored; signed diagrams are
/// stored in canonical orientation with the orientation sign folded into the
/// coefficient.
class Morphism {
public:
  Morphism(Category c, DiagramObject source, DiagramObject target);
  /// coeff * d, with source and target read from the diagram.
  static Morphism from_diagram(Category c, const Diagram& d, const DeltaPoly& coeff = DeltaPoly(1));
  static Morphism identity(Category c, DiagramObject x);

  Category category() const { return category_; }
  const DiagramObject& source() const { return source_; }
  const DiagramObject& target() const { return target_; }
  const std::map<Diagram, DeltaPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  DeltaPoly coefficient(const Diagram& d) const;

  /// Adds coeff * d. Throws Error{shape_mismatch} or Error{variant_mismatch}
  /// if d does not live in this hom space.
  void add(const Diagram& d, const DeltaPoly& coeff);

  Morphism& operator+=(const Morphism& o);
  Morphism& operator-=(const Morphism& o);
  Morphism& operator*=(const DeltaPoly& c);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
  friend Morphism operator*(const DeltaPoly& c, Morphism a) { return a *= c; }

  friend bool operator==(const Morphism&, const Morphism&) = default;

  /// `(1 + 2*d) * (2->2:(b1 t1)(b2 t2)) + ...`, or `0`.
  std::string str() const;

private:
  void check_operand(const Morphism& o) const;

  Category category_;
  DiagramObject source_;
  DiagramObject target_;
  std::map<Diagram, DeltaPoly> terms_;
};

/// g after f, each closed component weighted by `loop` (the formal d by
/// default; pass -d to compose in the Brauer category at parameter -d).
Morphism compose(const Morphism& g, const Morphism& f, const DeltaPoly& loop = DeltaPoly::delta());
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism transpose(const Morphism& f);
/// Image of a signed morphism under the equivalence with Brauer at -d.
Morphism phi(const Morphism& f);

struct HomBasis {
  Category category;
  DiagramObject source;
  DiagramObject target;
  std::vector<Diagram> diagrams;
  std::vector<bool> upwards;
  std::vector<bool> downwards;
};

HomBasis hom_basis(Category c, DiagramObject source, DiagramObject target);

/// d = up * down through the middle object, with closed count 0.
struct Factorization {
  DiagramObject middle;
  Diagram down;
  Diagram up;
};

/// Order-preserving representative. Throws Error{unsupported_variant} for
/// signed diagrams.
Factorization factorize(Category c, const Diagram& d);

/// Candidate middle objects y for factorizations x -> y -> z.
std::vector<DiagramObject> middle_objects(Category c, DiagramObject x, DiagramObject z);

struct T3Report {
  long lhs_dim = 0;
  long rhs_dim = 0;
  bool pass = false;
  std::string detail;
};

/// Counts up-after-down pairs through every middle object modulo the
/// automorphisms of the middle, and checks that each basis diagram of
/// Hom(x, z) arises from exactly one free orbit.
T3Report verify_t3(Category c, DiagramObject x, DiagramObject z);

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct TriangularReport {
  Category category;
  int max_size = 0;
  std::vector<AxiomCheck> checks;

  bool pass() const;
};

/// All objects of total size at most max_size.
std::vector<DiagramObject> objects_up_to(Category c, int max_size);

TriangularReport check_triangular_axioms(Category c, int max_size);

nlohmann::json to_json(const T3Report& r);
nlohmann::json to_json(const TriangularReport& r);

} // namespace diagcat

#endif // DIAGCAT_LINEAR_HPP
