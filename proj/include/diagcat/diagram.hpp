#ifndef DIAGCAT_DIAGRAM_HPP
#define DIAGCAT_DIAGRAM_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace diagcat {

/// The diagram categories the library knows how to compose.
enum class Category {
  brauer,
  temperley_lieb,
  signed_brauer,
  walled_brauer,
  partition,
  degenerate_partition,
  fi_sharp,
  fa,
};

std::string_view category_name(Category c);
/// Accepts the names returned by category_name plus the short aliases
/// `signed`, `walled`, `tl`.
Category parse_category(std::string_view name);

enum class Row : std::uint8_t { bottom, top };

/// A vertex of a diagram; `index` is 1-based within its row.
struct Vertex {
  Row row = Row::bottom;
  int index = 1;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex bottom(int i) { return {Row::bottom, i}; }
inline Vertex top(int i) { return {Row::top, i}; }

/// `b3`, `t1`, ...
std::string to_string(Vertex v);

using Edge = std::pair<Vertex, Vertex>;

inline bool is_horizontal(const Edge& e) { return e.first.row == e.second.row; }

enum class ObjectKind : std::uint8_t { plain, walled, ordered };

/// Skeletal object: [n] for plain and ordered sets, ([n1], [n2]) for
/// 2-colored sets.
struct DiagramObject {
  ObjectKind kind = ObjectKind::plain;
  int first = 0;
  int second = 0;

  static DiagramObject plain(int n) { return {ObjectKind::plain, n, 0}; }
  static DiagramObject ordered(int n) { return {ObjectKind::ordered, n, 0}; }
  static DiagramObject walled(int n1, int n2) { return {ObjectKind::walled, n1, n2}; }

  int size() const { return first + second; }

  friend auto operator<=>(const DiagramObject&, const DiagramObject&) = default;
};

std::string to_string(const DiagramObject& x);

/// A perfect matching on the bottom row [n] and top row [m].
///
/// Stored in canonical form: each edge has its smaller vertex first
/// (bottom before top, then by index) and the edge list is sorted, so the
/// defaulted comparisons are equality and the enumeration order of diagrams.
class BrauerDiagram {
public:
  BrauerDiagram() = default;
  /// Throws Error{parity_violation} when n + m is odd and
  /// Error{not_a_matching} when the edges are not a perfect matching.
  BrauerDiagram(int bottom, int top, std::vector<Edge> edges);

  static BrauerDiagram identity(int n);
  /// Bijection sending bottom i to top perm[i-1] (perm is 1-based).
  static BrauerDiagram permutation(std::span<const int> perm);

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::vector<Edge>& edges() const { return edges_; }

  Vertex mate(Vertex v) const;
  int horizontal_count(Row row) const;

  friend auto operator<=>(const BrauerDiagram&, const BrauerDiagram&) = default;

private:
  int bottom_ = 0;
  int top_ = 0;
  std::vector<Edge> edges_;
};

/// Position of a vertex in the linear order that lists the bottom row left to
/// right followed by the top row right to left: bottom i -> i, top j ->
/// n + m + 1 - j. Oriented horizontal edges are canonical when they point
/// from the smaller to the larger position.
int boundary_position(Vertex v, int bottom, int top);

/// Brauer diagram whose horizontal edges carry an orientation.
///
/// Equality is structural on (diagram, orientation); the morphism relation
/// "reversing one edge negates" is applied by canonicalize().
class SignedBrauerDiagram {
public:
  SignedBrauerDiagram() = default;
  /// Horizontal edges are read as (source, target). Vertical edges may be
  /// given in either order.
  SignedBrauerDiagram(int bottom, int top, std::vector<Edge> oriented_edges);
  /// All horizontal edges in canonical orientation.
  explicit SignedBrauerDiagram(BrauerDiagram base);

  const BrauerDiagram& underlying() const { return base_; }
  int bottom() const { return base_.bottom(); }
  int top() const { return base_.top(); }

  /// Edges in canonical edge order; horizontal edges as (source, target),
  /// vertical edges as (bottom, top).
  std::vector<Edge> oriented_edges() const;
  bool is_canonical() const;
  /// Returns (±1, canonically oriented diagram) with sign (-1)^{#reversals}.
  std::pair<int, SignedBrauerDiagram> canonicalize() const;

  friend auto operator<=>(const SignedBrauerDiagram&, const SignedBrauerDiagram&) = default;

private:
  BrauerDiagram base_;
  // Parallel to base_.edges(): 1 when a horizontal edge points from the
  // larger to the smaller boundary position.
  std::vector<std::uint8_t> reversed_;
};

/// Brauer diagram between 2-colored objects. Color 1 occupies positions
/// 1..first of each row and color 2 the remaining positions.
class WalledBrauerDiagram {
public:
  WalledBrauerDiagram() : source_(DiagramObject::walled(0, 0)), target_(DiagramObject::walled(0, 0)) {}
  /// Throws Error{color_violation} if a vertical edge changes color or a
  /// horizontal edge does not.
  WalledBrauerDiagram(DiagramObject source, DiagramObject target, std::vector<Edge> edges);
  WalledBrauerDiagram(DiagramObject source, DiagramObject target, BrauerDiagram base);

  const BrauerDiagram& underlying() const { return base_; }
  const DiagramObject& source() const { return source_; }
  const DiagramObject& target() const { return target_; }
  int color(Vertex v) const;

  friend auto operator<=>(const WalledBrauerDiagram&, const WalledBrauerDiagram&) = default;

private:
  DiagramObject source_;
  DiagramObject target_;
  BrauerDiagram base_;
};

using Block = std::vector<Vertex>;

/// Set partition of the bottom row [n] and top row [m] into nonempty
/// blocks; blocks sorted internally and ordered by least vertex.
class PartitionDiagram {
public:
  PartitionDiagram() = default;
  /// Throws Error{not_a_partition} unless the blocks are nonempty, disjoint
  /// and cover every vertex.
  PartitionDiagram(int bottom, int top, std::vector<Block> blocks);
  explicit PartitionDiagram(const BrauerDiagram& matching);

  static PartitionDiagram identity(int n);
  static PartitionDiagram permutation(std::span<const int> perm);

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  friend auto operator<=>(const PartitionDiagram&, const PartitionDiagram&) = default;

private:
  int bottom_ = 0;
  int top_ = 0;
  std::vector<Block> blocks_;
};

/// Whether a finite map is a partial injection (FI♯) or a total function (FA).
enum class MapKind : std::uint8_t { partial_injection, function };

/// Partial injection [n] -> [m], or a total function when kind is
/// MapKind::function.
class PartialInjection {
public:
  PartialInjection() = default;
  /// `pairs` are 1-based (source, target). Throws
  /// Error{not_an_injection} when a source repeats, or (partial injection) a
  /// target repeats, or (function) the domain is not all of [n].
  PartialInjection(int source, int target, std::vector<std::pair<int, int>> pairs,
                   MapKind kind = MapKind::partial_injection);

  static PartialInjection identity(int n, MapKind kind = MapKind::partial_injection);

  int source_size() const { return source_; }
  int target_size() const { return target_; }
  MapKind kind() const { return kind_; }
  std::optional<int> image(int i) const;
  std::vector<std::pair<int, int>> pairs() const;
  int domain_size() const;
  int image_size() const;

  friend auto operator<=>(const PartialInjection&, const PartialInjection&) = default;

private:
  int source_ = 0;
  int target_ = 0;
  MapKind kind_ = MapKind::partial_injection;
  std::vector<int> image_; // image_[i-1] = target or 0 when undefined
};

using Diagram = std::variant<BrauerDiagram, SignedBrauerDiagram, WalledBrauerDiagram, PartitionDiagram, PartialInjection>;

/// Throws Error{variant_mismatch} if `d` is not a diagram of category `c`
/// and Error{not_planar} for a non-planar Temperley–Lieb diagram.
void check_category(Category c, const Diagram& d);

DiagramObject source(Category c, const Diagram& d);
DiagramObject target(Category c, const Diagram& d);

bool is_upwards(const Diagram& d);
bool is_downwards(const Diagram& d);
/// True for diagrams that are bijections S -> T (vertical edges only,
/// two-element blocks meeting both rows, total bijective maps).
bool is_bijection(const Diagram& d);

/// Non-crossing test in the boundary order s_1 < ... < s_n < t_m < ... < t_1.
bool is_planar(const BrauerDiagram& d);

std::vector<BrauerDiagram> enumerate_brauer(int bottom, int top);
std::vector<BrauerDiagram> enumerate_planar(int bottom, int top);
std::vector<SignedBrauerDiagram> enumerate_signed(int bottom, int top);
std::vector<WalledBrauerDiagram> enumerate_walled(DiagramObject source, DiagramObject target);
std::vector<PartitionDiagram> enumerate_partition(int bottom, int top);
std::vector<PartialInjection> enumerate_partial_maps(int source, int target, MapKind kind);

/// Every canonical basis diagram of Hom(source, target), sorted.
std::vector<Diagram> enumerate_diagrams(Category c, DiagramObject source, DiagramObject target);

/// Identity diagram of an object.
Diagram identity(Category c, DiagramObject x);
/// The bijection diagrams of End(x) lying in the Cartan part (trivial for
/// Temperley–Lieb, color preserving for walled objects).
std::vector<Diagram> automorphisms(Category c, DiagramObject x);

BrauerDiagram transpose(const BrauerDiagram& d);
WalledBrauerDiagram transpose(const WalledBrauerDiagram& d);
PartitionDiagram transpose(const PartitionDiagram& d);
PartialInjection transpose(const PartialInjection& d);
/// Row exchange. Throws Error{unsupported_variant} for signed diagrams and
/// total functions.
Diagram transpose(const Diagram& d);

BrauerDiagram disjoint_union(const BrauerDiagram& a, const BrauerDiagram& b);
SignedBrauerDiagram disjoint_union(const SignedBrauerDiagram& a, const SignedBrauerDiagram& b);
WalledBrauerDiagram disjoint_union(const WalledBrauerDiagram& a, const WalledBrauerDiagram& b);
PartitionDiagram disjoint_union(const PartitionDiagram& a, const PartitionDiagram& b);
PartialInjection disjoint_union(const PartialInjection& a, const PartialInjection& b);
/// Side-by-side juxtaposition; throws Error{variant_mismatch} on mixed types.
Diagram disjoint_union(const Diagram& a, const Diagram& b);

} // namespace diagcat

#endif // DIAGCAT_DIAGRAM_HPP
