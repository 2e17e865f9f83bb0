#ifndef DIAGCAT_COMPOSE_HPP
#define DIAGCAT_COMPOSE_HPP

#include <utility>

#include "diagcat/diagram.hpp"

namespace diagcat {

/// Outcome of stacking `beta` on top of `alpha`: the diagram product equals
/// sign * d^closed_count * result, or zero when is_zero is set.
template <class D>
struct Composite {
  int closed_count = 0;
  D result{};
  int sign = 1;
  bool is_zero = false;

  friend bool operator==(const Composite&, const Composite&) = default;
};

/// Brauer and Temperley–Lieb composition. Throws Error{shape_mismatch}
/// unless alpha.top() == beta.bottom().
Composite<BrauerDiagram> compose_brauer(const BrauerDiagram& beta, const BrauerDiagram& alpha);

/// Throws Error{color_mismatch} when the middle colorings differ.
Composite<WalledBrauerDiagram> compose_walled(const WalledBrauerDiagram& beta, const WalledBrauerDiagram& alpha);

/// Orients every path and cycle coherently (each reversed horizontal edge
/// contributes a factor -1), composes, and returns the result in canonical
/// orientation with all signs folded into `sign`.
Composite<SignedBrauerDiagram> compose_signed(const SignedBrauerDiagram& beta, const SignedBrauerDiagram& alpha);

/// Partition composition; with `degenerate` the product is zero as soon as a
/// block of alpha and a block of beta share two or more middle vertices.
Composite<PartitionDiagram> compose_partition(const PartitionDiagram& beta, const PartitionDiagram& alpha,
                                              bool degenerate = false);

/// Composition of partial maps (both arguments of the same MapKind).
PartialInjection compose_fisharp(const PartialInjection& beta, const PartialInjection& alpha);

/// Sign of the permutation taking the oriented matching of `alpha`, read on
/// boundary positions with vertical edges oriented upward in that order, to
/// {(1,2),(3,4),...}.
int epsilon_sign(const SignedBrauerDiagram& alpha);

/// The functor to the Brauer category at parameter -d: forgets orientations
/// and attaches epsilon_sign(alpha) * (-1)^{#top-row horizontal edges}.
std::pair<int, BrauerDiagram> phi_signed_to_brauer(const SignedBrauerDiagram& alpha);

/// Category-dispatched composition. Validates both arguments with
/// check_category first.
Composite<Diagram> compose(Category c, const Diagram& beta, const Diagram& alpha);

} // namespace diagcat

#endif // DIAGCAT_COMPOSE_HPP
