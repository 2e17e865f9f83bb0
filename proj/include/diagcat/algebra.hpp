#ifndef DIAGCAT_ALGEBRA_HPP
#define DIAGCAT_ALGEBRA_HPP

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "diagcat/delta_poly.hpp"
#include "diagcat/diagram.hpp"
#include "diagcat/eigen_support.hpp"

namespace diagcat {

/// basis[i] after basis[j] = sign * d^power * basis[index], or zero.
struct AlgebraProduct {
  int index = 0;
  int power = 0;
  int sign = 1;
  bool zero = false;
};

/// Multiplication table of End([n]) in the diagram basis.
struct AlgebraTable {
  Category category = Category::brauer;
  int n = 0;
  std::vector<Diagram> basis;
  std::vector<AlgebraProduct> products; // row-major, products[i * size + j]
  int identity_index = 0;

  std::size_t size() const { return basis.size(); }
  const AlgebraProduct& product(std::size_t i, std::size_t j) const { return products[i * size() + j]; }
  /// Structure constant as a polynomial in d.
  DeltaPoly coefficient(std::size_t i, std::size_t j) const;
};

/// Default cap on the basis size: covers Brauer n <= 4 (105) and partition
/// n <= 3 (203).
inline constexpr std::size_t algebra_basis_budget = 210;
/// The symbolic determinant is far more expensive than evaluated checks.
inline constexpr std::size_t discriminant_basis_budget = 64;

/// Supports brauer, temperley_lieb, signed_brauer and partition. Throws
/// Error{dimension_budget_exceeded} past max_basis and
/// Error{unsupported_variant} for other categories.
AlgebraTable build_algebra(Category c, int n, std::size_t max_basis = algebra_basis_budget);

/// Trace of left multiplication by each basis element.
std::vector<DeltaPoly> regular_traces(const AlgebraTable& t);

/// G_ij = trace of left multiplication by basis_i * basis_j.
PolyMatrix gram_form(const AlgebraTable& t);

/// det of the trace form as an exact polynomial.
DeltaPoly discriminant(Category c, int n, std::size_t max_basis = discriminant_basis_budget);

/// Whether the discriminant is nonzero at delta, computed as the rank of the
/// specialized trace form.
bool is_semisimple_at(Category c, int n, const Rational& delta, std::size_t max_basis = algebra_basis_budget);

nlohmann::json to_json(const AlgebraTable& t);

} // namespace diagcat

#endif // DIAGCAT_ALGEBRA_HPP
