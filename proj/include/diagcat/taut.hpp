#ifndef DIAGCAT_TAUT_HPP
#define DIAGCAT_TAUT_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "diagcat/diagram.hpp"
#include "diagcat/eigen_support.hpp"
#include "diagcat/rational.hpp"

namespace diagcat {

/// Realization of a diagram category on tensor powers of V = Q^p.
///
/// Bases are pure tensors ordered lexicographically (first factor most
/// significant). Brauer, partition and walled use the standard basis with
/// its dual pairing; signed uses a symplectic basis e_1..e_h, f_1..f_h with
/// w(e_i, f_i) = 1; Temperley–Lieb uses V = Q^2 with a q-deformed cup/cap.
struct TautContext {
  Category category = Category::brauer;
  int dimension = 0;
  Rational q{1}; // Temperley–Lieb deformation parameter
  std::size_t row_budget = 4096;

  static TautContext brauer(int p) { return {Category::brauer, p, Rational(1)}; }
  static TautContext partition(int p) { return {Category::partition, p, Rational(1)}; }
  static TautContext walled(int p) { return {Category::walled_brauer, p, Rational(1)}; }
  static TautContext signed_brauer(int p) { return {Category::signed_brauer, p, Rational(1)}; }
  static TautContext temperley_lieb(const Rational& q) { return {Category::temperley_lieb, 2, q}; }

  /// The loop value realized by the matrices: p, or -q - 1/q.
  Rational parameter() const;
  /// Throws Error{invalid_argument} for negative or (signed) odd dimension,
  /// q = 0, or an unsupported category.
  void validate() const;
};

/// Matrix of the diagram, p^m rows by p^n columns. Throws
/// Error{dimension_budget_exceeded} past ctx.row_budget rows or columns and
/// Error{variant_mismatch} for diagrams of another category.
template <typename Scalar>
DenseMatrix<Scalar> taut_matrix_as(const TautContext& ctx, const Diagram& d);

extern template DenseMatrix<std::int64_t> taut_matrix_as<std::int64_t>(const TautContext&, const Diagram&);
extern template DenseMatrix<Rational> taut_matrix_as<Rational>(const TautContext&, const Diagram&);

inline RationalMatrix taut_matrix(const TautContext& ctx, const Diagram& d) { return taut_matrix_as<Rational>(ctx, d); }

struct FunctorialityReport {
  long pairs_checked = 0;
  long failures = 0;
  bool pass = false;
  std::string first_failure;
};

/// Exhaustively checks M(beta) M(alpha) = parameter^c * sign * M(beta.alpha)
/// over all composable pairs with object sizes up to max_size. Exact: the
/// integer-valued realizations run in 64-bit integers (entries stay far
/// below overflow at these sizes), Temperley–Lieb in rationals.
FunctorialityReport verify_taut_functoriality(const TautContext& ctx, int max_size);

/// Whether precomposition with the cup [0] -> [2] maps Hom([2],[0]) onto
/// Hom([0],[0]) once the loop parameter is specialized to delta.
bool check_p2_p0_surjectivity(const Rational& delta);

nlohmann::json to_json(const FunctorialityReport& r);

} // namespace diagcat

#endif // DIAGCAT_TAUT_HPP
