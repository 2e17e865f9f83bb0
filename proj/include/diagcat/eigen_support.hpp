#ifndef DIAGCAT_EIGEN_SUPPORT_HPP
#define DIAGCAT_EIGEN_SUPPORT_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "diagcat/delta_poly.hpp"
#include "diagcat/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<diagcat::Rational> : GenericNumTraits<diagcat::Rational> {
  using Real = diagcat::Rational;
  using NonInteger = diagcat::Rational;
  using Literal = diagcat::Rational;
  using Nested = diagcat::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<diagcat::DeltaPoly> : GenericNumTraits<diagcat::DeltaPoly> {
  using Real = diagcat::DeltaPoly;
  using NonInteger = diagcat::DeltaPoly;
  using Literal = diagcat::DeltaPoly;
  using Nested = diagcat::DeltaPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 32,
    MulCost = 128
  };
  static inline Real epsilon() { return Real(); }
  static inline Real dummy_precision() { return Real(); }
  static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace diagcat {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using RationalMatrix = DenseMatrix<Rational>;
using PolyMatrix = DenseMatrix<DeltaPoly>;

namespace detail {
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const DeltaPoly& x) { return x.is_zero(); }
template <typename T>
bool is_zero(const T& x) { return x == T(0); }
} // namespace detail

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Valid over any integral domain in which `/` is exact division of a
/// multiple: integers, Rational, DeltaPoly.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(input.rows() == input.cols());
  DenseMatrix<Scalar> a = input;
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (detail::is_zero(a(k, k))) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && detail::is_zero(a(pivot, k))) ++pivot;
      if (pivot == n) return Scalar(0);
      a.row(k).swap(a.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = t / previous;
      }
      a(i, k) = Scalar(0);
    }
    previous = a(k, k);
  }
  Scalar det = a(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// Reduced row echelon form over a field; returns the rank.
template <typename Scalar>
Eigen::Index row_reduce(DenseMatrix<Scalar>& a) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < a.rows() && detail::is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    a.row(rank).swap(a.row(pivot));
    const Scalar inv = Scalar(1) / a(rank, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(rank, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == rank || detail::is_zero(a(i, col))) continue;
      const Scalar f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  DenseMatrix<typename Derived::Scalar> a = m;
  return row_reduce(a);
}

/// Basis of the right null space {x : m x = 0}, one vector per column.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> a = m;
  const Eigen::Index r = row_reduce(a);
  std::vector<Eigen::Index> pivots;
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Eigen::Index i = 0; i < r; ++i) {
    Eigen::Index c = 0;
    while (detail::is_zero(a(i, c))) ++c;
    pivots.push_back(c);
    is_pivot[static_cast<std::size_t>(c)] = true;
  }
  DenseMatrix<Scalar> basis(a.cols(), a.cols() - r);
  basis.setConstant(Scalar(0));
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out) = Scalar(1);
    for (Eigen::Index i = 0; i < r; ++i) basis(pivots[static_cast<std::size_t>(i)], out) = -a(i, free);
    ++out;
  }
  return basis;
}

/// Entrywise evaluation of a polynomial matrix at a rational point.
template <typename Derived>
RationalMatrix evaluate(const Eigen::MatrixBase<Derived>& m, const Rational& x) {
  return m.unaryExpr([&x](const DeltaPoly& p) { return p.evaluate(x); });
}

} // namespace diagcat

#endif // DIAGCAT_EIGEN_SUPPORT_HPP
