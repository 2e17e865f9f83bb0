#ifndef DIAGCAT_DELTA_POLY_HPP
#define DIAGCAT_DELTA_POLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diagcat/rational.hpp"

namespace diagcat {

/// Univariate polynomial in the formal loop parameter `d` with rational
/// coefficients, stored densely with the constant term first.
///
/// Normal form: no trailing zero coefficient; the zero polynomial has no
/// coefficients. All operations preserve normal form, so `==` is equality
/// of polynomials.
class DeltaPoly {
public:
  DeltaPoly() = default;
  DeltaPoly(const Rational& constant);
  template <std::integral I>
  DeltaPoly(I constant) : DeltaPoly(Rational(constant)) {}
  DeltaPoly(std::initializer_list<Rational> coeffs);
  explicit DeltaPoly(std::vector<Rational> coeffs);

  /// The indeterminate `d`.
  static DeltaPoly delta();
  /// `c * d^k`.
  static DeltaPoly monomial(unsigned k, const Rational& c = Rational(1));

  /// Parses the textual form produced by str(), e.g. `-1 + 1/2*d + 3*d^2`.
  static DeltaPoly parse(std::string_view text);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of d^k (zero past the degree).
  Rational coefficient(std::size_t k) const;
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  /// Substitutes d -> -d.
  DeltaPoly negate_variable() const;
  DeltaPoly derivative() const;

  std::string str() const;

  DeltaPoly& operator+=(const DeltaPoly& o);
  DeltaPoly& operator-=(const DeltaPoly& o);
  DeltaPoly& operator*=(const DeltaPoly& o);
  DeltaPoly& operator*=(const Rational& c);

  friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
  friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b);
  friend DeltaPoly operator*(DeltaPoly a, const Rational& c) { return a *= c; }
  friend DeltaPoly operator*(const Rational& c, DeltaPoly a) { return a *= c; }
  friend DeltaPoly operator-(const DeltaPoly& a);
  /// Exact quotient; throws std::domain_error if `b` does not divide `a`.
  friend DeltaPoly operator/(const DeltaPoly& a, const DeltaPoly& b);

  friend bool operator==(const DeltaPoly&, const DeltaPoly&) = default;
  friend std::ostream& operator<<(std::ostream& os, const DeltaPoly& p);

private:
  void normalize();
  std::vector<Rational> coeffs_;
};

DeltaPoly pow(const DeltaPoly& base, unsigned exponent);

/// Quotient and remainder of Euclidean division; `b` must be nonzero.
std::pair<DeltaPoly, DeltaPoly> divmod(const DeltaPoly& a, const DeltaPoly& b);

/// Monic greatest common divisor (zero if both inputs are zero).
DeltaPoly gcd(DeltaPoly a, DeltaPoly b);

/// Distinct rational roots in increasing order.
///
/// Works on the square-free part and the rational root test, so it is exact;
/// it refuses (std::range_error) polynomials whose square-free part has
/// constant or leading coefficients too large to factor by trial division.
std::vector<Rational> rational_roots(const DeltaPoly& p);

} // namespace diagcat

#endif // DIAGCAT_DELTA_POLY_HPP
