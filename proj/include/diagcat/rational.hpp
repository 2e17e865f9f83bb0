#ifndef DIAGCAT_RATIONAL_HPP
#define DIAGCAT_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace diagcat {

using BigInt = mpz_class;

/// Arbitrary precision rational number.
///
/// Thin value wrapper around GMP's mpq_class. Every operation returns a
/// canonical (reduced, positive denominator) value, so equality is structural.
/// The wrapper exists so that arithmetic yields concrete values rather than
/// gmpxx expression templates, which keeps it usable as an Eigen scalar.
class Rational {
public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}

  template <std::integral I, std::integral J>
  Rational(I num, J den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    value_.canonicalize();
  }

  explicit Rational(const BigInt& value) : value_(value) {}
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses `p`, `-p`, or `p/q` (whitespace around the slash is not allowed).
  static Rational parse(std::string_view text);

  const mpq_class& get() const { return value_; }
  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class value_{0};
};

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& r);

} // namespace diagcat

template <>
struct std::hash<diagcat::Rational> {
  std::size_t operator()(const diagcat::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};

#endif // DIAGCAT_RATIONAL_HPP
