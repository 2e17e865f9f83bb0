#include "diagcat/rational.hpp"

#include <cctype>
#include <ostream>

namespace diagcat {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

} // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw std::invalid_argument("invalid rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("invalid rational: '" + std::string(text) + "'");
  const BigInt d = parse_integer(den);
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  return Rational(mpq_class(parse_integer(num), d));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  mpq_class result(1);
  mpz_pow_ui(result.get_num_mpz_t(), base.get().get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get().get_den_mpz_t(), exponent);
  return Rational(result);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace diagcat
