#include "diagcat/delta_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace diagcat {

DeltaPoly::DeltaPoly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

DeltaPoly::DeltaPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

DeltaPoly::DeltaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

DeltaPoly DeltaPoly::delta() { return monomial(1); }

DeltaPoly DeltaPoly::monomial(unsigned k, const Rational& c) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return DeltaPoly(std::move(v));
}

void DeltaPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational DeltaPoly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational DeltaPoly::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

DeltaPoly DeltaPoly::negate_variable() const {
  DeltaPoly r = *this;
  for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
  return r;
}

DeltaPoly DeltaPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return DeltaPoly(std::move(v));
}

std::string DeltaPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[k];
    if (k == 1) os << "*d";
    if (k > 1) os << "*d^" << k;
  }
  return os.str();
}

DeltaPoly DeltaPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  DeltaPoly result;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid polynomial '" + std::string(text) + "': " + why + " at offset " +
                                std::to_string(i));
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) fail("repeated sign");
    }
    Rational coeff(1);
    bool have_coeff = false;
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    if (i > start) {
      coeff = Rational::parse(std::string_view(s).substr(start, i - start));
      have_coeff = true;
    }
    unsigned power = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'd')) {
      if (s[i] == '*') {
        if (!have_coeff) fail("'*' without coefficient");
        ++i;
      }
      if (i >= s.size() || s[i] != 'd') fail("expected 'd'");
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected exponent");
        power = static_cast<unsigned>(std::stoul(s.substr(start, i - start)));
      }
    } else if (!have_coeff) {
      fail("expected term");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') fail("unexpected character");
    result += monomial(power, sign < 0 ? -coeff : coeff);
  }
  return result;
}

DeltaPoly& DeltaPoly::operator+=(const DeltaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

DeltaPoly& DeltaPoly::operator-=(const DeltaPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return DeltaPoly(std::move(v));
}

DeltaPoly& DeltaPoly::operator*=(const DeltaPoly& o) { return *this = *this * o; }

DeltaPoly& DeltaPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

DeltaPoly operator-(const DeltaPoly& a) {
  DeltaPoly r = a;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::pair<DeltaPoly, DeltaPoly> divmod(const DeltaPoly& a, const DeltaPoly& b) {
  if (b.is_zero()) throw std::domain_error("DeltaPoly: division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& den = b.coefficients();
  const std::size_t db = den.size() - 1;
  if (rem.size() < den.size()) return {DeltaPoly(), a};
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = Rational(1) / den.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Rational q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * den[j];
  }
  return {DeltaPoly(std::move(quot)), DeltaPoly(std::move(rem))};
}

DeltaPoly operator/(const DeltaPoly& a, const DeltaPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("DeltaPoly: inexact division");
  return q;
}

DeltaPoly pow(const DeltaPoly& base, unsigned exponent) {
  DeltaPoly result(1);
  DeltaPoly b = base;
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

DeltaPoly gcd(DeltaPoly a, DeltaPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

namespace {

constexpr unsigned long kTrialDivisionLimit = 100'000'000UL;

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n > BigInt(kTrialDivisionLimit) * BigInt(kTrialDivisionLimit))
    throw std::range_error("rational_roots: coefficient too large for trial division");
  std::vector<BigInt> divs;
  BigInt d = 1;
  for (; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  return divs;
}

} // namespace

std::vector<Rational> rational_roots(const DeltaPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  DeltaPoly sf = p / gcd(p, p.derivative());
  std::set<Rational> roots;
  if (sf.coefficient(0).is_zero()) {
    roots.insert(Rational(0));
    sf = sf / DeltaPoly::delta();
  }
  if (sf.degree() > 0) {
    BigInt lcm_den = 1;
    for (const auto& c : sf.coefficients()) lcm_den = lcm(lcm_den, c.denominator());
    const DeltaPoly scaled = sf * Rational(lcm_den);
    const BigInt a0 = scaled.coefficient(0).numerator();
    const BigInt an = scaled.leading().numerator();
    const auto nums = positive_divisors(a0);
    const auto dens = positive_divisors(an);
    for (const auto& n : nums)
      for (const auto& d : dens)
        for (int s : {1, -1}) {
          Rational cand(mpq_class(BigInt(n * s), d));
          if (sf.evaluate(cand).is_zero()) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

std::ostream& operator<<(std::ostream& os, const DeltaPoly& p) { return os << p.str(); }

} // namespace diagcat
