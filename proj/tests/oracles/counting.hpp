#ifndef DIAGCAT_TESTS_ORACLES_COUNTING_HPP
#define DIAGCAT_TESTS_ORACLES_COUNTING_HPP

#include <cstdint>
#include <vector>

// Closed-form counts used to cross-check enumeration.
namespace oracle {

// (2k-1)!! perfect matchings on 2k points; 0 on an odd number of points.
inline std::int64_t matchings(int points) {
  if (points % 2 != 0) return 0;
  std::int64_t r = 1;
  for (int k = points - 1; k > 1; k -= 2) r *= k;
  return r;
}

// Bell numbers by the Bell triangle.
inline std::int64_t bell(int n) {
  std::vector<std::int64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = next;
  }
  return row.front();
}

inline std::int64_t catalan(int k) {
  std::int64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

inline std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Partial injections [n] -> [m]: sum_k C(n,k) C(m,k) k!.
inline std::int64_t partial_injections(int n, int m) {
  std::int64_t r = 0;
  for (int k = 0; k <= std::min(n, m); ++k) r += binomial(n, k) * binomial(m, k) * factorial(k);
  return r;
}

// Walled Brauer diagrams (n1,n2) -> (m1,m2): a bijection between the
// n1 + m2 "color 1 sources" and the n2 + m1 "color 1 targets" after bending.
inline std::int64_t walled(int n1, int n2, int m1, int m2) {
  return n1 + m2 == n2 + m1 ? factorial(n1 + m2) : 0;
}

} // namespace oracle

#endif
