#include "diagcat/algebra.hpp"

#include <algorithm>
#include <limits>

#include "diagcat/compose.hpp"
#include "diagcat/error.hpp"
#include "diagcat/notation.hpp"
#include "diagcat/parallel.hpp"

namespace diagcat {

DeltaPoly AlgebraTable::coefficient(std::size_t i, std::size_t j) const {
  const auto& p = product(i, j);
  if (p.zero) return DeltaPoly();
  return DeltaPoly::monomial(static_cast<unsigned>(p.power), Rational(p.sign));
}

namespace {

// Basis size computed before enumerating, so the budget guard is cheap.
std::size_t basis_size(Category c, int n) {
  const auto cap = std::numeric_limits<std::size_t>::max() / 4096;
  std::size_t r = 1;
  switch (c) {
  case Category::brauer:
  case Category::signed_brauer:
    for (int k = 2 * n - 1; k > 1 && r < cap; k -= 2) r *= static_cast<std::size_t>(k);
    return r;
  case Category::temperley_lieb: {
    // Catalan(n)
    for (int k = 0; k < n && r < cap; ++k) r = r * static_cast<std::size_t>(2 * (2 * k + 1)) / static_cast<std::size_t>(k + 2);
    return r;
  }
  case Category::partition: {
    // Bell(2n) via the Bell triangle.
    std::vector<std::size_t> row{1};
    for (int k = 1; k <= 2 * n && row.back() < cap; ++k) {
      std::vector<std::size_t> next{row.back()};
      for (std::size_t v : row) next.push_back(next.back() + v);
      row = std::move(next);
    }
    return row.front();
  }
  default:
    throw Error(ErrorCode::unsupported_variant,
                "no endomorphism algebra table for " + std::string(category_name(c)));
  }
}

} // namespace

AlgebraTable build_algebra(Category c, int n, std::size_t max_basis) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "negative n");
  const std::size_t expected = basis_size(c, n);
  if (expected > max_basis)
    throw Error(ErrorCode::dimension_budget_exceeded, "End([" + std::to_string(n) + "]) has " +
                                                          std::to_string(expected) + " basis diagrams, budget " +
                                                          std::to_string(max_basis));
  AlgebraTable t;
  t.category = c;
  t.n = n;
  const DiagramObject x = c == Category::temperley_lieb ? DiagramObject::ordered(n) : DiagramObject::plain(n);
  t.basis = enumerate_diagrams(c, x, x);
  const std::size_t size = t.basis.size();
  t.identity_index = static_cast<int>(std::lower_bound(t.basis.begin(), t.basis.end(), identity(c, x)) - t.basis.begin());
  t.products.resize(size * size);
  parallel_for(size, [&](std::size_t i) {
    for (std::size_t j = 0; j < size; ++j) {
      const auto r = compose(c, t.basis[i], t.basis[j]);
      const auto pos = std::lower_bound(t.basis.begin(), t.basis.end(), r.result) - t.basis.begin();
      t.products[i * size + j] = {static_cast<int>(pos), r.closed_count, r.sign, r.is_zero};
    }
  });
  return t;
}

std::vector<DeltaPoly> regular_traces(const AlgebraTable& t) {
  std::vector<DeltaPoly> traces(t.size());
  for (std::size_t k = 0; k < t.size(); ++k)
    for (std::size_t l = 0; l < t.size(); ++l)
      if (const auto& p = t.product(k, l); !p.zero && static_cast<std::size_t>(p.index) == l)
        traces[k] += t.coefficient(k, l);
  return traces;
}

PolyMatrix gram_form(const AlgebraTable& t) {
  const auto traces = regular_traces(t);
  const auto size = static_cast<Eigen::Index>(t.size());
  PolyMatrix g(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) {
      const auto& p = t.product(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      g(i, j) = t.coefficient(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                traces[static_cast<std::size_t>(p.index)];
    }
  return g;
}

DeltaPoly discriminant(Category c, int n, std::size_t max_basis) {
  return bareiss_determinant(gram_form(build_algebra(c, n, max_basis)));
}

bool is_semisimple_at(Category c, int n, const Rational& delta, std::size_t max_basis) {
  const RationalMatrix g = evaluate(gram_form(build_algebra(c, n, max_basis)), delta);
  return rank(g) == g.rows();
}

nlohmann::json to_json(const AlgebraTable& t) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& d : t.basis) basis.push_back(format_diagram(d));
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < t.size(); ++j) {
      const auto& p = t.product(i, j);
      row.push_back(p.zero ? nlohmann::json(nullptr)
                           : nlohmann::json{{"index", p.index}, {"power", p.power}, {"sign", p.sign}});
    }
    table.push_back(row);
  }
  return {{"category", category_name(t.category)},
          {"n", t.n},
          {"basis", basis},
          {"identity", t.identity_index},
          {"products", table}};
}

} // namespace diagcat
