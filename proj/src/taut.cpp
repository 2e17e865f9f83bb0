#include "diagcat/taut.hpp"

#include <algorithm>
#include <functional>

#include "diagcat/compose.hpp"
#include "diagcat/error.hpp"
#include "diagcat/linear.hpp"
#include "diagcat/notation.hpp"
#include "diagcat/parallel.hpp"

namespace diagcat {

Rational TautContext::parameter() const {
  if (category == Category::temperley_lieb) return -q - Rational(1) / q;
  return Rational(dimension);
}

void TautContext::validate() const {
  switch (category) {
  case Category::brauer:
  case Category::partition:
  case Category::walled_brauer:
  case Category::signed_brauer:
  case Category::temperley_lieb: break;
  default:
    throw Error(ErrorCode::unsupported_variant,
                "no tautological realization for " + std::string(category_name(category)));
  }
  if (dimension < 0) throw Error(ErrorCode::invalid_argument, "negative dimension");
  if (category == Category::signed_brauer && dimension % 2 != 0)
    throw Error(ErrorCode::invalid_argument, "the symplectic realization needs an even dimension");
  if (category == Category::temperley_lieb && (dimension != 2 || q.is_zero()))
    throw Error(ErrorCode::invalid_argument, "the Temperley-Lieb realization needs dimension 2 and q != 0");
}

namespace {

// One factor of the tensor contraction: the admissible index pairs (or
// tuples, for partition blocks) on the vertices it touches, with weights.
template <typename Scalar>
struct LocalFactor {
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::vector<int>, Scalar>> options;
};

template <typename Scalar>
Scalar from_rational(const Rational& r) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return r;
  } else {
    if (!r.is_integer() || !r.numerator().fits_slong_p())
      throw Error(ErrorCode::invalid_argument, "realization is not integer valued");
    return static_cast<Scalar>(r.numerator().get_si());
  }
}

template <typename Scalar>
LocalFactor<Scalar> diagonal(std::vector<Vertex> vs, int p) {
  LocalFactor<Scalar> f{std::move(vs), {}};
  for (int a = 0; a < p; ++a) f.options.emplace_back(std::vector<int>(f.vertices.size(), a), Scalar(1));
  return f;
}

template <typename Scalar>
std::vector<LocalFactor<Scalar>> factors(const TautContext& ctx, const Diagram& d) {
  const int p = ctx.dimension;
  std::vector<LocalFactor<Scalar>> out;
  if (const auto* part = std::get_if<PartitionDiagram>(&d)) {
    for (const auto& b : part->blocks()) out.push_back(diagonal<Scalar>(b, p));
    return out;
  }
  if (const auto* s = std::get_if<SignedBrauerDiagram>(&d)) {
    const int h = p / 2;
    for (const auto& e : s->oriented_edges()) {
      if (!is_horizontal(e)) {
        out.push_back(diagonal<Scalar>({e.first, e.second}, p));
        continue;
      }
      // Bottom x->y evaluates w(v_x, v_y); top x->y inserts
      // sum_i f_i (x) e_i - e_i (x) f_i, i.e. weight w(v_y, v_x).
      const Scalar e_then_f = e.first.row == Row::bottom ? Scalar(1) : Scalar(-1);
      LocalFactor<Scalar> f{{e.first, e.second}, {}};
      for (int i = 0; i < h; ++i) {
        f.options.emplace_back(std::vector<int>{i, h + i}, e_then_f);
        f.options.emplace_back(std::vector<int>{h + i, i}, -e_then_f);
      }
      out.push_back(std::move(f));
    }
    return out;
  }
  const BrauerDiagram& b = std::holds_alternative<WalledBrauerDiagram>(d) ? std::get<WalledBrauerDiagram>(d).underlying()
                                                                          : std::get<BrauerDiagram>(d);
  for (const auto& e : b.edges()) {
    if (ctx.category != Category::temperley_lieb || !is_horizontal(e)) {
      out.push_back(diagonal<Scalar>({e.first, e.second}, p));
      continue;
    }
    // Canonical edges list the left vertex first.
    LocalFactor<Scalar> f{{e.first, e.second}, {}};
    if (e.first.row == Row::bottom) {
      f.options.emplace_back(std::vector<int>{0, 1}, from_rational<Scalar>(-Rational(1) / ctx.q));
      f.options.emplace_back(std::vector<int>{1, 0}, Scalar(1));
    } else {
      f.options.emplace_back(std::vector<int>{0, 1}, Scalar(1));
      f.options.emplace_back(std::vector<int>{1, 0}, from_rational<Scalar>(-ctx.q));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t checked_power(int p, int k, std::size_t budget) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) {
    r *= static_cast<std::size_t>(p);
    if (r > budget)
      throw Error(ErrorCode::dimension_budget_exceeded, std::to_string(p) + "^" + std::to_string(k) +
                                                            " exceeds the matrix budget of " + std::to_string(budget));
  }
  return r;
}

} // namespace

template <typename Scalar>
DenseMatrix<Scalar> taut_matrix_as(const TautContext& ctx, const Diagram& d) {
  ctx.validate();
  check_category(ctx.category, d);
  const int n = source(ctx.category, d).size();
  const int m = target(ctx.category, d).size();
  const std::size_t rows = checked_power(ctx.dimension, m, ctx.row_budget);
  const std::size_t cols = checked_power(ctx.dimension, n, ctx.row_budget);
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));

  const auto fs = factors<Scalar>(ctx, d);
  // Place value of each vertex in the row or column index.
  const auto place = [&](Vertex v) {
    const int width = v.row == Row::bottom ? n : m;
    std::size_t w = 1;
    for (int k = v.index; k < width; ++k) w *= static_cast<std::size_t>(ctx.dimension);
    return w;
  };
  std::vector<std::vector<std::size_t>> places(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (Vertex v : fs[i].vertices) places[i].push_back(place(v));

  std::function<void(std::size_t, std::size_t, std::size_t, const Scalar&)> rec = [&](std::size_t k, std::size_t row,
                                                                                       std::size_t col,
                                                                                       const Scalar& weight) {
    if (k == fs.size()) {
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += weight;
      return;
    }
    for (const auto& [idx, w] : fs[k].options) {
      std::size_t r = row, c = col;
      for (std::size_t j = 0; j < idx.size(); ++j)
        (fs[k].vertices[j].row == Row::bottom ? c : r) += static_cast<std::size_t>(idx[j]) * places[k][j];
      rec(k + 1, r, c, weight * w);
    }
  };
  if (ctx.dimension > 0 || fs.empty()) rec(0, 0, 0, Scalar(1));
  return out;
}

template DenseMatrix<std::int64_t> taut_matrix_as<std::int64_t>(const TautContext&, const Diagram&);
template DenseMatrix<Rational> taut_matrix_as<Rational>(const TautContext&, const Diagram&);

namespace {

template <typename Scalar>
FunctorialityReport sweep(const TautContext& ctx, int max_size) {
  const Category c = ctx.category;
  const auto objects = objects_up_to(c, max_size);
  const std::size_t k = objects.size();
  struct Hom {
    std::vector<Diagram> basis;
    std::vector<DenseMatrix<Scalar>> matrices;
  };
  std::vector<Hom> homs(k * k);
  parallel_for(k * k, [&](std::size_t i) {
    Hom& h = homs[i];
    h.basis = enumerate_diagrams(c, objects[i / k], objects[i % k]);
    for (const auto& d : h.basis) h.matrices.push_back(taut_matrix_as<Scalar>(ctx, d));
  });
  const Scalar param = from_rational<Scalar>(ctx.parameter());

  struct Partial {
    long checked = 0;
    long failures = 0;
    std::string first;
  };
  std::vector<Partial> parts(k * k * k);
  parallel_for(k * k * k, [&](std::size_t t) {
    const std::size_t x = t / (k * k), y = (t / k) % k, z = t % k;
    const Hom& first = homs[x * k + y];
    const Hom& second = homs[y * k + z];
    const Hom& target = homs[x * k + z];
    Partial& part = parts[t];
    for (std::size_t b = 0; b < second.basis.size(); ++b)
      for (std::size_t a = 0; a < first.basis.size(); ++a) {
        ++part.checked;
        const auto r = compose(c, second.basis[b], first.basis[a]);
        const auto pos = static_cast<std::size_t>(
            std::lower_bound(target.basis.begin(), target.basis.end(), r.result) - target.basis.begin());
        Scalar factor = r.sign == 1 ? Scalar(1) : Scalar(-1);
        for (int i = 0; i < r.closed_count; ++i) factor = factor * param;
        const DenseMatrix<Scalar> lhs = second.matrices[b] * first.matrices[a];
        const DenseMatrix<Scalar> rhs = target.matrices[pos] * factor;
        if (lhs != rhs) {
          if (part.failures++ == 0)
            part.first = format_diagram(second.basis[b]) + " after " + format_diagram(first.basis[a]);
        }
      }
  });
  FunctorialityReport report;
  for (const auto& p : parts) {
    report.pairs_checked += p.checked;
    if (p.failures != 0 && report.failures == 0) report.first_failure = p.first;
    report.failures += p.failures;
  }
  report.pass = report.failures == 0;
  return report;
}

} // namespace

FunctorialityReport verify_taut_functoriality(const TautContext& ctx, int max_size) {
  ctx.validate();
  if (ctx.category == Category::temperley_lieb) return sweep<Rational>(ctx, max_size);
  return sweep<std::int64_t>(ctx, max_size);
}

bool check_p2_p0_surjectivity(const Rational& delta) {
  const Category c = Category::brauer;
  const auto zero = DiagramObject::plain(0), two = DiagramObject::plain(2);
  const auto cup = Morphism::from_diagram(c, BrauerDiagram(0, 2, {{top(1), top(2)}}));
  const auto sources = enumerate_diagrams(c, two, zero);
  const auto targets = enumerate_diagrams(c, zero, zero);
  RationalMatrix image(static_cast<Eigen::Index>(targets.size()), static_cast<Eigen::Index>(sources.size()));
  for (std::size_t j = 0; j < sources.size(); ++j) {
    const auto value = compose(Morphism::from_diagram(c, sources[j]), cup);
    for (std::size_t i = 0; i < targets.size(); ++i)
      image(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value.coefficient(targets[i]).evaluate(delta);
  }
  return rank(image) == image.rows();
}

nlohmann::json to_json(const FunctorialityReport& r) {
  return {{"pairs_checked", r.pairs_checked},
          {"failures", r.failures},
          {"pass", r.pass},
          {"first_failure", r.first_failure}};
}

} // namespace diagcat
