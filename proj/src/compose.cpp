#include "diagcat/compose.hpp"

#include <algorithm>
#include <numeric>

#include "diagcat/error.hpp"

namespace diagcat {

namespace {

void check_middle(int alpha_top, int beta_bottom) {
  if (alpha_top != beta_bottom)
    throw Error(ErrorCode::shape_mismatch, "cannot compose: middle rows have sizes " + std::to_string(alpha_top) +
                                               " and " + std::to_string(beta_bottom));
}

// Stacked graph on alpha's bottom row (ids 0..n-1), the shared middle row
// (n..n+p-1) and beta's top row (n+p..n+p+m-1).
struct Stack {
  int n, p, m;

  int id_alpha(Vertex v) const { return v.row == Row::bottom ? v.index - 1 : n + v.index - 1; }
  int id_beta(Vertex v) const { return v.row == Row::bottom ? n + v.index - 1 : n + p + v.index - 1; }
  Vertex outer(int id) const { return id < n ? bottom(id + 1) : top(id - n - p + 1); }
  int size() const { return n + p + m; }
};

struct Traced {
  std::vector<Edge> edges; // oriented along the traversal
  int cycles = 0;
  int flips = 0;
};

// Walks every path and cycle of the stacked matchings. An edge (x, y) is
// reversed when it is horizontal and traversed from y to x.
Traced trace(const Stack& s, const std::vector<Edge>& alpha, const std::vector<Edge>& beta) {
  struct Link {
    int from, to;
    bool horizontal;
  };
  std::vector<Link> links;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(s.size()));
  const auto add = [&](int x, int y, bool h) {
    adj[static_cast<std::size_t>(x)].push_back(static_cast<int>(links.size()));
    adj[static_cast<std::size_t>(y)].push_back(static_cast<int>(links.size()));
    links.push_back({x, y, h});
  };
  for (const auto& e : alpha) add(s.id_alpha(e.first), s.id_alpha(e.second), is_horizontal(e));
  for (const auto& e : beta) add(s.id_beta(e.first), s.id_beta(e.second), is_horizontal(e));

  Traced out;
  std::vector<char> used(links.size(), 0);
  const auto walk = [&](int start) {
    int cur = start;
    for (;;) {
      int next = -1;
      for (int l : adj[static_cast<std::size_t>(cur)])
        if (!used[static_cast<std::size_t>(l)]) {
          next = l;
          break;
        }
      if (next < 0) break;
      used[static_cast<std::size_t>(next)] = 1;
      const Link& k = links[static_cast<std::size_t>(next)];
      if (k.horizontal && k.from != cur) ++out.flips;
      cur = k.from == cur ? k.to : k.from;
      if (cur == start) break;
    }
    return cur;
  };
  for (int v = 0; v < s.size(); ++v) {
    if (v >= s.n && v < s.n + s.p) continue;
    const auto& a = adj[static_cast<std::size_t>(v)];
    if (std::all_of(a.begin(), a.end(), [&](int l) { return used[static_cast<std::size_t>(l)] != 0; })) continue;
    const int end = walk(v);
    out.edges.emplace_back(s.outer(v), s.outer(end));
  }
  for (std::size_t l = 0; l < links.size(); ++l) {
    if (used[l]) continue;
    walk(links[l].from);
    ++out.cycles;
  }
  return out;
}

} // namespace

Composite<BrauerDiagram> compose_brauer(const BrauerDiagram& beta, const BrauerDiagram& alpha) {
  check_middle(alpha.top(), beta.bottom());
  const Stack s{alpha.bottom(), alpha.top(), beta.top()};
  auto t = trace(s, alpha.edges(), beta.edges());
  return {t.cycles, BrauerDiagram(s.n, s.m, std::move(t.edges)), 1, false};
}

Composite<WalledBrauerDiagram> compose_walled(const WalledBrauerDiagram& beta, const WalledBrauerDiagram& alpha) {
  check_middle(alpha.target().size(), beta.source().size());
  if (alpha.target() != beta.source())
    throw Error(ErrorCode::color_mismatch, "cannot compose: middle colorings " + to_string(alpha.target()) + " and " +
                                               to_string(beta.source()) + " differ");
  auto plain = compose_brauer(beta.underlying(), alpha.underlying());
  return {plain.closed_count, WalledBrauerDiagram(alpha.source(), beta.target(), std::move(plain.result)), 1, false};
}

Composite<SignedBrauerDiagram> compose_signed(const SignedBrauerDiagram& beta, const SignedBrauerDiagram& alpha) {
  check_middle(alpha.top(), beta.bottom());
  const Stack s{alpha.bottom(), alpha.top(), beta.top()};
  auto t = trace(s, alpha.oriented_edges(), beta.oriented_edges());
  const SignedBrauerDiagram induced(s.n, s.m, std::move(t.edges));
  auto [canon_sign, result] = induced.canonicalize();
  const int sign = (t.flips % 2 == 0 ? 1 : -1) * canon_sign;
  return {t.cycles, std::move(result), sign, false};
}

Composite<PartitionDiagram> compose_partition(const PartitionDiagram& beta, const PartitionDiagram& alpha,
                                              bool degenerate) {
  check_middle(alpha.top(), beta.bottom());
  const Stack s{alpha.bottom(), alpha.top(), beta.top()};

  std::vector<int> parent(static_cast<std::size_t>(s.size()));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  const auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

  // Block index touching each middle vertex from below and from above.
  std::vector<int> below(static_cast<std::size_t>(s.p), -1), above(static_cast<std::size_t>(s.p), -1);
  for (std::size_t k = 0; k < alpha.blocks().size(); ++k) {
    const auto& b = alpha.blocks()[k];
    for (Vertex v : b) {
      unite(s.id_alpha(b.front()), s.id_alpha(v));
      if (v.row == Row::top) below[static_cast<std::size_t>(v.index - 1)] = static_cast<int>(k);
    }
  }
  for (std::size_t k = 0; k < beta.blocks().size(); ++k) {
    const auto& b = beta.blocks()[k];
    for (Vertex v : b) {
      unite(s.id_beta(b.front()), s.id_beta(v));
      if (v.row == Row::bottom) above[static_cast<std::size_t>(v.index - 1)] = static_cast<int>(k);
    }
  }

  std::vector<Block> by_root(static_cast<std::size_t>(s.size()));
  for (int v = 0; v < s.size(); ++v)
    if (v < s.n || v >= s.n + s.p) by_root[static_cast<std::size_t>(find(v))].push_back(s.outer(v));
  int closed = 0;
  std::vector<Block> blocks;
  for (int v = 0; v < s.size(); ++v) {
    if (find(v) != v) continue;
    auto& b = by_root[static_cast<std::size_t>(v)];
    if (b.empty())
      ++closed;
    else
      blocks.push_back(std::move(b));
  }
  Composite<PartitionDiagram> out{closed, PartitionDiagram(s.n, s.m, std::move(blocks)), 1, false};
  if (degenerate) {
    std::vector<std::pair<int, int>> meets;
    for (int i = 0; i < s.p; ++i) meets.emplace_back(below[static_cast<std::size_t>(i)], above[static_cast<std::size_t>(i)]);
    std::sort(meets.begin(), meets.end());
    out.is_zero = std::adjacent_find(meets.begin(), meets.end()) != meets.end();
  }
  return out;
}

PartialInjection compose_fisharp(const PartialInjection& beta, const PartialInjection& alpha) {
  check_middle(alpha.target_size(), beta.source_size());
  if (alpha.kind() != beta.kind()) throw Error(ErrorCode::variant_mismatch, "cannot compose FA with FI# maps");
  std::vector<std::pair<int, int>> pairs;
  for (auto [s, t] : alpha.pairs())
    if (auto u = beta.image(t)) pairs.emplace_back(s, *u);
  return {alpha.source_size(), beta.target_size(), std::move(pairs), alpha.kind()};
}

int epsilon_sign(const SignedBrauerDiagram& alpha) {
  const int n = alpha.bottom();
  const int m = alpha.top();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : alpha.oriented_edges()) {
    int a = boundary_position(e.first, n, m);
    int b = boundary_position(e.second, n, m);
    if (!is_horizontal(e) && a > b) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  // pi sends the k-th pair to (2k+1, 2k+2); sign by cycle decomposition.
  std::vector<int> pi(static_cast<std::size_t>(n + m));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    pi[static_cast<std::size_t>(pairs[k].first - 1)] = static_cast<int>(2 * k);
    pi[static_cast<std::size_t>(pairs[k].second - 1)] = static_cast<int>(2 * k + 1);
  }
  int sign = 1;
  std::vector<char> seen(pi.size(), 0);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(pi[j])) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::pair<int, BrauerDiagram> phi_signed_to_brauer(const SignedBrauerDiagram& alpha) {
  const int top_caps = alpha.underlying().horizontal_count(Row::top);
  return {epsilon_sign(alpha) * (top_caps % 2 == 0 ? 1 : -1), alpha.underlying()};
}

namespace {

template <class D>
Composite<Diagram> widen(Composite<D> c) {
  return {c.closed_count, Diagram(std::move(c.result)), c.sign, c.is_zero};
}

} // namespace

Composite<Diagram> compose(Category c, const Diagram& beta, const Diagram& alpha) {
  check_category(c, beta);
  check_category(c, alpha);
  switch (c) {
  case Category::brauer:
  case Category::temperley_lieb:
    return widen(compose_brauer(std::get<BrauerDiagram>(beta), std::get<BrauerDiagram>(alpha)));
  case Category::signed_brauer:
    return widen(compose_signed(std::get<SignedBrauerDiagram>(beta), std::get<SignedBrauerDiagram>(alpha)));
  case Category::walled_brauer:
    return widen(compose_walled(std::get<WalledBrauerDiagram>(beta), std::get<WalledBrauerDiagram>(alpha)));
  case Category::partition:
  case Category::degenerate_partition:
    return widen(compose_partition(std::get<PartitionDiagram>(beta), std::get<PartitionDiagram>(alpha),
                                   c == Category::degenerate_partition));
  case Category::fi_sharp:
  case Category::fa:
    return {0, compose_fisharp(std::get<PartialInjection>(beta), std::get<PartialInjection>(alpha)), 1, false};
  }
  return {};
}

} // namespace diagcat
