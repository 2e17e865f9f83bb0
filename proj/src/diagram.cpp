#include "diagcat/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "diagcat/error.hpp"

namespace diagcat {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

bool in_range(Vertex v, int bottom, int top) {
  const int limit = v.row == Row::bottom ? bottom : top;
  return v.index >= 1 && v.index <= limit;
}

// Flat vertex numbering: bottom row first, then the top row. Agrees with the
// Vertex ordering.
int flat(Vertex v, int bottom) { return v.row == Row::bottom ? v.index - 1 : bottom + v.index - 1; }
Vertex unflat(int id, int bottom) { return id < bottom ? Vertex{Row::bottom, id + 1} : Vertex{Row::top, id - bottom + 1}; }

Vertex swap_row(Vertex v) { return {v.row == Row::bottom ? Row::top : Row::bottom, v.index}; }

Edge ordered_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

void for_each_permutation(int n, const std::function<void(std::span<const int>)>& fn) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    fn(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace

std::string_view category_name(Category c) {
  switch (c) {
  case Category::brauer: return "brauer";
  case Category::temperley_lieb: return "temperley_lieb";
  case Category::signed_brauer: return "signed_brauer";
  case Category::walled_brauer: return "walled_brauer";
  case Category::partition: return "partition";
  case Category::degenerate_partition: return "degenerate_partition";
  case Category::fi_sharp: return "fi_sharp";
  case Category::fa: return "fa";
  }
  return "unknown";
}

Category parse_category(std::string_view name) {
  for (Category c : {Category::brauer, Category::temperley_lieb, Category::signed_brauer, Category::walled_brauer,
                     Category::partition, Category::degenerate_partition, Category::fi_sharp, Category::fa})
    if (category_name(c) == name) return c;
  if (name == "signed") return Category::signed_brauer;
  if (name == "walled") return Category::walled_brauer;
  if (name == "tl") return Category::temperley_lieb;
  fail(ErrorCode::invalid_argument, "unknown category '" + std::string(name) + "'");
}

std::string to_string(Vertex v) { return (v.row == Row::bottom ? "b" : "t") + std::to_string(v.index); }

std::string to_string(const DiagramObject& x) {
  if (x.kind == ObjectKind::walled) return std::to_string(x.first) + "+" + std::to_string(x.second);
  return std::to_string(x.first);
}

// ---------------------------------------------------------------------------
// BrauerDiagram

BrauerDiagram::BrauerDiagram(int bottom, int top, std::vector<Edge> edges) : bottom_(bottom), top_(top) {
  if (bottom < 0 || top < 0) fail(ErrorCode::invalid_argument, "negative row size");
  if ((bottom + top) % 2 != 0)
    fail(ErrorCode::parity_violation,
         "no Brauer diagram " + std::to_string(bottom) + "->" + std::to_string(top) + ": row sizes differ in parity");
  std::vector<int> seen(static_cast<std::size_t>(bottom + top), 0);
  for (auto& e : edges) {
    for (Vertex v : {e.first, e.second}) {
      if (!in_range(v, bottom, top)) fail(ErrorCode::not_a_matching, "vertex " + to_string(v) + " out of range");
      ++seen[static_cast<std::size_t>(flat(v, bottom))];
    }
    if (e.first == e.second) fail(ErrorCode::not_a_matching, "loop edge at " + to_string(e.first));
    e = ordered_edge(e.first, e.second);
  }
  for (std::size_t id = 0; id < seen.size(); ++id) {
    if (seen[id] != 1)
      fail(ErrorCode::not_a_matching, "vertex " + to_string(unflat(static_cast<int>(id), bottom)) + " lies in " +
                                          std::to_string(seen[id]) + " edges");
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

BrauerDiagram BrauerDiagram::identity(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(diagcat::bottom(i), diagcat::top(i));
  return {n, n, std::move(edges)};
}

BrauerDiagram BrauerDiagram::permutation(std::span<const int> perm) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < perm.size(); ++i) edges.emplace_back(diagcat::bottom(static_cast<int>(i) + 1), diagcat::top(perm[i]));
  const int n = static_cast<int>(perm.size());
  return {n, n, std::move(edges)};
}

Vertex BrauerDiagram::mate(Vertex v) const {
  for (const auto& e : edges_) {
    if (e.first == v) return e.second;
    if (e.second == v) return e.first;
  }
  fail(ErrorCode::invalid_argument, "vertex " + to_string(v) + " not in diagram");
}

int BrauerDiagram::horizontal_count(Row row) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [row](const Edge& e) {
    return is_horizontal(e) && e.first.row == row;
  }));
}

// ---------------------------------------------------------------------------
// SignedBrauerDiagram

int boundary_position(Vertex v, int bottom, int top) {
  return v.row == Row::bottom ? v.index : bottom + top + 1 - v.index;
}

SignedBrauerDiagram::SignedBrauerDiagram(BrauerDiagram base)
    : base_(std::move(base)), reversed_(base_.edges().size(), 0) {}

SignedBrauerDiagram::SignedBrauerDiagram(int bottom, int top, std::vector<Edge> oriented_edges)
    : base_(bottom, top, oriented_edges), reversed_(base_.edges().size(), 0) {
  const auto& canon = base_.edges();
  for (const auto& e : oriented_edges) {
    if (!is_horizontal(e)) continue;
    const auto it = std::lower_bound(canon.begin(), canon.end(), ordered_edge(e.first, e.second));
    const bool backwards = boundary_position(e.first, bottom, top) > boundary_position(e.second, bottom, top);
    reversed_[static_cast<std::size_t>(it - canon.begin())] = backwards ? 1 : 0;
  }
}

std::vector<Edge> SignedBrauerDiagram::oriented_edges() const {
  std::vector<Edge> out;
  const auto& edges = base_.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    Edge e = edges[k];
    if (is_horizontal(e)) {
      const bool forward = boundary_position(e.first, bottom(), top()) < boundary_position(e.second, bottom(), top());
      if (forward == (reversed_[k] != 0)) std::swap(e.first, e.second);
    }
    out.push_back(e);
  }
  return out;
}

bool SignedBrauerDiagram::is_canonical() const {
  return std::all_of(reversed_.begin(), reversed_.end(), [](std::uint8_t r) { return r == 0; });
}

std::pair<int, SignedBrauerDiagram> SignedBrauerDiagram::canonicalize() const {
  const auto flips = std::count(reversed_.begin(), reversed_.end(), std::uint8_t{1});
  return {flips % 2 == 0 ? 1 : -1, SignedBrauerDiagram(base_)};
}

// ---------------------------------------------------------------------------
// WalledBrauerDiagram

WalledBrauerDiagram::WalledBrauerDiagram(DiagramObject source, DiagramObject target, std::vector<Edge> edges)
    : WalledBrauerDiagram(source, target, BrauerDiagram(source.size(), target.size(), std::move(edges))) {}

WalledBrauerDiagram::WalledBrauerDiagram(DiagramObject source, DiagramObject target, BrauerDiagram base)
    : source_(source), target_(target), base_(std::move(base)) {
  source_.kind = ObjectKind::walled;
  target_.kind = ObjectKind::walled;
  if (base_.bottom() != source_.size() || base_.top() != target_.size())
    fail(ErrorCode::shape_mismatch, "walled diagram rows do not match the colored objects");
  for (const auto& e : base_.edges()) {
    const bool same = color(e.first) == color(e.second);
    if (is_horizontal(e) == same)
      fail(ErrorCode::color_violation, "edge (" + to_string(e.first) + " " + to_string(e.second) + ") " +
                                           (same ? "is horizontal within one color" : "is vertical across colors"));
  }
}

int WalledBrauerDiagram::color(Vertex v) const {
  const DiagramObject& x = v.row == Row::bottom ? source_ : target_;
  return v.index <= x.first ? 1 : 2;
}

// ---------------------------------------------------------------------------
// PartitionDiagram

PartitionDiagram::PartitionDiagram(int bottom, int top, std::vector<Block> blocks) : bottom_(bottom), top_(top) {
  if (bottom < 0 || top < 0) fail(ErrorCode::invalid_argument, "negative row size");
  std::vector<int> seen(static_cast<std::size_t>(bottom + top), 0);
  for (auto& b : blocks) {
    if (b.empty()) fail(ErrorCode::not_a_partition, "empty block");
    for (Vertex v : b) {
      if (!in_range(v, bottom, top)) fail(ErrorCode::not_a_partition, "vertex " + to_string(v) + " out of range");
      ++seen[static_cast<std::size_t>(flat(v, bottom))];
    }
    std::sort(b.begin(), b.end());
  }
  for (std::size_t id = 0; id < seen.size(); ++id) {
    if (seen[id] != 1)
      fail(ErrorCode::not_a_partition, "vertex " + to_string(unflat(static_cast<int>(id), bottom)) + " lies in " +
                                           std::to_string(seen[id]) + " blocks");
  }
  std::sort(blocks.begin(), blocks.end());
  blocks_ = std::move(blocks);
}

PartitionDiagram::PartitionDiagram(const BrauerDiagram& matching) : bottom_(matching.bottom()), top_(matching.top()) {
  for (const auto& e : matching.edges()) blocks_.push_back({e.first, e.second});
}

PartitionDiagram PartitionDiagram::identity(int n) { return PartitionDiagram(BrauerDiagram::identity(n)); }

PartitionDiagram PartitionDiagram::permutation(std::span<const int> perm) {
  return PartitionDiagram(BrauerDiagram::permutation(perm));
}

// ---------------------------------------------------------------------------
// PartialInjection

PartialInjection::PartialInjection(int source, int target, std::vector<std::pair<int, int>> pairs, MapKind kind)
    : source_(source), target_(target), kind_(kind), image_(static_cast<std::size_t>(std::max(source, 0)), 0) {
  if (source < 0 || target < 0) fail(ErrorCode::invalid_argument, "negative set size");
  std::vector<int> hit(static_cast<std::size_t>(target), 0);
  for (auto [s, t] : pairs) {
    if (s < 1 || s > source || t < 1 || t > target)
      fail(ErrorCode::not_an_injection, "pair (" + std::to_string(s) + "->" + std::to_string(t) + ") out of range");
    if (image_[static_cast<std::size_t>(s - 1)] != 0)
      fail(ErrorCode::not_an_injection, "b" + std::to_string(s) + " has two images");
    image_[static_cast<std::size_t>(s - 1)] = t;
    if (kind == MapKind::partial_injection && hit[static_cast<std::size_t>(t - 1)]++ != 0)
      fail(ErrorCode::not_an_injection, "t" + std::to_string(t) + " has two preimages");
  }
  if (kind == MapKind::function && std::count(image_.begin(), image_.end(), 0) != 0)
    fail(ErrorCode::not_an_injection, "function is not defined on all of the source");
}

PartialInjection PartialInjection::identity(int n, MapKind kind) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) pairs.emplace_back(i, i);
  return {n, n, std::move(pairs), kind};
}

std::optional<int> PartialInjection::image(int i) const {
  const int t = image_.at(static_cast<std::size_t>(i - 1));
  return t == 0 ? std::nullopt : std::optional<int>(t);
}

std::vector<std::pair<int, int>> PartialInjection::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != 0) out.emplace_back(static_cast<int>(i) + 1, image_[i]);
  return out;
}

int PartialInjection::domain_size() const {
  return static_cast<int>(image_.size()) - static_cast<int>(std::count(image_.begin(), image_.end(), 0));
}

int PartialInjection::image_size() const {
  std::vector<int> img;
  for (int t : image_)
    if (t != 0) img.push_back(t);
  std::sort(img.begin(), img.end());
  return static_cast<int>(std::unique(img.begin(), img.end()) - img.begin());
}

// ---------------------------------------------------------------------------
// Category plumbing

void check_category(Category c, const Diagram& d) {
  const auto mismatch = [c] {
    fail(ErrorCode::variant_mismatch, "diagram is not a " + std::string(category_name(c)) + " diagram");
  };
  switch (c) {
  case Category::brauer:
    if (!std::holds_alternative<BrauerDiagram>(d)) mismatch();
    return;
  case Category::temperley_lieb:
    if (!std::holds_alternative<BrauerDiagram>(d)) mismatch();
    if (!is_planar(std::get<BrauerDiagram>(d))) fail(ErrorCode::not_planar, "Temperley-Lieb diagram is not planar");
    return;
  case Category::signed_brauer:
    if (!std::holds_alternative<SignedBrauerDiagram>(d)) mismatch();
    return;
  case Category::walled_brauer:
    if (!std::holds_alternative<WalledBrauerDiagram>(d)) mismatch();
    return;
  case Category::partition:
  case Category::degenerate_partition:
    if (!std::holds_alternative<PartitionDiagram>(d)) mismatch();
    return;
  case Category::fi_sharp:
  case Category::fa: {
    const auto* p = std::get_if<PartialInjection>(&d);
    const MapKind want = c == Category::fa ? MapKind::function : MapKind::partial_injection;
    if (p == nullptr || p->kind() != want) mismatch();
    return;
  }
  }
}

namespace {

std::pair<int, int> row_sizes(const Diagram& d) {
  return std::visit(overloaded{
                        [](const BrauerDiagram& b) { return std::pair{b.bottom(), b.top()}; },
                        [](const SignedBrauerDiagram& b) { return std::pair{b.bottom(), b.top()}; },
                        [](const WalledBrauerDiagram& b) { return std::pair{b.source().size(), b.target().size()}; },
                        [](const PartitionDiagram& b) { return std::pair{b.bottom(), b.top()}; },
                        [](const PartialInjection& b) { return std::pair{b.source_size(), b.target_size()}; },
                    },
                    d);
}

DiagramObject object_for(Category c, int n) {
  return c == Category::temperley_lieb ? DiagramObject::ordered(n) : DiagramObject::plain(n);
}

} // namespace

DiagramObject source(Category c, const Diagram& d) {
  if (const auto* w = std::get_if<WalledBrauerDiagram>(&d)) return w->source();
  return object_for(c, row_sizes(d).first);
}

DiagramObject target(Category c, const Diagram& d) {
  if (const auto* w = std::get_if<WalledBrauerDiagram>(&d)) return w->target();
  return object_for(c, row_sizes(d).second);
}

// ---------------------------------------------------------------------------
// Predicates

namespace {

bool partition_upwards(const PartitionDiagram& d, Row toward) {
  for (const auto& block : d.blocks()) {
    const auto n_toward = std::count_if(block.begin(), block.end(), [toward](Vertex v) { return v.row == toward; });
    const auto n_other = static_cast<long>(block.size()) - n_toward;
    if (n_toward == 0 || n_other > 1) return false;
  }
  return true;
}

} // namespace

bool is_upwards(const Diagram& d) {
  return std::visit(
      overloaded{
          [](const BrauerDiagram& b) { return b.horizontal_count(Row::bottom) == 0; },
          [](const SignedBrauerDiagram& b) { return b.underlying().horizontal_count(Row::bottom) == 0; },
          [](const WalledBrauerDiagram& b) { return b.underlying().horizontal_count(Row::bottom) == 0; },
          [](const PartitionDiagram& b) { return partition_upwards(b, Row::top); },
          [](const PartialInjection& p) {
            return p.kind() == MapKind::function ? p.image_size() == p.domain_size()
                                                 : p.domain_size() == p.source_size();
          },
      },
      d);
}

bool is_downwards(const Diagram& d) {
  return std::visit(overloaded{
                        [](const BrauerDiagram& b) { return b.horizontal_count(Row::top) == 0; },
                        [](const SignedBrauerDiagram& b) { return b.underlying().horizontal_count(Row::top) == 0; },
                        [](const WalledBrauerDiagram& b) { return b.underlying().horizontal_count(Row::top) == 0; },
                        [](const PartitionDiagram& b) { return partition_upwards(b, Row::bottom); },
                        [](const PartialInjection& p) { return p.image_size() == p.target_size(); },
                    },
                    d);
}

bool is_bijection(const Diagram& d) {
  const auto all_vertical = [](const BrauerDiagram& b) {
    return std::none_of(b.edges().begin(), b.edges().end(), [](const Edge& e) { return is_horizontal(e); });
  };
  return std::visit(overloaded{
                        [&](const BrauerDiagram& b) { return all_vertical(b); },
                        [&](const SignedBrauerDiagram& b) { return all_vertical(b.underlying()); },
                        [&](const WalledBrauerDiagram& b) { return all_vertical(b.underlying()); },
                        [](const PartitionDiagram& b) {
                          return std::all_of(b.blocks().begin(), b.blocks().end(), [](const Block& k) {
                            return k.size() == 2 && k[0].row == Row::bottom && k[1].row == Row::top;
                          });
                        },
                        [](const PartialInjection& p) {
                          return p.source_size() == p.target_size() && p.domain_size() == p.source_size() &&
                                 p.image_size() == p.target_size();
                        },
                    },
                    d);
}

bool is_planar(const BrauerDiagram& d) {
  std::vector<std::pair<int, int>> arcs;
  for (const auto& e : d.edges()) {
    int x = boundary_position(e.first, d.bottom(), d.top());
    int y = boundary_position(e.second, d.bottom(), d.top());
    if (x > y) std::swap(x, y);
    arcs.emplace_back(x, y);
  }
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const auto [x, y] = arcs[i];
      const auto [z, w] = arcs[j];
      if ((x < z && z < y && y < w) || (z < x && x < w && w < y)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void matchings(std::vector<int>& free, std::vector<std::pair<int, int>>& acc,
               const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
  if (free.empty()) {
    emit(acc);
    return;
  }
  const int a = free.front();
  for (std::size_t k = 1; k < free.size(); ++k) {
    const int b = free[k];
    std::vector<int> rest;
    rest.reserve(free.size() - 2);
    for (std::size_t j = 1; j < free.size(); ++j)
      if (j != k) rest.push_back(free[j]);
    acc.emplace_back(a, b);
    matchings(rest, acc, emit);
    acc.pop_back();
  }
}

} // namespace

std::vector<BrauerDiagram> enumerate_brauer(int bottom, int top) {
  std::vector<BrauerDiagram> out;
  if (bottom < 0 || top < 0 || (bottom + top) % 2 != 0) return out;
  std::vector<int> free(static_cast<std::size_t>(bottom + top));
  std::iota(free.begin(), free.end(), 0);
  std::vector<std::pair<int, int>> acc;
  matchings(free, acc, [&](const std::vector<std::pair<int, int>>& m) {
    std::vector<Edge> edges;
    edges.reserve(m.size());
    for (auto [a, b] : m) edges.emplace_back(unflat(a, bottom), unflat(b, bottom));
    out.emplace_back(bottom, top, std::move(edges));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BrauerDiagram> enumerate_planar(int bottom, int top) {
  auto all = enumerate_brauer(bottom, top);
  std::erase_if(all, [](const BrauerDiagram& d) { return !is_planar(d); });
  return all;
}

std::vector<SignedBrauerDiagram> enumerate_signed(int bottom, int top) {
  std::vector<SignedBrauerDiagram> out;
  for (auto& d : enumerate_brauer(bottom, top)) out.emplace_back(std::move(d));
  return out;
}

std::vector<WalledBrauerDiagram> enumerate_walled(DiagramObject source, DiagramObject target) {
  std::vector<WalledBrauerDiagram> out;
  source.kind = target.kind = ObjectKind::walled;
  for (auto& d : enumerate_brauer(source.size(), target.size())) {
    try {
      out.emplace_back(source, target, std::move(d));
    } catch (const Error&) {
      // color rule fails; not a walled diagram
    }
  }
  return out;
}

std::vector<PartitionDiagram> enumerate_partition(int bottom, int top) {
  std::vector<PartitionDiagram> out;
  if (bottom < 0 || top < 0) return out;
  const int total = bottom + top;
  std::vector<int> label(static_cast<std::size_t>(total), 0);
  // Restricted growth strings.
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (pos == total) {
      std::vector<Block> blocks(static_cast<std::size_t>(used));
      for (int id = 0; id < total; ++id) blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(id)])].push_back(unflat(id, bottom));
      out.emplace_back(bottom, top, std::move(blocks));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      label[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, b == used ? used + 1 : used);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartialInjection> enumerate_partial_maps(int source, int target, MapKind kind) {
  std::vector<PartialInjection> out;
  if (source < 0 || target < 0) return out;
  std::vector<std::pair<int, int>> acc;
  std::vector<char> used(static_cast<std::size_t>(target) + 1, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i > source) {
      out.emplace_back(source, target, acc, kind);
      return;
    }
    if (kind == MapKind::partial_injection) rec(i + 1);
    for (int t = 1; t <= target; ++t) {
      if (kind == MapKind::partial_injection && used[static_cast<std::size_t>(t)]) continue;
      used[static_cast<std::size_t>(t)] = 1;
      acc.emplace_back(i, t);
      rec(i + 1);
      acc.pop_back();
      used[static_cast<std::size_t>(t)] = 0;
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class D>
std::vector<Diagram> to_diagrams(std::vector<D> v) {
  return {std::make_move_iterator(v.begin()), std::make_move_iterator(v.end())};
}

} // namespace

std::vector<Diagram> enumerate_diagrams(Category c, DiagramObject source, DiagramObject target) {
  switch (c) {
  case Category::brauer: return to_diagrams(enumerate_brauer(source.size(), target.size()));
  case Category::temperley_lieb: return to_diagrams(enumerate_planar(source.size(), target.size()));
  case Category::signed_brauer: return to_diagrams(enumerate_signed(source.size(), target.size()));
  case Category::walled_brauer: return to_diagrams(enumerate_walled(source, target));
  case Category::partition:
  case Category::degenerate_partition: return to_diagrams(enumerate_partition(source.size(), target.size()));
  case Category::fi_sharp:
    return to_diagrams(enumerate_partial_maps(source.size(), target.size(), MapKind::partial_injection));
  case Category::fa: return to_diagrams(enumerate_partial_maps(source.size(), target.size(), MapKind::function));
  }
  return {};
}

Diagram identity(Category c, DiagramObject x) {
  switch (c) {
  case Category::brauer:
  case Category::temperley_lieb: return BrauerDiagram::identity(x.size());
  case Category::signed_brauer: return SignedBrauerDiagram(BrauerDiagram::identity(x.size()));
  case Category::walled_brauer:
    x.kind = ObjectKind::walled;
    return WalledBrauerDiagram(x, x, BrauerDiagram::identity(x.size()));
  case Category::partition:
  case Category::degenerate_partition: return PartitionDiagram::identity(x.size());
  case Category::fi_sharp: return PartialInjection::identity(x.size());
  case Category::fa: return PartialInjection::identity(x.size(), MapKind::function);
  }
  return BrauerDiagram();
}

std::vector<Diagram> automorphisms(Category c, DiagramObject x) {
  std::vector<Diagram> out;
  if (c == Category::temperley_lieb) {
    out.push_back(identity(c, x));
    return out;
  }
  const int n = x.size();
  for_each_permutation(n, [&](std::span<const int> perm) {
    switch (c) {
    case Category::brauer: out.emplace_back(BrauerDiagram::permutation(perm)); break;
    case Category::signed_brauer: out.emplace_back(SignedBrauerDiagram(BrauerDiagram::permutation(perm))); break;
    case Category::walled_brauer: {
      bool keeps_colors = true;
      for (int i = 0; i < n; ++i) keeps_colors = keeps_colors && ((i < x.first) == (perm[static_cast<std::size_t>(i)] <= x.first));
      x.kind = ObjectKind::walled;
      if (keeps_colors) out.emplace_back(WalledBrauerDiagram(x, x, BrauerDiagram::permutation(perm)));
      break;
    }
    case Category::partition:
    case Category::degenerate_partition: out.emplace_back(PartitionDiagram::permutation(perm)); break;
    case Category::fi_sharp:
    case Category::fa: {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < n; ++i) pairs.emplace_back(i + 1, perm[static_cast<std::size_t>(i)]);
      out.emplace_back(PartialInjection(n, n, std::move(pairs),
                                        c == Category::fa ? MapKind::function : MapKind::partial_injection));
      break;
    }
    case Category::temperley_lieb: break;
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Transpose

BrauerDiagram transpose(const BrauerDiagram& d) {
  std::vector<Edge> edges;
  for (const auto& e : d.edges()) edges.emplace_back(swap_row(e.first), swap_row(e.second));
  return {d.top(), d.bottom(), std::move(edges)};
}

WalledBrauerDiagram transpose(const WalledBrauerDiagram& d) {
  return {d.target(), d.source(), transpose(d.underlying())};
}

PartitionDiagram transpose(const PartitionDiagram& d) {
  std::vector<Block> blocks;
  for (const auto& b : d.blocks()) {
    Block nb;
    for (Vertex v : b) nb.push_back(swap_row(v));
    blocks.push_back(std::move(nb));
  }
  return {d.top(), d.bottom(), std::move(blocks)};
}

PartialInjection transpose(const PartialInjection& d) {
  if (d.kind() == MapKind::function) fail(ErrorCode::unsupported_variant, "FA has no transpose");
  std::vector<std::pair<int, int>> inv;
  for (auto [s, t] : d.pairs()) inv.emplace_back(t, s);
  return {d.target_size(), d.source_size(), std::move(inv)};
}

Diagram transpose(const Diagram& d) {
  return std::visit(overloaded{
                        [](const SignedBrauerDiagram&) -> Diagram {
                          fail(ErrorCode::unsupported_variant, "transpose of signed Brauer diagrams is not supported");
                        },
                        [](const auto& x) -> Diagram { return transpose(x); },
                    },
                    d);
}

// ---------------------------------------------------------------------------
// Disjoint union

namespace {

Vertex shift(Vertex v, int bottom_offset, int top_offset) {
  return {v.row, v.index + (v.row == Row::bottom ? bottom_offset : top_offset)};
}

std::vector<Edge> shifted_edges(const std::vector<Edge>& edges, int bottom_offset, int top_offset) {
  std::vector<Edge> out;
  for (const auto& e : edges) out.emplace_back(shift(e.first, bottom_offset, top_offset), shift(e.second, bottom_offset, top_offset));
  return out;
}

} // namespace

BrauerDiagram disjoint_union(const BrauerDiagram& a, const BrauerDiagram& b) {
  auto edges = a.edges();
  auto more = shifted_edges(b.edges(), a.bottom(), a.top());
  edges.insert(edges.end(), more.begin(), more.end());
  return {a.bottom() + b.bottom(), a.top() + b.top(), std::move(edges)};
}

SignedBrauerDiagram disjoint_union(const SignedBrauerDiagram& a, const SignedBrauerDiagram& b) {
  auto edges = a.oriented_edges();
  auto more = shifted_edges(b.oriented_edges(), a.bottom(), a.top());
  edges.insert(edges.end(), more.begin(), more.end());
  return {a.bottom() + b.bottom(), a.top() + b.top(), std::move(edges)};
}

WalledBrauerDiagram disjoint_union(const WalledBrauerDiagram& a, const WalledBrauerDiagram& b) {
  const auto place = [](const DiagramObject& xa, const DiagramObject& xb, bool from_a, int i) {
    if (from_a) return i <= xa.first ? i : xa.first + xb.first + (i - xa.first);
    return i <= xb.first ? xa.first + i : xa.first + xb.first + xa.second + (i - xb.first);
  };
  const auto remap = [&](const WalledBrauerDiagram& d, bool from_a) {
    std::vector<Edge> out;
    for (const auto& e : d.underlying().edges()) {
      Edge n = e;
      for (Vertex* v : {&n.first, &n.second}) {
        const bool bot = v->row == Row::bottom;
        v->index = bot ? place(a.source(), b.source(), from_a, v->index) : place(a.target(), b.target(), from_a, v->index);
      }
      out.push_back(n);
    }
    return out;
  };
  auto edges = remap(a, true);
  auto more = remap(b, false);
  edges.insert(edges.end(), more.begin(), more.end());
  const auto src = DiagramObject::walled(a.source().first + b.source().first, a.source().second + b.source().second);
  const auto tgt = DiagramObject::walled(a.target().first + b.target().first, a.target().second + b.target().second);
  return {src, tgt, std::move(edges)};
}

PartitionDiagram disjoint_union(const PartitionDiagram& a, const PartitionDiagram& b) {
  auto blocks = a.blocks();
  for (const auto& blk : b.blocks()) {
    Block nb;
    for (Vertex v : blk) nb.push_back(shift(v, a.bottom(), a.top()));
    blocks.push_back(std::move(nb));
  }
  return {a.bottom() + b.bottom(), a.top() + b.top(), std::move(blocks)};
}

PartialInjection disjoint_union(const PartialInjection& a, const PartialInjection& b) {
  if (a.kind() != b.kind()) fail(ErrorCode::variant_mismatch, "cannot juxtapose FA and FI# maps");
  auto pairs = a.pairs();
  for (auto [s, t] : b.pairs()) pairs.emplace_back(s + a.source_size(), t + a.target_size());
  return {a.source_size() + b.source_size(), a.target_size() + b.target_size(), std::move(pairs), a.kind()};
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  if (a.index() != b.index()) fail(ErrorCode::variant_mismatch, "disjoint union of different diagram types");
  return std::visit(
      [&b](const auto& x) -> Diagram {
        using D = std::decay_t<decltype(x)>;
        return disjoint_union(x, std::get<D>(b));
      },
      a);
}

} // namespace diagcat
