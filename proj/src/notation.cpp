#include "diagcat/notation.hpp"

#include <cctype>

#include "diagcat/error.hpp"

namespace diagcat {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string edge_text(const Edge& e, char sep) { return "(" + to_string(e.first) + sep + to_string(e.second) + ")"; }

std::string header(int n, int m) { return std::to_string(n) + "->" + std::to_string(m) + ":"; }

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ == text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("'" + std::string(token) + "'");
  }
  int number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("a non-negative integer");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("an integer below 10^6");
    }
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  Vertex vertex() {
    skip();
    Row row;
    if (accept("b"))
      row = Row::bottom;
    else if (accept("t"))
      row = Row::top;
    else
      fail("a vertex 'bK' or 'tK'");
    // No whitespace inside a vertex token.
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("a vertex index");
    return {row, number()};
  }
  [[noreturn]] void fail(const std::string& expected) const { throw SyntaxError(pos_, expected, std::string(text_)); }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// `(v v)` or `(v>v)` repeated.
std::vector<std::pair<Edge, bool>> parse_edges(Cursor& in) {
  std::vector<std::pair<Edge, bool>> out;
  while (in.accept("(")) {
    const Vertex a = in.vertex();
    const bool oriented = in.accept(">");
    const Vertex b = in.vertex();
    in.expect(")");
    out.push_back({{a, b}, oriented});
  }
  return out;
}

std::vector<Edge> plain_edges(const std::vector<std::pair<Edge, bool>>& parsed) {
  std::vector<Edge> out;
  for (const auto& [e, oriented] : parsed) {
    if (oriented) throw Error(ErrorCode::invalid_orientation, "orientation marker '>' only allowed for signed diagrams");
    out.push_back(e);
  }
  return out;
}

std::vector<Edge> signed_edges(const std::vector<std::pair<Edge, bool>>& parsed) {
  std::vector<Edge> out;
  for (const auto& [e, oriented] : parsed) {
    if (oriented != is_horizontal(e))
      throw Error(ErrorCode::invalid_orientation, "edge (" + to_string(e.first) + " " + to_string(e.second) + ") " +
                                                      (oriented ? "is vertical and cannot be oriented"
                                                                : "is horizontal and needs an orientation 'x>y'"));
    out.push_back(e);
  }
  return out;
}

Vertex vertex_from_string(const std::string& s) {
  Cursor in(s);
  const Vertex v = in.vertex();
  if (!in.at_end()) in.fail("end of vertex");
  return v;
}

} // namespace

std::string format_diagram(const Diagram& d) {
  return std::visit(
      overloaded{
          [](const BrauerDiagram& b) {
            std::string s = header(b.bottom(), b.top());
            for (const auto& e : b.edges()) s += edge_text(e, ' ');
            return s;
          },
          [](const SignedBrauerDiagram& b) {
            std::string s = header(b.bottom(), b.top());
            for (const auto& e : b.oriented_edges()) s += edge_text(e, is_horizontal(e) ? '>' : ' ');
            return s;
          },
          [](const WalledBrauerDiagram& b) {
            std::string s = to_string(b.source()) + "->" + to_string(b.target()) + ":";
            for (const auto& e : b.underlying().edges()) s += edge_text(e, ' ');
            return s;
          },
          [](const PartitionDiagram& b) {
            std::string s = header(b.bottom(), b.top());
            for (const auto& blk : b.blocks()) {
              s += "{";
              for (std::size_t i = 0; i < blk.size(); ++i) s += (i ? " " : "") + to_string(blk[i]);
              s += "}";
            }
            return s;
          },
          [](const PartialInjection& p) {
            std::string s = header(p.source_size(), p.target_size()) + "[";
            bool first = true;
            for (auto [a, b] : p.pairs()) {
              s += (first ? "b" : ", b") + std::to_string(a) + "->t" + std::to_string(b);
              first = false;
            }
            return s + "]";
          },
      },
      d);
}

Diagram parse_diagram(Category c, std::string_view text) {
  Cursor in(text);
  Diagram out;
  if (c == Category::walled_brauer) {
    const int n1 = in.number();
    in.expect("+");
    const int n2 = in.number();
    in.expect("->");
    const int m1 = in.number();
    in.expect("+");
    const int m2 = in.number();
    in.expect(":");
    auto edges = plain_edges(parse_edges(in));
    out = WalledBrauerDiagram(DiagramObject::walled(n1, n2), DiagramObject::walled(m1, m2), std::move(edges));
  } else {
    const int n = in.number();
    in.expect("->");
    const int m = in.number();
    in.expect(":");
    switch (c) {
    case Category::brauer:
    case Category::temperley_lieb: out = BrauerDiagram(n, m, plain_edges(parse_edges(in))); break;
    case Category::signed_brauer: out = SignedBrauerDiagram(n, m, signed_edges(parse_edges(in))); break;
    case Category::partition:
    case Category::degenerate_partition: {
      std::vector<Block> blocks;
      while (in.accept("{")) {
        Block b;
        while (in.peek() != '}') b.push_back(in.vertex());
        in.expect("}");
        blocks.push_back(std::move(b));
      }
      out = PartitionDiagram(n, m, std::move(blocks));
      break;
    }
    case Category::fi_sharp:
    case Category::fa: {
      std::vector<std::pair<int, int>> pairs;
      in.expect("[");
      if (!in.accept("]")) {
        do {
          const Vertex a = in.vertex();
          if (a.row != Row::bottom) in.fail("a source vertex 'bK'");
          in.expect("->");
          const Vertex b = in.vertex();
          if (b.row != Row::top) in.fail("a target vertex 'tK'");
          pairs.emplace_back(a.index, b.index);
        } while (in.accept(","));
        in.expect("]");
      }
      out = PartialInjection(n, m, std::move(pairs), c == Category::fa ? MapKind::function : MapKind::partial_injection);
      break;
    }
    case Category::walled_brauer: break;
    }
  }
  if (!in.at_end()) in.fail("end of input");
  check_category(c, out);
  return out;
}

nlohmann::json diagram_to_json(Category c, const Diagram& d) {
  using nlohmann::json;
  const auto edges_json = [](const std::vector<Edge>& edges) {
    json a = json::array();
    for (const auto& e : edges) a.push_back({to_string(e.first), to_string(e.second)});
    return a;
  };
  json j;
  j["variant"] = std::string(category_name(c));
  std::visit(overloaded{
                 [&](const BrauerDiagram& b) {
                   j["bottom"] = b.bottom();
                   j["top"] = b.top();
                   j["edges"] = edges_json(b.edges());
                 },
                 [&](const SignedBrauerDiagram& b) {
                   j["bottom"] = b.bottom();
                   j["top"] = b.top();
                   j["edges"] = edges_json(b.oriented_edges());
                 },
                 [&](const WalledBrauerDiagram& b) {
                   j["bottom"] = {b.source().first, b.source().second};
                   j["top"] = {b.target().first, b.target().second};
                   j["edges"] = edges_json(b.underlying().edges());
                 },
                 [&](const PartitionDiagram& b) {
                   j["bottom"] = b.bottom();
                   j["top"] = b.top();
                   json blocks = json::array();
                   for (const auto& blk : b.blocks()) {
                     json one = json::array();
                     for (Vertex v : blk) one.push_back(to_string(v));
                     blocks.push_back(std::move(one));
                   }
                   j["blocks"] = std::move(blocks);
                 },
                 [&](const PartialInjection& p) {
                   j["bottom"] = p.source_size();
                   j["top"] = p.target_size();
                   json pairs = json::array();
                   for (auto [a, b] : p.pairs()) pairs.push_back({"b" + std::to_string(a), "t" + std::to_string(b)});
                   j["pairs"] = std::move(pairs);
                 },
             },
             d);
  return j;
}

Diagram diagram_from_json(const nlohmann::json& j) {
  try {
    const Category c = parse_category(j.at("variant").get<std::string>());
    const auto read_edges = [&] {
      std::vector<Edge> edges;
      for (const auto& e : j.at("edges"))
        edges.emplace_back(vertex_from_string(e.at(0).get<std::string>()), vertex_from_string(e.at(1).get<std::string>()));
      return edges;
    };
    Diagram out;
    switch (c) {
    case Category::brauer:
    case Category::temperley_lieb: out = BrauerDiagram(j.at("bottom").get<int>(), j.at("top").get<int>(), read_edges()); break;
    case Category::signed_brauer:
      out = SignedBrauerDiagram(j.at("bottom").get<int>(), j.at("top").get<int>(), read_edges());
      break;
    case Category::walled_brauer: {
      const auto& b = j.at("bottom");
      const auto& t = j.at("top");
      out = WalledBrauerDiagram(DiagramObject::walled(b.at(0).get<int>(), b.at(1).get<int>()),
                                DiagramObject::walled(t.at(0).get<int>(), t.at(1).get<int>()), read_edges());
      break;
    }
    case Category::partition:
    case Category::degenerate_partition: {
      std::vector<Block> blocks;
      for (const auto& blk : j.at("blocks")) {
        Block b;
        for (const auto& v : blk) b.push_back(vertex_from_string(v.get<std::string>()));
        blocks.push_back(std::move(b));
      }
      out = PartitionDiagram(j.at("bottom").get<int>(), j.at("top").get<int>(), std::move(blocks));
      break;
    }
    case Category::fi_sharp:
    case Category::fa: {
      std::vector<std::pair<int, int>> pairs;
      for (const auto& p : j.at("pairs"))
        pairs.emplace_back(vertex_from_string(p.at(0).get<std::string>()).index,
                           vertex_from_string(p.at(1).get<std::string>()).index);
      out = PartialInjection(j.at("bottom").get<int>(), j.at("top").get<int>(), std::move(pairs),
                             c == Category::fa ? MapKind::function : MapKind::partial_injection);
      break;
    }
    }
    check_category(c, out);
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("malformed diagram JSON: ") + e.what());
  }
}

} // namespace diagcat
