#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "diagcat/algebra.hpp"
#include "diagcat/chars.hpp"
#include "diagcat/compose.hpp"
#include "diagcat/error.hpp"
#include "diagcat/linear.hpp"
#include "diagcat/notation.hpp"
#include "diagcat/taut.hpp"

namespace diagcat::cli {

namespace {

using nlohmann::json;

struct OptionSpec {
  std::string name;
  bool takes_value;
  std::string help;
  enum class Check { none, category, count, rational } check = Check::none;
};

struct SubcommandSpec {
  std::string name;
  std::string help;
  std::vector<OptionSpec> options;
  std::string positional_help;
  int min_inputs;
  int max_inputs;
};

const OptionSpec category_opt{"category", true, "diagram category (brauer, temperley_lieb, signed, walled, partition, "
                                                "degenerate_partition, fi_sharp, fa)",
                              OptionSpec::Check::category};
const OptionSpec json_opt{"json", false, "emit JSON"};
const OptionSpec out_opt{"out", true, "also write the JSON document to this file"};
const OptionSpec delta_opt{"delta", true, "specialize the loop parameter to this rational", OptionSpec::Check::rational};

const std::vector<SubcommandSpec>& subcommands() {
  using C = OptionSpec::Check;
  static const std::vector<SubcommandSpec> specs = {
      {"compose",
       "compose two diagrams, BETA after ALPHA",
       {category_opt, delta_opt, json_opt, out_opt},
       "BETA ALPHA",
       2,
       2},
      {"enumerate",
       "list the basis diagrams of Hom(SOURCE, TARGET); walled objects are written n1+n2",
       {category_opt, {"count", false, "print only the number of diagrams"}, json_opt, out_opt},
       "SOURCE TARGET",
       2,
       2},
      {"taut",
       "matrix of a diagram on tensor powers of Q^p",
       {category_opt,
        {"dim", true, "dimension p of the underlying space", C::count},
        {"q", true, "Temperley-Lieb deformation parameter", C::rational},
        json_opt,
        out_opt},
       "DIAGRAM",
       1,
       1},
      {"mult",
       "multiplicities of standard modules",
       {{"delta-of", true, "lambda for m_mu(Delta_lambda)"},
        {"ptilde", true, "lambda for [Ptilde_lambda : Delta_mu]"},
        {"weight", true, "the weight mu"},
        {"max-weight", true, "largest |mu| listed in a Delta table", C::count},
        {"oracle", false, "also report the induced-character value"},
        json_opt,
        out_opt},
       "",
       0,
       0},
      {"char",
       "symmetric group character chi^LAMBDA at cycle type MU, or the whole row",
       {json_opt, out_opt},
       "LAMBDA [MU]",
       1,
       2},
      {"semisimple",
       "trace-form discriminant of End([n]) and semisimplicity at a parameter",
       {category_opt,
        {"n", true, "size of the object", C::count},
        delta_opt,
        {"discriminant", false, "print the discriminant polynomial"},
        json_opt,
        out_opt},
       "",
       0,
       0},
      {"verify",
       "run a verification sweep and print a JSON report",
       {category_opt,
        {"axioms", false, "triangular axioms up to --max-size"},
        {"principal", false, "principal projective decomposition for N M"},
        {"functoriality", false, "tautological functoriality up to --max-size"},
        {"max-size", true, "largest object size", C::count},
        {"dim", true, "dimension for --functoriality", C::count},
        {"q", true, "Temperley-Lieb parameter for --functoriality", C::rational},
        json_opt,
        out_opt},
       "[N M]",
       0,
       2},
      {"factor",
       "factor a diagram as up after down through its middle object",
       {category_opt, json_opt, out_opt},
       "DIAGRAM",
       1,
       1},
  };
  return specs;
}

std::string shell_quote(const std::string& s) {
  const bool plain = !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || std::string_view("-_./,+=:").find(ch) != std::string_view::npos;
  });
  if (plain) return s;
  std::string out = "'";
  for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return out + "'";
}

} // namespace

Command parse_command(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations in diagram categories", "diagcat"};
  app.require_subcommand(1);
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> flags;
  std::map<std::string, std::vector<std::string>> inputs;
  std::map<std::string, std::vector<std::pair<std::string, CLI::Option*>>> handles;

  const auto rational_check = CLI::Validator(
      [](std::string& s) {
        try {
          Rational::parse(s);
          return std::string();
        } catch (const std::exception&) {
          return "'" + s + "' is not a rational number";
        }
      },
      "RATIONAL");
  const auto category_check = CLI::Validator(
      [](std::string& s) {
        try {
          parse_category(s);
          return std::string();
        } catch (const std::exception&) {
          return "unknown category '" + s + "'";
        }
      },
      "CATEGORY");

  for (const auto& spec : subcommands()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    for (const auto& o : spec.options) {
      CLI::Option* opt = nullptr;
      if (o.takes_value) {
        opt = sub->add_option("--" + o.name, values[spec.name][o.name], o.help);
        switch (o.check) {
        case OptionSpec::Check::category: opt->check(category_check); break;
        case OptionSpec::Check::count: opt->check(CLI::NonNegativeNumber); break;
        case OptionSpec::Check::rational: opt->check(rational_check); break;
        case OptionSpec::Check::none: break;
        }
      } else {
        opt = sub->add_flag("--" + o.name, flags[spec.name][o.name], o.help);
      }
      handles[spec.name].emplace_back(o.name, opt);
    }
    if (spec.max_inputs > 0) {
      auto* pos = sub->add_option("inputs", inputs[spec.name], spec.positional_help);
      pos->expected(spec.min_inputs, spec.max_inputs);
      if (spec.min_inputs > 0) pos->required();
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::string text = app.help();
    for (auto* sub : app.get_subcommands())
      if (sub->parsed()) text = sub->help();
    throw UsageError{"", 0, text};
  } catch (const CLI::ParseError& e) {
    throw UsageError{e.what(), 2, app.help()};
  }

  Command c;
  for (auto* sub : app.get_subcommands()) {
    c.subcommand = sub->get_name();
    for (const auto& [name, opt] : handles[c.subcommand]) {
      if (opt->count() == 0) continue;
      if (flags[c.subcommand].count(name) != 0)
        c.flags.insert(name);
      else
        c.options[name] = values[c.subcommand][name];
    }
    c.inputs = inputs[c.subcommand];
  }
  return c;
}

std::vector<std::string> canonical_args(const Command& c) {
  std::vector<std::string> out{c.subcommand};
  for (const auto& f : c.flags) out.push_back("--" + f);
  for (const auto& [k, v] : c.options) {
    out.push_back("--" + k);
    out.push_back(v);
  }
  const bool needs_separator = std::any_of(c.inputs.begin(), c.inputs.end(),
                                           [](const std::string& s) { return !s.empty() && s.front() == '-'; });
  if (needs_separator) out.push_back("--");
  out.insert(out.end(), c.inputs.begin(), c.inputs.end());
  return out;
}

std::string to_string(const Command& c) {
  std::string out;
  for (const auto& a : canonical_args(c)) {
    if (!out.empty()) out += ' ';
    out += shell_quote(a);
  }
  return out;
}

namespace {

struct Outcome {
  json document;
  std::string text;
  int exit_code = 0;
};

[[noreturn]] void usage(const std::string& message) { throw UsageError{message, 2, ""}; }

Category category_of(const Command& c, std::optional<Category> fallback = std::nullopt) {
  const auto it = c.options.find("category");
  if (it != c.options.end()) return parse_category(it->second);
  if (fallback) return *fallback;
  usage(c.subcommand + ": --category is required");
}

std::optional<Rational> rational_option(const Command& c, const std::string& name) {
  const auto it = c.options.find(name);
  if (it == c.options.end()) return std::nullopt;
  return Rational::parse(it->second);
}

std::optional<int> int_option(const Command& c, const std::string& name) {
  const auto it = c.options.find(name);
  if (it == c.options.end()) return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(it->second, &used);
    if (used != it->second.size() || v < 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    usage("--" + name + " expects a non-negative integer");
  }
}

int required_int(const Command& c, const std::string& name) {
  const auto v = int_option(c, name);
  if (!v) usage(c.subcommand + ": --" + name + " is required");
  return *v;
}

DiagramObject parse_object(Category c, const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
    }
    if (v < 0 || used != s.size()) usage("malformed object '" + text + "'");
    return v;
  };
  const auto plus = text.find('+');
  if (c == Category::walled_brauer) {
    if (plus == std::string::npos) usage("walled objects are written n1+n2, got '" + text + "'");
    return DiagramObject::walled(number(text.substr(0, plus)), number(text.substr(plus + 1)));
  }
  if (plus != std::string::npos) usage("only walled objects are written n1+n2");
  const int n = number(text);
  return c == Category::temperley_lieb ? DiagramObject::ordered(n) : DiagramObject::plain(n);
}

std::string parenthesized(const Diagram& d) { return "(" + format_diagram(d) + ")"; }

Outcome do_compose(const Command& c) {
  const Category cat = category_of(c);
  const auto beta = parse_diagram(cat, c.inputs[0]);
  const auto alpha = parse_diagram(cat, c.inputs[1]);
  const auto r = compose(cat, beta, alpha);
  const auto delta = rational_option(c, "delta");
  Outcome o;
  std::string coefficient;
  bool zero = r.is_zero;
  if (delta) {
    const Rational value = Rational(r.sign) * pow(*delta, static_cast<unsigned>(r.closed_count));
    zero = zero || value.is_zero();
    coefficient = value.str();
    o.text = zero ? "0" : pow(*delta, static_cast<unsigned>(r.closed_count)).str() + " * " + std::to_string(r.sign) +
                              " * " + parenthesized(r.result);
  } else {
    coefficient = DeltaPoly::monomial(static_cast<unsigned>(r.closed_count), Rational(r.sign)).str();
    o.text = zero ? "0" : "d^" + std::to_string(r.closed_count) + " * " + std::to_string(r.sign) + " * " +
                              parenthesized(r.result);
  }
  o.document = {{"category", category_name(cat)},
                {"closed_count", r.closed_count},
                {"sign", r.sign},
                {"zero", zero},
                {"coefficient", zero ? "0" : coefficient},
                {"result", zero ? json(nullptr) : diagram_to_json(cat, r.result)},
                {"text", o.text}};
  if (delta) o.document["delta"] = delta->str();
  return o;
}

Outcome do_enumerate(const Command& c) {
  const Category cat = category_of(c);
  const auto source = parse_object(cat, c.inputs[0]);
  const auto target = parse_object(cat, c.inputs[1]);
  const auto diagrams = enumerate_diagrams(cat, source, target);
  Outcome o;
  o.document = {{"category", category_name(cat)},
                {"source", to_string(source)},
                {"target", to_string(target)},
                {"count", diagrams.size()}};
  if (c.has("count")) {
    o.text = std::to_string(diagrams.size());
    return o;
  }
  json list = json::array();
  for (const auto& d : diagrams) {
    list.push_back(format_diagram(d));
    if (!o.text.empty()) o.text += '\n';
    o.text += format_diagram(d);
  }
  o.document["diagrams"] = list;
  return o;
}

Outcome do_taut(const Command& c) {
  const Category cat = category_of(c);
  TautContext ctx;
  if (cat == Category::temperley_lieb) {
    const auto q = rational_option(c, "q");
    if (!q) usage("taut: --q is required for temperley_lieb");
    ctx = TautContext::temperley_lieb(*q);
    if (const auto dim = int_option(c, "dim"); dim && *dim != 2) usage("taut: temperley_lieb acts on dimension 2");
  } else {
    ctx.category = cat;
    ctx.dimension = required_int(c, "dim");
  }
  const auto m = taut_matrix(ctx, parse_diagram(cat, c.inputs[0]));
  Outcome o;
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    std::string line;
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row.push_back(m(r, k).str());
      if (k > 0) line += ' ';
      line += m(r, k).str();
    }
    rows.push_back(row);
    if (r > 0) o.text += '\n';
    o.text += line;
  }
  o.document = {{"category", category_name(cat)},
                {"dimension", ctx.dimension},
                {"parameter", ctx.parameter().str()},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", rows}};
  return o;
}

std::string table_text(const MultiplicityTable& t) {
  std::string text;
  for (const auto& [key, v] : t.entries) {
    if (!text.empty()) text += '\n';
    text += key.first + " " + key.second.str() + " " + std::to_string(v);
  }
  return text;
}

Outcome do_mult(const Command& c) {
  const bool delta_mode = c.options.count("delta-of") != 0;
  const bool ptilde_mode = c.options.count("ptilde") != 0;
  if (delta_mode == ptilde_mode) usage("mult: give exactly one of --delta-of and --ptilde");
  const auto lambda = IntPartition::parse(c.options.at(delta_mode ? "delta-of" : "ptilde"));
  const std::string module = (delta_mode ? "Delta" : "Ptilde") + lambda.str();
  Outcome o;
  if (const auto it = c.options.find("weight"); it != c.options.end()) {
    const auto mu = IntPartition::parse(it->second);
    const auto v = delta_mode ? delta_multiplicity(lambda, mu) : ptilde_standard_multiplicity(lambda, mu);
    o.text = std::to_string(v);
    o.document = {{"module", module}, {"weight", to_json(mu)}, {"multiplicity", v}};
    if (c.has("oracle")) {
      if (!delta_mode) usage("mult: --oracle applies to --delta-of");
      const auto oracle = induced_delta_multiplicity(lambda, mu);
      o.document["oracle"] = oracle;
      o.text += "\noracle " + std::to_string(oracle);
      if (oracle != v) o.exit_code = 1;
    }
    return o;
  }
  if (c.has("oracle")) usage("mult: --oracle needs --weight");
  MultiplicityTable t;
  if (delta_mode) {
    const auto max_weight = int_option(c, "max-weight");
    if (!max_weight) usage("mult: --delta-of needs --weight or --max-weight");
    t = delta_table(lambda, *max_weight);
  } else {
    t = ptilde_table(lambda);
  }
  o.text = table_text(t);
  o.document = to_json(t);
  return o;
}

Outcome do_char(const Command& c) {
  const auto lambda = IntPartition::parse(c.inputs[0]);
  Outcome o;
  if (c.inputs.size() == 2) {
    const auto mu = IntPartition::parse(c.inputs[1]);
    const auto v = sym_character(lambda, mu);
    o.text = std::to_string(v);
    o.document = {{"lambda", to_json(lambda)}, {"class", to_json(mu)}, {"value", v}};
    return o;
  }
  json values = json::array();
  for (const auto& mu : partitions_of(lambda.size())) {
    const auto v = sym_character(lambda, mu);
    values.push_back({{"class", to_json(mu)}, {"value", v}});
    if (!o.text.empty()) o.text += '\n';
    o.text += mu.str() + " " + std::to_string(v);
  }
  o.document = {{"lambda", to_json(lambda)}, {"dimension", dim_specht(lambda)}, {"values", values}};
  return o;
}

Outcome do_semisimple(const Command& c) {
  const Category cat = category_of(c, Category::brauer);
  const int n = required_int(c, "n");
  const auto delta = rational_option(c, "delta");
  if (!delta && !c.has("discriminant")) usage("semisimple: give --delta, --discriminant or both");
  Outcome o;
  o.document = {{"category", category_name(cat)}, {"n", n}};
  std::vector<std::string> lines;
  if (c.has("discriminant")) {
    const auto disc = discriminant(cat, n);
    json roots = json::array();
    for (const auto& r : rational_roots(disc)) roots.push_back(r.str());
    o.document["discriminant"] = disc.str();
    o.document["rational_roots"] = roots;
    lines.push_back(disc.str());
  }
  if (delta) {
    const bool s = is_semisimple_at(cat, n, *delta);
    o.document["delta"] = delta->str();
    o.document["semisimple"] = s;
    lines.push_back(s ? "true" : "false");
  }
  for (const auto& l : lines) o.text += (o.text.empty() ? "" : "\n") + l;
  return o;
}

Outcome do_verify(const Command& c) {
  const int modes = static_cast<int>(c.has("axioms")) + c.has("principal") + c.has("functoriality");
  if (modes != 1) usage("verify: give exactly one of --axioms, --principal, --functoriality");
  Outcome o;
  bool pass = false;
  if (c.has("principal")) {
    if (c.inputs.size() != 2) usage("verify --principal needs N M");
    int n = 0, m = 0;
    try {
      n = std::stoi(c.inputs[0]);
      m = std::stoi(c.inputs[1]);
    } catch (const std::exception&) {
      usage("verify --principal needs integers N M");
    }
    const auto r = verify_principal_decomposition(n, m);
    o.document = to_json(r);
    pass = r.pass;
  } else {
    if (!c.inputs.empty()) usage("verify: positional arguments only apply to --principal");
    const Category cat = category_of(c);
    const int max_size = required_int(c, "max-size");
    if (c.has("axioms")) {
      const auto r = check_triangular_axioms(cat, max_size);
      o.document = to_json(r);
      pass = r.pass();
    } else {
      TautContext ctx;
      if (cat == Category::temperley_lieb) {
        const auto q = rational_option(c, "q");
        if (!q) usage("verify --functoriality: --q is required for temperley_lieb");
        ctx = TautContext::temperley_lieb(*q);
      } else {
        ctx.category = cat;
        ctx.dimension = required_int(c, "dim");
      }
      const auto r = verify_taut_functoriality(ctx, max_size);
      o.document = to_json(r);
      o.document["category"] = category_name(cat);
      pass = r.pass;
    }
  }
  o.document["pass"] = pass;
  o.text = o.document.dump(2);
  o.exit_code = pass ? 0 : 1;
  return o;
}

Outcome do_factor(const Command& c) {
  const Category cat = category_of(c);
  const auto f = factorize(cat, parse_diagram(cat, c.inputs[0]));
  Outcome o;
  o.text = "middle: " + to_string(f.middle) + "\ndown: " + format_diagram(f.down) + "\nup: " + format_diagram(f.up);
  o.document = {{"category", category_name(cat)},
                {"middle", to_string(f.middle)},
                {"down", diagram_to_json(cat, f.down)},
                {"up", diagram_to_json(cat, f.up)}};
  return o;
}

json error_document(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

} // namespace

int run(const Command& c, std::ostream& out, std::ostream& err) {
  const bool as_json = c.has("json");
  auto fail = [&](int code, json doc) {
    if (as_json)
      out << doc.dump(2) << '\n';
    else
      err << "error: " << doc["error"]["code"].get<std::string>() << ": " << doc["error"]["message"].get<std::string>()
          << '\n';
    return code;
  };
  Outcome o;
  try {
    if (c.subcommand == "compose") o = do_compose(c);
    else if (c.subcommand == "enumerate") o = do_enumerate(c);
    else if (c.subcommand == "taut") o = do_taut(c);
    else if (c.subcommand == "mult") o = do_mult(c);
    else if (c.subcommand == "char") o = do_char(c);
    else if (c.subcommand == "semisimple") o = do_semisimple(c);
    else if (c.subcommand == "verify") o = do_verify(c);
    else if (c.subcommand == "factor") o = do_factor(c);
    else usage("unknown subcommand '" + c.subcommand + "'");
  } catch (const UsageError& e) {
    return fail(2, error_document("UsageError", e.message));
  } catch (const SyntaxError& e) {
    auto doc = error_document(std::string(error_code_name(e.code())), e.what());
    doc["error"]["position"] = e.position();
    doc["error"]["expected"] = e.expected();
    return fail(1, doc);
  } catch (const Error& e) {
    return fail(1, error_document(std::string(error_code_name(e.code())), e.what()));
  } catch (const std::exception& e) {
    return fail(1, error_document("DomainError", e.what()));
  }
  if (const auto it = c.options.find("out"); it != c.options.end()) {
    std::ofstream file(it->second);
    if (!file) return fail(1, error_document("IoError", "cannot write '" + it->second + "'"));
    file << o.document.dump(2) << '\n';
  }
  if (as_json)
    out << o.document.dump(2) << '\n';
  else if (!o.text.empty())
    out << o.text << '\n';
  return o.exit_code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command c;
  try {
    c = parse_command(args);
  } catch (const UsageError& e) {
    if (e.exit_code == 0) {
      out << e.help;
      return 0;
    }
    err << "error: " << e.message << '\n';
    if (!e.help.empty()) err << e.help;
    return e.exit_code;
  }
  return run(c, out, err);
}

} // namespace diagcat::cli
