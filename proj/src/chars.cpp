#include "diagcat/chars.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

#include "diagcat/diagram.hpp"
#include "diagcat/error.hpp"
#include "diagcat/rational.hpp"

namespace diagcat {

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorCode::invalid_argument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorCode::invalid_argument, "partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

IntPartition IntPartition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '[')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "0") return IntPartition();
  std::vector<int> parts;
  while (true) {
    const auto comma = text.find(',');
    std::string_view piece = text.substr(0, comma);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty())
      throw Error(ErrorCode::invalid_argument, "malformed partition '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return IntPartition(std::move(parts));
}

IntPartition IntPartition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(part(0)), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return IntPartition(std::move(out));
}

IntPartition IntPartition::doubled() const {
  std::vector<int> out = parts_;
  for (int& p : out) p *= 2;
  return IntPartition(std::move(out));
}

IntPartition IntPartition::merged(const IntPartition& o) const {
  std::vector<int> out = parts_;
  out.insert(out.end(), o.parts_.begin(), o.parts_.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return IntPartition(std::move(out));
}

bool IntPartition::contains(const IntPartition& o) const {
  if (o.length() > length()) return false;
  for (int i = 0; i < o.length(); ++i)
    if (o.part(i) > part(i)) return false;
  return true;
}

std::string IntPartition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<IntPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::invalid_argument, "value exceeds 64 bits");
  return v.get_si();
}

} // namespace

std::vector<IntPartition> partitions_of(int n) {
  if (n < 0) return {};
  std::vector<IntPartition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw Error(ErrorCode::invalid_argument, "factorial out of 64-bit range");
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::int64_t class_size(const CycleType& mu) {
  // n! / z_mu with z_mu = prod_i i^{m_i} m_i!
  BigInt z = 1;
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  for (const auto& [part, count] : mult)
    for (int c = 1; c <= count; ++c) z *= part * c;
  return to_int64(BigInt(factorial(mu.size())) / z);
}

std::int64_t dim_specht(const IntPartition& lambda) {
  const IntPartition conj = lambda.conjugate();
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.part(i); ++j) hooks *= (lambda.part(i) - j - 1) + (conj.part(j) - i - 1) + 1;
  BigInt n_fact = 1;
  for (int i = 2; i <= lambda.size(); ++i) n_fact *= i;
  return to_int64(n_fact / hooks);
}

namespace {

std::shared_mutex character_mutex;
std::map<std::pair<IntPartition, CycleType>, std::int64_t> character_memo;

// Murnaghan–Nakayama on beta-numbers: removing an r-rim hook moves one bead
// r places down, with sign (-1)^(beads jumped over).
std::int64_t mn(const IntPartition& lambda, const std::vector<int>& cycles, std::size_t from) {
  if (from == cycles.size()) return lambda.empty() ? 1 : 0;
  const int r = cycles[from];
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda.part(i) + len - 1 - i;
  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int nb = b - r;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int jumped = 0;
    for (int x : beta)
      if (x > nb && x < b) ++jumped;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = nb;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int k = 0; k < len; ++k) {
      const int p = moved[static_cast<std::size_t>(k)] - (len - 1 - k);
      if (p > 0) parts.push_back(p);
    }
    const std::int64_t sub = mn(IntPartition(std::move(parts)), cycles, from + 1);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  return total;
}

} // namespace

std::int64_t sym_character(const IntPartition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size())
    throw Error(ErrorCode::size_mismatch, "character of " + lambda.str() + " at cycle type " + mu.str());
  const auto key = std::make_pair(lambda, mu);
  {
    std::shared_lock lock(character_mutex);
    if (auto it = character_memo.find(key); it != character_memo.end()) return it->second;
  }
  const std::int64_t value = mn(lambda, mu.parts(), 0);
  std::unique_lock lock(character_mutex);
  character_memo.emplace(key, value);
  return value;
}

namespace {

std::shared_mutex lr_mutex;
std::map<std::tuple<IntPartition, IntPartition, IntPartition>, std::int64_t> lr_memo;

// Counts semistandard fillings of target/lambda with content mu whose
// reverse reading word (rows top to bottom, each right to left) is a
// lattice word.
struct LrCounter {
  const IntPartition& lambda;
  const IntPartition& mu;
  const IntPartition& target;
  std::vector<std::pair<int, int>> cells;
  std::vector<std::vector<int>> filling;
  std::vector<int> content;

  LrCounter(const IntPartition& l, const IntPartition& m, const IntPartition& t) : lambda(l), mu(m), target(t) {
    filling.resize(static_cast<std::size_t>(t.length()));
    for (int i = 0; i < t.length(); ++i) {
      filling[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(t.part(i)), 0);
      for (int j = t.part(i) - 1; j >= l.part(i); --j) cells.emplace_back(i, j);
    }
    content.assign(static_cast<std::size_t>(m.length()) + 1, 0);
  }

  std::int64_t count(std::size_t k) {
    if (k == cells.size()) return 1;
    const auto [i, j] = cells[k];
    int hi = mu.length();
    if (j + 1 < target.part(i)) hi = std::min(hi, filling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)]);
    int lo = 1;
    if (i > 0 && j >= lambda.part(i - 1))
      lo = filling[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1;
    std::int64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      auto& c = content[static_cast<std::size_t>(v)];
      if (c >= mu.part(v - 1)) continue;
      if (v > 1 && c + 1 > content[static_cast<std::size_t>(v - 1)]) continue;
      ++c;
      filling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      total += count(k + 1);
      --c;
    }
    filling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    return total;
  }
};

} // namespace

std::int64_t lr_coefficient(const IntPartition& lambda, const IntPartition& mu, const IntPartition& target) {
  if (lambda.size() + mu.size() != target.size() || !target.contains(lambda) || !target.contains(mu)) return 0;
  if (mu.empty()) return lambda == target ? 1 : 0;
  if (lambda.empty()) return mu == target ? 1 : 0;
  const auto key = std::make_tuple(lambda, mu, target);
  {
    std::shared_lock lock(lr_mutex);
    if (auto it = lr_memo.find(key); it != lr_memo.end()) return it->second;
  }
  LrCounter counter(lambda, mu, target);
  const std::int64_t value = counter.count(0);
  std::unique_lock lock(lr_mutex);
  lr_memo.emplace(key, value);
  return value;
}

std::int64_t delta_multiplicity(const IntPartition& lambda, const IntPartition& mu) {
  const int diff = mu.size() - lambda.size();
  if (diff < 0 || diff % 2 != 0) return 0;
  std::int64_t total = 0;
  for (const auto& nu : partitions_of(diff / 2)) total += lr_coefficient(lambda, nu.doubled(), mu);
  return total;
}

std::int64_t ptilde_standard_multiplicity(const IntPartition& lambda, const IntPartition& mu) {
  const int diff = lambda.size() - mu.size();
  if (diff < 0 || diff % 2 != 0) return 0;
  std::int64_t total = 0;
  for (const auto& nu : partitions_of(diff / 2)) total += lr_coefficient(mu, nu.doubled(), lambda);
  return total;
}

std::map<CycleType, std::int64_t> hyperoctahedral_cycle_types(int k) {
  if (k < 0 || k > 6) throw Error(ErrorCode::invalid_argument, "hyperoctahedral group too large to enumerate");
  std::map<CycleType, std::int64_t> census;
  std::vector<int> pi(static_cast<std::size_t>(k));
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<int> g(static_cast<std::size_t>(2 * k));
  do {
    for (int flips = 0; flips < (1 << k); ++flips) {
      // Pair i goes to pair pi(i), swapping its two points when bit i is set.
      for (int i = 0; i < k; ++i)
        for (int b = 0; b < 2; ++b)
          g[static_cast<std::size_t>(2 * i + b)] = 2 * pi[static_cast<std::size_t>(i)] + (b ^ ((flips >> i) & 1));
      std::vector<bool> seen(g.size(), false);
      std::vector<int> cycles;
      for (std::size_t s = 0; s < g.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(g[x])) {
          seen[x] = true;
          ++len;
        }
        cycles.push_back(len);
      }
      std::sort(cycles.begin(), cycles.end(), std::greater<>());
      ++census[CycleType(std::move(cycles))];
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return census;
}

std::int64_t induced_delta_multiplicity(const IntPartition& lambda, const IntPartition& mu) {
  const int n = lambda.size(), diff = mu.size() - n;
  if (diff < 0 || diff % 2 != 0) return 0;
  const int k = diff / 2;
  const auto census = hyperoctahedral_cycle_types(k);
  std::int64_t order = 0;
  for (const auto& entry : census) order += entry.second;
  // Frobenius reciprocity: <Res chi^mu, chi^lambda x 1> over S_n x H_k.
  BigInt total = 0;
  for (const auto& rho : partitions_of(n)) {
    const std::int64_t chi = sym_character(lambda, rho);
    if (chi == 0) continue;
    BigInt inner = 0;
    for (const auto& [tau, count] : census) inner += BigInt(count) * BigInt(sym_character(mu, rho.merged(tau)));
    total += BigInt(class_size(rho)) * BigInt(chi) * inner;
  }
  const BigInt denom = BigInt(factorial(n)) * BigInt(order);
  if (total % denom != 0) throw Error(ErrorCode::invalid_argument, "non-integral induced multiplicity");
  return to_int64(total / denom);
}

std::int64_t MultiplicityTable::at(const std::string& module, const IntPartition& weight) const {
  const auto it = entries.find({module, weight});
  return it == entries.end() ? 0 : it->second;
}

MultiplicityTable delta_table(const IntPartition& lambda, int max_weight) {
  MultiplicityTable t;
  const std::string module = "Delta" + lambda.str();
  for (int w = lambda.size(); w <= max_weight; w += 2)
    for (const auto& mu : partitions_of(w))
      if (const auto v = delta_multiplicity(lambda, mu); v != 0) t.entries[{module, mu}] = v;
  return t;
}

MultiplicityTable ptilde_table(const IntPartition& lambda) {
  MultiplicityTable t;
  const std::string module = "Ptilde" + lambda.str();
  for (int w = lambda.size(); w >= 0; w -= 2)
    for (const auto& mu : partitions_of(w))
      if (const auto v = ptilde_standard_multiplicity(lambda, mu); v != 0) t.entries[{module, mu}] = v;
  return t;
}

namespace {

// Number of diagrams in Hom([n],[m]) fixed when the top row is permuted by
// a permutation of the given cycle type.
std::int64_t fixed_diagrams(const std::vector<BrauerDiagram>& diagrams, int m, const CycleType& rho) {
  std::vector<int> sigma(static_cast<std::size_t>(m) + 1);
  int start = 1;
  for (int len : rho.parts()) {
    for (int i = 0; i < len; ++i) sigma[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    start += len;
  }
  auto act = [&](Vertex v) { return v.row == Row::top ? top(sigma[static_cast<std::size_t>(v.index)]) : v; };
  std::int64_t fixed = 0;
  for (const auto& d : diagrams) {
    std::vector<Edge> edges;
    for (const auto& e : d.edges()) edges.emplace_back(act(e.first), act(e.second));
    if (BrauerDiagram(d.bottom(), d.top(), std::move(edges)) == d) ++fixed;
  }
  return fixed;
}

} // namespace

PrincipalReport verify_principal_decomposition(int n, int m) {
  if (n < 0 || m < 0 || (n + m) % 2 != 0 || n + m > 14)
    throw Error(ErrorCode::invalid_argument, "principal decomposition needs n, m >= 0, n + m even and at most 14");
  PrincipalReport report{n, m, true, {}};
  const auto diagrams = enumerate_brauer(n, m);
  const auto classes = partitions_of(m);
  std::vector<std::int64_t> perm_char;
  for (const auto& rho : classes) perm_char.push_back(fixed_diagrams(diagrams, m, rho));
  const std::int64_t group = factorial(m);
  for (const auto& mu : classes) {
    PrincipalRow row{mu, 0, 0};
    BigInt inner = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      inner += BigInt(class_size(classes[c])) * BigInt(perm_char[c]) * BigInt(sym_character(mu, classes[c]));
    row.permutation_side = to_int64(inner / group);
    for (const auto& lambda : partitions_of(n)) {
      std::int64_t sum = 0;
      for (int w = n; w >= 0; w -= 2)
        for (const auto& nu : partitions_of(w))
          if (const auto p = ptilde_standard_multiplicity(lambda, nu); p != 0) sum += p * delta_multiplicity(nu, mu);
      row.formula_side += dim_specht(lambda) * sum;
    }
    if (row.permutation_side != row.formula_side || inner % group != 0) report.pass = false;
    report.rows.push_back(row);
  }
  return report;
}

nlohmann::json to_json(const IntPartition& p) { return p.parts(); }

nlohmann::json to_json(const MultiplicityTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : t.entries)
    entries.push_back({{"module", key.first}, {"weight", to_json(key.second)}, {"multiplicity", value}});
  return {{"entries", entries}};
}

nlohmann::json to_json(const PrincipalReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"weight", to_json(row.mu)},
                    {"permutation_side", row.permutation_side},
                    {"formula_side", row.formula_side}});
  return {{"n", r.n}, {"m", r.m}, {"pass", r.pass}, {"rows", rows}};
}

} // namespace diagcat
