#ifndef DIAGCAT_CHARS_HPP
#define DIAGCAT_CHARS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace diagcat {

/// Integer partition, parts weakly decreasing and positive.
class IntPartition {
public:
  IntPartition() = default;
  /// Throws Error{invalid_argument} unless the parts are positive and weakly
  /// decreasing.
  explicit IntPartition(std::vector<int> parts);

  /// Parses "3,1,1". The empty partition is "", "0" or "()".
  static IntPartition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based), or 0 past the end.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  IntPartition conjugate() const;
  /// Every part doubled.
  IntPartition doubled() const;
  /// Multiset union of parts.
  IntPartition merged(const IntPartition& o) const;
  bool contains(const IntPartition& o) const;

  /// "(3,1,1)", or "()" for the empty partition.
  std::string str() const;

  friend auto operator<=>(const IntPartition&, const IntPartition&) = default;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Cycle type of a permutation; its size is the degree of the symmetric group.
using CycleType = IntPartition;

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<IntPartition> partitions_of(int n);

/// Number of permutations of cycle type mu in S_|mu|.
std::int64_t class_size(const CycleType& mu);
std::int64_t factorial(int n);

/// Number of standard Young tableaux of shape lambda.
std::int64_t dim_specht(const IntPartition& lambda);

/// Irreducible character chi^lambda at cycle type mu (Murnaghan–Nakayama).
/// Throws Error{size_mismatch} when |lambda| != |mu|.
std::int64_t sym_character(const IntPartition& lambda, const CycleType& mu);

/// Littlewood–Richardson coefficient c^target_{lambda,mu}; memoized and safe
/// to call concurrently.
std::int64_t lr_coefficient(const IntPartition& lambda, const IntPartition& mu, const IntPartition& target);

/// m_mu(Delta_lambda) = sum over nu of c^mu_{lambda, 2nu}.
std::int64_t delta_multiplicity(const IntPartition& lambda, const IntPartition& mu);

/// [Ptilde_lambda : Delta_mu] = sum over nu of c^lambda_{mu, 2nu}.
std::int64_t ptilde_standard_multiplicity(const IntPartition& lambda, const IntPartition& mu);

/// Cycle-type census of the stabilizer of the matching {(1,2),(3,4),...}
/// in S_2k.
std::map<CycleType, std::int64_t> hyperoctahedral_cycle_types(int k);

/// Multiplicity of Sp_mu in the induction of Sp_lambda (x) trivial from
/// S_n x H_k to S_(n+2k), by character inner product.
std::int64_t induced_delta_multiplicity(const IntPartition& lambda, const IntPartition& mu);

/// Multiplicities of standard modules, keyed by (module symbol, weight).
/// Symbols are "Delta", "Ptilde" or "P" followed by the label in parentheses.
struct MultiplicityTable {
  std::map<std::pair<std::string, IntPartition>, std::int64_t> entries;

  std::int64_t at(const std::string& module, const IntPartition& weight) const;
};

/// Nonzero m_mu(Delta_lambda) for |mu| <= max_weight.
MultiplicityTable delta_table(const IntPartition& lambda, int max_weight);
/// Nonzero [Ptilde_lambda : Delta_mu].
MultiplicityTable ptilde_table(const IntPartition& lambda);

struct PrincipalRow {
  IntPartition mu;
  std::int64_t permutation_side = 0;
  std::int64_t formula_side = 0;
};

struct PrincipalReport {
  int n = 0;
  int m = 0;
  bool pass = false;
  std::vector<PrincipalRow> rows;
};

/// Compares the S_m-decomposition of the Brauer hom space Hom([n],[m]) with
/// the multiplicities predicted by the standard filtration of the principal
/// projective at [n]. Throws Error{invalid_argument} when n + m is odd,
/// either is negative, or n + m > 14.
PrincipalReport verify_principal_decomposition(int n, int m);

nlohmann::json to_json(const IntPartition& p);
nlohmann::json to_json(const MultiplicityTable& t);
nlohmann::json to_json(const PrincipalReport& r);

} // namespace diagcat

#endif // DIAGCAT_CHARS_HPP
