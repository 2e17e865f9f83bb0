#ifndef DIAGCAT_TEST_ORACLE_YOUNG_HPP
#define DIAGCAT_TEST_ORACLE_YOUNG_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "diagcat/chars.hpp"

namespace oracle {

// Standard Young tableaux counted by removing the cell holding the largest
// entry, which must be a corner.
inline std::int64_t standard_tableaux(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    --shape[i];
    total += standard_tableaux(shape);
    ++shape[i];
  }
  return total;
}

// c^tau_{lambda,mu} as the multiplicity of chi^lambda x chi^mu in the
// restriction of chi^tau to S_a x S_b.
inline std::int64_t lr_by_restriction(const diagcat::IntPartition& lambda, const diagcat::IntPartition& mu,
                                      const diagcat::IntPartition& tau) {
  using namespace diagcat;
  if (lambda.size() + mu.size() != tau.size()) return 0;
  std::int64_t total = 0;
  for (const auto& rho : partitions_of(lambda.size()))
    for (const auto& sigma : partitions_of(mu.size()))
      total += class_size(rho) * class_size(sigma) * sym_character(lambda, rho) * sym_character(mu, sigma) *
               sym_character(tau, rho.merged(sigma));
  return total / (factorial(lambda.size()) * factorial(mu.size()));
}

// Cycle types of all permutations of {0..2k-1} that map the matching
// {(0,1),(2,3),...} to itself, by filtering the whole symmetric group.
inline std::map<diagcat::CycleType, std::int64_t> matching_stabilizer(int k) {
  std::vector<int> g(static_cast<std::size_t>(2 * k));
  std::iota(g.begin(), g.end(), 0);
  std::map<diagcat::CycleType, std::int64_t> out;
  do {
    bool stabilizes = true;
    for (int i = 0; i < k && stabilizes; ++i)
      stabilizes = g[static_cast<std::size_t>(2 * i)] / 2 == g[static_cast<std::size_t>(2 * i + 1)] / 2;
    if (!stabilizes) continue;
    std::vector<bool> seen(g.size(), false);
    std::vector<int> cycles;
    for (std::size_t s = 0; s < g.size(); ++s) {
      int len = 0;
      for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(g[x])) {
        seen[x] = true;
        ++len;
      }
      if (len > 0) cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end(), std::greater<>());
    ++out[diagcat::CycleType(cycles)];
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

} // namespace oracle

#endif
