#ifndef DIAGCAT_TEST_ORACLE_TENSOR_HPP
#define DIAGCAT_TEST_ORACLE_TENSOR_HPP

#include <cstdint>
#include <vector>

#include "diagcat/diagram.hpp"

namespace oracle {

// Digits of a basis index, most significant first.
inline std::vector<int> digits(std::int64_t index, int p, int width) {
  std::vector<int> out(static_cast<std::size_t>(width));
  for (int k = width - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = static_cast<int>(index % p);
    index /= p;
  }
  return out;
}

// Matrix entry of a permutation-type diagram (Brauer or partition, standard
// basis): 1 iff the labels are constant along every block.
inline int constant_on_blocks(const std::vector<std::vector<diagcat::Vertex>>& blocks, const std::vector<int>& in,
                              const std::vector<int>& out) {
  for (const auto& b : blocks) {
    auto label = [&](diagcat::Vertex v) {
      const auto& row = v.row == diagcat::Row::bottom ? in : out;
      return row[static_cast<std::size_t>(v.index - 1)];
    };
    for (const auto& v : b)
      if (label(v) != label(b.front())) return 0;
  }
  return 1;
}

} // namespace oracle

#endif
