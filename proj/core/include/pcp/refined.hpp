#pragma once

#include <cstdint>
#include <vector>

namespace pcp {

/// One bipartition of {1..2n}: `valleys` is the V side, sorted.
struct RefinedRow {
  std::vector<int> valleys;
  std::uint64_t permutations = 0;  // A_2n(1234) words with these values at odd positions
  std::uint64_t prographs = 0;     // prographs whose coproducts carry exactly these labels
  friend bool operator==(const RefinedRow&, const RefinedRow&) = default;
};

/// Every n-subset of {1..2n}, lexicographic, including rows where both
/// columns are zero.
std::vector<RefinedRow> refined_counts(int n, unsigned threads = 1);

}  // namespace pcp
