#include "pcp/refined.hpp"

#include <algorithm>
#include <map>

#include "pcp/limits.hpp"
#include "pcp/perm.hpp"
#include "pcp/wpath.hpp"

namespace pcp {

namespace {

void subsets(int n, int k, int from, std::vector<int>& chosen, std::vector<RefinedRow>& out) {
  if (static_cast<int>(chosen.size()) == k) {
    out.push_back({chosen, 0, 0});
    return;
  }
  for (int v = from; v <= n; ++v) {
    chosen.push_back(v);
    subsets(n, k, v + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<RefinedRow> refined_counts(int n, unsigned threads) {
  check_size(n, "refined_counts");
  std::vector<RefinedRow> rows;
  std::vector<int> chosen;
  subsets(2 * n, n, 1, chosen, rows);

  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t r = 0; r < rows.size(); ++r) index.emplace(rows[r].valleys, r);

  std::vector<int> key;
  for_each_A2n(n, [&](const Permutation& p) {
    key = peak_valley_view(p).vals;
    std::sort(key.begin(), key.end());
    ++rows[index.at(key)].permutations;
  });
  for (const Prograph& g : enumerate_prographs(n, threads)) {
    const TraversalLabels labels = depth_left_traversal(g);
    key.clear();
    for (std::size_t node = 0; node < g.kinds().size(); ++node) {
      if (g.kinds()[node] == OperatorKind::Coproduct) key.push_back(labels.op_label[node]);
    }
    std::sort(key.begin(), key.end());
    ++rows[index.at(key)].prographs;
  }
  return rows;
}

}  // namespace pcp
