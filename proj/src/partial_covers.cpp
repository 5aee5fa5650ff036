#include "cst/partial_covers.hpp"

#include <limits>
#include <stdexcept>

namespace cst {

ShortestTable all_partial_covers(const CoverSuffixTree& cst) {
  const Index n = cst.text().size();
  const auto& c = cst.tree();
  const auto& tree = c.tree;
  ShortestTable table;
  table.shortest.resize(static_cast<std::size_t>(n));
  for (Index i = 1; i <= n; ++i) table.shortest[n - i] = {i, n};

  for (Index v = 1; v < c.size(); ++v) {
    if (!c.is_branching(v)) continue;
    const auto alpha = static_cast<std::size_t>(c.cv[v] - 1);
    if (tree.depth(v) < table.shortest[alpha].length()) table.shortest[alpha] = tree.label(v);
  }
  for (Index alpha = n - 1; alpha >= 1; --alpha) {
    if (table.shortest[alpha].length() < table.shortest[alpha - 1].length()) {
      table.shortest[alpha - 1] = table.shortest[alpha];
    }
  }
  return table;
}

std::vector<AlphaCover> shortest_alpha_covers(const CoverSuffixTree& cst, Index alpha) {
  if (alpha < 1 || alpha > cst.text().size()) throw std::out_of_range("alpha out of range");
  const auto& c = cst.tree();
  const auto& tree = c.tree;
  std::vector<Index> best(static_cast<std::size_t>(c.size()), kNone);
  Index shortest = std::numeric_limits<Index>::max();
  for (Index v = 1; v < c.size(); ++v) {
    if (c.cv[v] < alpha) continue;
    const Index low = tree.depth(tree.parent(v)) + 1;
    const Index full = c.coverage_length(v);
    const auto slack = static_cast<Index>((c.cv[v] - alpha) / c.nov[v]);
    const Index length = std::max(low, full - slack);
    if (length > full) continue;
    best[v] = length;
    shortest = std::min(shortest, length);
  }
  std::vector<AlphaCover> out;
  for (Index v = 1; v < c.size(); ++v) {
    if (best[v] != shortest) continue;
    const Index start = tree.repr(v) + 1;
    out.push_back({v, shortest, {start, start + shortest - 1}, cst.cv_at_depth(v, shortest)});
  }
  return out;
}

}  // namespace cst
