#include "cst/ovocc_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "cst/cover_suffix_tree.hpp"

namespace cst {

OvOccIndex::OvOccIndex(Text text) : text_(std::move(text)) {
  const Index inf = infinity();
  {
    auto sa = build_suffix_array(text_);
    auto lcp = build_lcp_array(text_, sa);
    LceIndex lce(sa, lcp);
    st_ = build_suffix_tree(text_, sa, lcp, true);
    runs_ = compute_runs(text_, sa, lce);
  }
  slt_ = build_suffix_link_tree(st_);
  const Index m = st_.size();

  // Bottom(R) = T[a..b-p] for runs whose triangle is non-empty.
  std::vector<Index> kept;
  std::vector<WaQuery> queries;
  for (Index k = 0; k < static_cast<Index>(runs_.size()); ++k) {
    const Run& r = runs_[k];
    if (r.length() == 2 * r.p) continue;
    kept.push_back(k);
    queries.push_back({st_.leaf(r.a), r.b - r.p - r.a + 1});
  }
  const auto bottom = batch_weighted_ancestor(st_, queries);

  // Bucket by period, then stably by node: each list ends up sorted by period.
  std::vector<Index> by_period(kept.size());
  {
    std::vector<Index> start(static_cast<std::size_t>(inf) + 1, 0);
    for (Index k : kept) ++start[runs_[k].p];
    for (Index p = 1; p <= inf; ++p) start[p] += start[p - 1];
    for (std::size_t q = kept.size(); q-- > 0;) by_period[--start[runs_[kept[q]].p]] = static_cast<Index>(q);
  }
  bottom_start_.assign(static_cast<std::size_t>(m) + 1, 0);
  for (std::size_t q = 0; q < kept.size(); ++q) {
    const Run& r = runs_[kept[q]];
    if (st_.depth(bottom[q]) != r.b - r.p - r.a + 1) throw std::logic_error("run bottom is not an explicit node");
    ++bottom_start_[bottom[q] + 1];
  }
  for (Index v = 0; v < m; ++v) bottom_start_[v + 1] += bottom_start_[v];
  bottom_runs_.resize(kept.size());
  {
    std::vector<Index> fill(bottom_start_.begin(), bottom_start_.end() - 1);
    for (Index q : by_period) bottom_runs_[fill[bottom[q]]++] = kept[q];
  }

  std::vector<Index> mb(static_cast<std::size_t>(m), inf);
  for (Index w = 0; w < m; ++w) {
    if (bottom_start_[w] < bottom_start_[w + 1]) {
      mb[slt_.preorder.number[w] - 1] = runs_[bottom_runs_[bottom_start_[w]]].p;
    }
  }
  mb_ = RangeMin<Index>(std::move(mb));

  std::vector<Index> ml(static_cast<std::size_t>(m), inf);
  for (Index v = 0; v < m; ++v) {
    const auto p = mb_.query(static_cast<std::size_t>(slt_.preorder.number[v] - 1),
                             static_cast<std::size_t>(slt_.preorder.last[v] - 1))
                       .value;
    if (st_.depth(v) > p) ml[v] = p;
  }
  ml_ = RangeMin<Index>(std::move(ml));
}

std::optional<Index> OvOccIndex::locate(std::span<const Symbol> pattern) const {
  auto locus = cst::locate(st_, text_.symbols(), pattern);
  if (!locus) return std::nullopt;
  return locus->node;
}

std::vector<Occurrence> OvOccIndex::query(std::span<const Symbol> pattern, Index beta, QueryStats* stats) const {
  const Index m = static_cast<Index>(pattern.size());
  if (beta < 1 || beta >= m) throw std::invalid_argument("beta must be smaller than pattern length");
  auto node = locate(pattern);
  if (!node) return {};
  return query_at(*node, m, beta, stats);
}

std::vector<Occurrence> OvOccIndex::query(std::string_view pattern, Index beta, QueryStats* stats) const {
  const Index m = static_cast<Index>(pattern.size());
  if (beta < 1 || beta >= m) throw std::invalid_argument("beta must be smaller than pattern length");
  auto encoded = text_.encode(pattern);
  if (!encoded) return {};
  return query(*encoded, beta, stats);
}

std::vector<Occurrence> OvOccIndex::query(Fragment pattern, Index beta, QueryStats* stats) const {
  if (!text_.valid(pattern) || pattern.end > text_.size()) throw std::out_of_range("fragment out of range");
  const Index m = pattern.length();
  if (beta < 1 || beta >= m) throw std::invalid_argument("beta must be smaller than pattern length");
  return query_at(st_.weighted_ancestor(st_.leaf(pattern.start), m), m, beta, stats);
}

std::vector<Occurrence> OvOccIndex::query_at(Index node, Index length, Index beta, QueryStats* stats) const {
  if (beta < 1 || beta >= length) throw std::invalid_argument("beta must be smaller than pattern length");
  QueryStats local;
  QueryStats& s = stats ? *stats : local;
  std::vector<Occurrence> out;

  // Enumerates positions in [lo..hi] holding a key <= beta; an RMQ on a range
  // whose minimum exceeds beta ends that branch.
  auto enumerate = [&](const RangeMin<Index>& rmq, std::size_t lo, std::size_t hi, auto&& visit) {
    std::vector<std::pair<std::size_t, std::size_t>> work{{lo, hi}};
    while (!work.empty()) {
      auto [l, r] = work.back();
      work.pop_back();
      ++s.rmq_calls;
      const auto best = rmq.query(l, r);
      if (best.value > beta) continue;
      visit(best.index);
      if (best.index < r) work.emplace_back(best.index + 1, r);
      if (best.index > l) work.emplace_back(l, best.index - 1);
    }
  };

  const auto first = static_cast<std::size_t>(node);
  const auto last = static_cast<std::size_t>(st_.subtree_end(node) - 1);
  enumerate(ml_, first, last, [&](std::size_t v_index) {
    const Index v = static_cast<Index>(v_index);
    ++s.lower_nodes;
    const auto lo = static_cast<std::size_t>(slt_.preorder.number[v] - 1);
    const auto hi = static_cast<std::size_t>(slt_.preorder.last[v] - 1);
    enumerate(mb_, lo, hi, [&](std::size_t w_index) {
      const Index w = slt_.order[w_index];
      ++s.bottom_nodes;
      for (Index k : bottoms(w)) {
        const Run& r = runs_[k];
        if (r.p > beta) break;
        const Index i = r.a + st_.depth(w) - st_.depth(v);
        out.emplace_back(i, i + r.p);
      }
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cst
