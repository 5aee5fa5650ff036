#include "cst/suffix_tree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace cst {

namespace {

inline std::size_t slot_hash(Index parent, Symbol c, int bits) {
  std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(parent)) << 32) |
                      static_cast<std::uint32_t>(c);
  return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> (64 - bits));
}

}  // namespace

CompactTrie::CompactTrie(std::vector<Index> parent, std::vector<Index> depth, std::vector<Index> repr,
                         std::span<const Symbol> symbols, bool index_children)
    : parent_(std::move(parent)), depth_(std::move(depth)), repr_(std::move(repr)) {
  const Index n = size();
  end_.resize(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) end_[v] = v + 1;
  for (Index v = n - 1; v > 0; --v) {
    Index p = parent_[v];
    if (p < 0 || p >= v) throw std::logic_error("compact trie nodes are not in pre-order");
    end_[p] = std::max(end_[p], end_[v]);
  }

  leaf_of_.assign(symbols.size(), kNone);
  for (Index v = 0; v < n; ++v) {
    if (is_leaf(v) && v != 0) leaf_of_[static_cast<std::size_t>(repr_[v])] = v;
  }

  // Skew-binary jump pointers: jump[v] skips either to the parent or to
  // jump[jump[parent]] when the two previous jumps have equal length.
  std::vector<Index> level(static_cast<std::size_t>(n), 0);
  jump_.assign(static_cast<std::size_t>(n), 0);
  for (Index v = 1; v < n; ++v) {
    Index p = parent_[v];
    level[v] = level[p] + 1;
    Index jp = jump_[p];
    Index jjp = jump_[jp];
    jump_[v] = (level[p] - level[jp] == level[jp] - level[jjp]) ? jjp : p;
  }

  if (index_children) this->index_children(symbols);
}

void CompactTrie::index_children(std::span<const Symbol> symbols) {
  const Index n = size();
  slot_bits_ = std::max(4, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(n) * 2)));
  slots_.assign(std::size_t{1} << slot_bits_, kNone);
  const std::size_t mask = slots_.size() - 1;
  for (Index v = 1; v < n; ++v) {
    std::size_t h = slot_hash(parent_[v], first_symbol(v, symbols), slot_bits_);
    while (slots_[h] != kNone) h = (h + 1) & mask;
    slots_[h] = v;
  }
}

Index CompactTrie::child(Index v, Symbol c, std::span<const Symbol> symbols) const {
  if (slots_.empty()) {
    for (Index u = first_child(v); u != kNone; u = next_sibling(u)) {
      if (first_symbol(u, symbols) == c) return u;
    }
    return kNone;
  }
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t h = slot_hash(v, c, slot_bits_);; h = (h + 1) & mask) {
    Index u = slots_[h];
    if (u == kNone) return kNone;
    if (parent_[u] == v && first_symbol(u, symbols) == c) return u;
  }
}

Index CompactTrie::child_count(Index v) const {
  Index count = 0;
  for (Index u = first_child(v); u != kNone; u = next_sibling(u)) ++count;
  return count;
}

Index CompactTrie::weighted_ancestor(Index x, Index d) const {
  if (d < 0) throw std::invalid_argument("weighted ancestor depth must be non-negative");
  if (d > depth_[x]) throw std::invalid_argument("weighted ancestor depth exceeds node depth");
  if (d == 0) return root();
  while (depth_[parent_[x]] >= d) {
    Index j = jump_[x];
    x = depth_[j] >= d ? j : parent_[x];
  }
  return x;
}

std::vector<Index> batch_weighted_ancestor(const CompactTrie& trie, std::span<const WaQuery> queries) {
  const Index n = trie.size();
  const std::size_t q = queries.size();
  std::vector<Index> start(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& query : queries) {
    if (query.depth < 0 || query.depth > trie.depth(query.node)) {
      throw std::invalid_argument("weighted ancestor query out of range");
    }
    ++start[static_cast<std::size_t>(query.node) + 1];
  }
  for (Index v = 0; v < n; ++v) start[v + 1] += start[v];
  std::vector<Index> by_node(q);
  {
    std::vector<Index> fill(start.begin(), start.end() - 1);
    for (std::size_t k = 0; k < q; ++k) by_node[fill[queries[k].node]++] = static_cast<Index>(k);
  }

  std::vector<Index> answer(q);
  std::vector<Index> path;
  std::vector<Index> path_depth;
  for (Index v = 0; v < n; ++v) {
    if (v > 0) {
      Index p = trie.parent(v);
      while (path.back() != p) {
        path.pop_back();
        path_depth.pop_back();
      }
    }
    path.push_back(v);
    path_depth.push_back(trie.depth(v));
    for (Index k = start[v]; k < start[v + 1]; ++k) {
      const auto& query = queries[static_cast<std::size_t>(by_node[k])];
      auto it = std::lower_bound(path_depth.begin(), path_depth.end(), query.depth);
      answer[static_cast<std::size_t>(by_node[k])] = path[static_cast<std::size_t>(it - path_depth.begin())];
    }
  }
  return answer;
}

SuffixTree build_suffix_tree(const Text& t, const SuffixArray& sa, const LcpArray& lcp, bool index_children) {
  const Index total = t.size() + 1;
  std::vector<Index> parent, depth, repr, left;
  const std::size_t cap = 2 * static_cast<std::size_t>(total);
  parent.reserve(cap);
  depth.reserve(cap);
  repr.reserve(cap);
  left.reserve(cap);
  auto make = [&](Index d, Index r, Index lb, Index p) {
    parent.push_back(p);
    depth.push_back(d);
    repr.push_back(r);
    left.push_back(lb);
    return static_cast<Index>(parent.size() - 1);
  };

  // Nodes are created in suffix-array order; left[v] is the smallest SA rank
  // in v's subtree.
  std::vector<Index> stack{make(0, sa.sa[0], 0, kNone)};
  for (Index k = 0; k < total; ++k) {
    const Index l = k > 0 ? lcp.lcp[k] : 0;
    Index last = kNone;
    while (depth[stack.back()] > l) {
      last = stack.back();
      stack.pop_back();
    }
    if (depth[stack.back()] < l) {
      Index v = make(l, sa.sa[k], left[last], stack.back());
      parent[last] = v;
      stack.push_back(v);
    }
    stack.push_back(make(total - sa.sa[k], sa.sa[k], k, stack.back()));
  }

  // Pre-order is (left boundary ascending, depth ascending). Within one left
  // boundary the nodes were created deepest first, so a stable counting sort
  // over reverse creation order yields it.
  const Index count = static_cast<Index>(parent.size());
  std::vector<Index> bucket(static_cast<std::size_t>(total) + 1, 0);
  for (Index v = 1; v < count; ++v) ++bucket[left[v] + 1];
  for (Index k = 0; k < total; ++k) bucket[k + 1] += bucket[k];
  std::vector<Index> new_id(static_cast<std::size_t>(count));
  new_id[0] = 0;
  for (Index v = count - 1; v > 0; --v) new_id[v] = 1 + bucket[left[v]]++;

  std::vector<Index> p2(static_cast<std::size_t>(count)), d2(p2.size()), r2(p2.size());
  for (Index v = 0; v < count; ++v) {
    Index id = new_id[v];
    p2[id] = v == 0 ? kNone : new_id[parent[v]];
    d2[id] = depth[v];
    r2[id] = repr[v];
  }
  SuffixTree st(std::move(p2), std::move(d2), std::move(r2), t.symbols(), index_children);
  compute_suffix_links(st);
  return st;
}

SuffixTree build_suffix_tree(const Text& t) {
  auto sa = build_suffix_array(t);
  auto lcp = build_lcp_array(t, sa);
  return build_suffix_tree(t, sa, lcp);
}

void compute_suffix_links(CompactTrie& st, bool require_explicit) {
  const Index n = st.size();
  const Index total = n > 0 ? st.depth(st.leaf(1)) : 0;  // n + 1
  std::vector<Index> links(static_cast<std::size_t>(n), kNone);
  std::vector<WaQuery> queries;
  std::vector<Index> asked;
  for (Index v = 1; v < n; ++v) {
    Index next = st.repr(v) + 2;  // 1-based start of the following suffix
    if (st.is_leaf(v)) {
      links[v] = next <= total ? st.leaf(next) : SuffixTree::root();
    } else {
      queries.push_back({st.leaf(next), st.depth(v) - 1});
      asked.push_back(v);
    }
  }
  auto answers = batch_weighted_ancestor(st, queries);
  for (std::size_t k = 0; k < asked.size(); ++k) {
    Index v = asked[k];
    Index w = answers[k];
    if (st.depth(w) != st.depth(v) - 1) {
      if (!require_explicit) continue;
      throw std::logic_error("suffix link target is not explicit at node " + std::to_string(v));
    }
    links[v] = w;
  }
  st.set_suffix_links(std::move(links));
}

SuffixLinkTree build_suffix_link_tree(const SuffixTree& st) {
  if (!st.has_suffix_links()) throw std::logic_error("suffix links are not computed");
  const Index n = st.size();
  SuffixLinkTree out;
  out.parent.resize(static_cast<std::size_t>(n));
  out.parent[0] = kNone;
  for (Index v = 1; v < n; ++v) {
    Index u = st.suffix_link(v);
    if (u == kNone) throw std::logic_error("suffix link unset at node " + std::to_string(v));
    out.parent[v] = u;
  }

  // Every suffix-link edge lowers the string depth by one, so buckets by
  // depth give a top-down order; siblings follow ascending node id.
  Index max_depth = 0;
  for (Index v = 0; v < n; ++v) max_depth = std::max(max_depth, st.depth(v));
  std::vector<Index> start(static_cast<std::size_t>(max_depth) + 2, 0);
  for (Index v = 0; v < n; ++v) ++start[st.depth(v) + 1];
  for (Index d = 0; d <= max_depth; ++d) start[d + 1] += start[d];
  std::vector<Index> by_depth(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) by_depth[start[st.depth(v)]++] = v;

  std::vector<Index> size(static_cast<std::size_t>(n), 1);
  for (Index k = n - 1; k > 0; --k) size[out.parent[by_depth[k]]] += size[by_depth[k]];

  out.preorder.number.assign(static_cast<std::size_t>(n), 0);
  out.preorder.last.assign(static_cast<std::size_t>(n), 0);
  std::vector<Index> free_slot(static_cast<std::size_t>(n), 0);
  for (Index k = 0; k < n; ++k) {
    const Index v = by_depth[k];
    const Index number = v == 0 ? 1 : free_slot[out.parent[v]];
    if (v != 0) free_slot[out.parent[v]] += size[v];
    out.preorder.number[v] = number;
    out.preorder.last[v] = number + size[v] - 1;
    free_slot[v] = number + 1;
  }
  out.order.resize(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) out.order[out.preorder.number[v] - 1] = v;
  return out;
}

PreorderIndex preorder_index(const CompactTrie& trie) {
  PreorderIndex out;
  const Index n = trie.size();
  out.number.resize(static_cast<std::size_t>(n));
  out.last.resize(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) {
    out.number[v] = v + 1;
    out.last[v] = trie.subtree_end(v);
  }
  return out;
}

}  // namespace cst
