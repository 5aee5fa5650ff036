#pragma once

#include <span>
#include <vector>

#include "cst/suffix_array.hpp"
#include "cst/text.hpp"

namespace cst {

inline constexpr Index kNone = -1;

// Explicit-node numbering of a tree: number[v] is the 1-based pre-order rank
// N(v) and last[v] the largest rank inside v's subtree, so I(v) = [number, last].
struct PreorderIndex {
  std::vector<Index> number;
  std::vector<Index> last;

  bool contains(Index ancestor, Index v) const {
    return number[ancestor] <= number[v] && number[v] <= last[ancestor];
  }
};

// A compact suffix trie of a sentinel-terminated text (the suffix tree, or the
// suffix tree with additional explicit nodes).
//
// Node ids are pre-order ranks with the root at 0 and children visited by
// ascending first edge symbol, so the subtree of v is the id range
// [v, subtree_end(v)) and a reverse id scan is a bottom-up traversal.
class CompactTrie {
 public:
  CompactTrie() = default;

  // parent/depth/repr must already be in pre-order. repr[v] is the 0-based
  // start of some suffix whose leaf lies in v's subtree.
  CompactTrie(std::vector<Index> parent, std::vector<Index> depth, std::vector<Index> repr,
              std::span<const Symbol> symbols, bool index_children);

  Index size() const { return static_cast<Index>(parent_.size()); }
  static constexpr Index root() { return 0; }

  Index parent(Index v) const { return parent_[v]; }
  Index depth(Index v) const { return depth_[v]; }
  Index repr(Index v) const { return repr_[v]; }
  Index subtree_end(Index v) const { return end_[v]; }
  bool is_leaf(Index v) const { return end_[v] == v + 1; }
  bool is_ancestor(Index u, Index v) const { return u <= v && v < end_[u]; }

  Index first_child(Index v) const { return is_leaf(v) ? kNone : v + 1; }
  Index next_sibling(Index c) const {
    Index p = parent_[c];
    return end_[c] < end_[p] ? end_[c] : kNone;
  }
  Index child_count(Index v) const;

  // Leaf of the suffix starting at 1-based position pos (pos in [1..n+1]).
  Index leaf(Index pos) const { return leaf_of_[static_cast<std::size_t>(pos - 1)]; }

  // Label of the edge entering v, and the full string label of v (1-based).
  Fragment edge(Index v) const { return {repr_[v] + depth_[parent_[v]] + 1, repr_[v] + depth_[v]}; }
  Fragment label(Index v) const { return {repr_[v] + 1, repr_[v] + depth_[v]}; }

  // Child of v whose edge starts with symbol c, or kNone. Expected O(1).
  Index child(Index v, Symbol c, std::span<const Symbol> symbols) const;
  bool has_child_index() const { return !slots_.empty(); }

  // Topmost explicit ancestor w of x (x included) with depth(w) >= d.
  // O(log n) via skew-binary jump pointers.
  Index weighted_ancestor(Index x, Index d) const;

  // Suffix links, when computed (kNone for the root or for nodes whose
  // link target is not explicit in this trie).
  bool has_suffix_links() const { return !links_.empty(); }
  Index suffix_link(Index v) const { return links_[v]; }
  void set_suffix_links(std::vector<Index> links) { links_ = std::move(links); }

  std::span<const Index> parents() const { return parent_; }
  std::span<const Index> depths() const { return depth_; }

 private:
  void index_children(std::span<const Symbol> symbols);
  Symbol first_symbol(Index c, std::span<const Symbol> symbols) const {
    return symbols[static_cast<std::size_t>(repr_[c] + depth_[parent_[c]])];
  }

  std::vector<Index> parent_;
  std::vector<Index> depth_;
  std::vector<Index> repr_;
  std::vector<Index> end_;
  std::vector<Index> jump_;
  std::vector<Index> leaf_of_;
  std::vector<Index> links_;
  std::vector<Index> slots_;  // open-addressing table of child ids keyed by (parent, first symbol)
  int slot_bits_ = 0;
};

using SuffixTree = CompactTrie;

struct WaQuery {
  Index node;
  Index depth;
};

// Offline weighted ancestor queries: one pre-order sweep with the current
// root-to-node path on a stack, binary searching depths per query.
std::vector<Index> batch_weighted_ancestor(const CompactTrie& trie, std::span<const WaQuery> queries);

// Suffix tree from the suffix array and LCP array by left-to-right stack
// insertion, with suffix links computed.
SuffixTree build_suffix_tree(const Text& t, const SuffixArray& sa, const LcpArray& lcp, bool index_children = true);
SuffixTree build_suffix_tree(const Text& t);

// Fills suffix links: suf(v) for label cX is the locus of X, found by one
// weighted ancestor query from the leaf of the next suffix. In a trie with
// extra explicit nodes a target may be implicit; it is then left as kNone
// unless require_explicit, in which case that is an error.
void compute_suffix_links(CompactTrie& st, bool require_explicit = true);

// Tree of suffix links ST': parent(v) = suf(v). Siblings are ordered by
// node id.
struct SuffixLinkTree {
  std::vector<Index> parent;
  std::vector<Index> order;  // nodes in pre-order
  PreorderIndex preorder;
};

SuffixLinkTree build_suffix_link_tree(const SuffixTree& st);

// Pre-order numbering of a compact trie (identity on ids, shifted to 1-based).
PreorderIndex preorder_index(const CompactTrie& trie);

}  // namespace cst
