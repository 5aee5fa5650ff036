#pragma once

#include <span>
#include <vector>

#include "cst/rmq.hpp"
#include "cst/text.hpp"

namespace cst {

// Suffixes of the sentinel-terminated text in lexicographic order.
// Storage is 0-based: sa[k] is the 0-based start of the k-th smallest suffix.
struct SuffixArray {
  std::vector<Index> sa;
  std::vector<Index> rank;

  Index size() const { return static_cast<Index>(sa.size()); }
  // 1-based views: suffix(k) is the 1-based start of the k-th smallest suffix.
  Index suffix(Index k) const { return sa[static_cast<std::size_t>(k - 1)] + 1; }
  Index rank_of(Index pos) const { return rank[static_cast<std::size_t>(pos - 1)] + 1; }
};

// lcp[k] = LCP of suffixes sa[k-1] and sa[k] for k >= 1; lcp[0] = 0.
struct LcpArray {
  std::vector<Index> lcp;
};

// Induced-sorting suffix array of a sequence whose symbols lie in [0..upper].
// The sequence need not be sentinel terminated.
std::vector<Index> induced_sort(std::span<const Index> s, Index upper);

SuffixArray build_suffix_array(const Text& t);
SuffixArray build_suffix_array(std::span<const Symbol> symbols, Index upper);
LcpArray build_lcp_array(std::span<const Symbol> symbols, const SuffixArray& sa);
LcpArray build_lcp_array(const Text& t, const SuffixArray& sa);

// Longest-common-extension oracle over one sentinel-terminated sequence.
class LceIndex {
 public:
  LceIndex() = default;
  LceIndex(const SuffixArray& sa, const LcpArray& lcp);

  // 0-based suffix starts in [0..size).
  Index lce0(Index i, Index j) const {
    if (i == j) return size_ - i;
    Index ri = rank_[static_cast<std::size_t>(i)];
    Index rj = rank_[static_cast<std::size_t>(j)];
    if (ri > rj) std::swap(ri, rj);
    return lcp_.query(static_cast<std::size_t>(ri) + 1, static_cast<std::size_t>(rj)).value;
  }

  // 1-based positions in [1..n+1].
  Index lce(Index i, Index j) const { return lce0(i - 1, j - 1); }

 private:
  std::vector<Index> rank_;
  RangeMin<Index> lcp_;
  Index size_ = 0;
};

LceIndex build_lce(const Text& t);

}  // namespace cst
