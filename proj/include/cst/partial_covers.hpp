#pragma once

#include <cstdint>
#include <vector>

#include "cst/cover_suffix_tree.hpp"

namespace cst {

// shortest[alpha - 1] is a shortest substring covering at least alpha
// positions of T, as a fragment of T.
struct ShortestTable {
  std::vector<Fragment> shortest;

  Index size() const { return static_cast<Index>(shortest.size()); }
  Fragment at(Index alpha) const { return shortest.at(static_cast<std::size_t>(alpha - 1)); }
};

// A shortest cover is always a branching substring or a suffix of T, so the
// table is seeded with all suffixes, improved with every branching node, and
// closed under "a cover of alpha+1 positions also covers alpha".
ShortestTable all_partial_covers(const CoverSuffixTree& cst);

struct AlphaCover {
  Index node = kNone;  // nearest explicit node at or below the locus
  Index length = 0;
  Fragment witness;
  std::int64_t coverage = 0;
};

// Every distinct shortest alpha-partial cover, ordered by node id. On the edge
// into v the coverage grows by nov(v) per symbol, so each edge contributes at
// most its shortest qualifying length.
std::vector<AlphaCover> shortest_alpha_covers(const CoverSuffixTree& cst, Index alpha);

}  // namespace cst
