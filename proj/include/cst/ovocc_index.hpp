#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cst/repetitions.hpp"
#include "cst/rmq.hpp"
#include "cst/suffix_tree.hpp"

namespace cst {

using Occurrence = std::pair<Index, Index>;

struct QueryStats {
  std::size_t rmq_calls = 0;
  std::size_t lower_nodes = 0;   // nodes v with MinLower(v) <= beta
  std::size_t bottom_nodes = 0;  // nodes w with MinBottom(w) <= beta, summed over v
};

// Reports the consecutive occurrences (i, j) of a pattern S with j - i <= beta
// for beta < |S|, in O(|S| + output) time.
//
// Every such pair comes from a run R = (a, b, p) with p <= beta: the locus v
// of T[i..b-p] lies below S in the suffix tree and is a suffix-link-tree
// ancestor of Bottom(R) = T[a..b-p]. Both levels are enumerated by repeated
// range-minimum queries over pre-order arrays: MinLower over the suffix tree,
// MinBottom over the suffix-link tree.
class OvOccIndex {
 public:
  explicit OvOccIndex(Text text);

  const Text& text() const { return text_; }
  const SuffixTree& suffix_tree() const { return st_; }
  const SuffixLinkTree& suffix_link_tree() const { return slt_; }
  std::span<const Run> runs() const { return runs_; }

  Index infinity() const { return text_.size() + 1; }
  Index min_lower(Index v) const { return ml_[static_cast<std::size_t>(v)]; }  // ML in suffix tree pre-order
  Index min_bottom(Index v) const { return mb_[static_cast<std::size_t>(slt_.preorder.number[v] - 1)]; }  // MB in suffix-link tree pre-order
  // Indices into runs() of the runs with Bottom(R) at v, by increasing period.
  std::span<const Index> bottoms(Index v) const {
    return std::span<const Index>(bottom_runs_)
        .subspan(static_cast<std::size_t>(bottom_start_[v]),
                 static_cast<std::size_t>(bottom_start_[v + 1] - bottom_start_[v]));
  }

  // Results are sorted by i. Patterns that do not occur give an empty result.
  // Throws std::invalid_argument unless 1 <= beta < |S|.
  std::vector<Occurrence> query(std::span<const Symbol> pattern, Index beta, QueryStats* stats = nullptr) const;
  std::vector<Occurrence> query(std::string_view pattern, Index beta, QueryStats* stats = nullptr) const;
  std::vector<Occurrence> query(Fragment pattern, Index beta, QueryStats* stats = nullptr) const;
  // Pattern given by its nearest explicit node at or below the locus and its length.
  std::vector<Occurrence> query_at(Index node, Index length, Index beta, QueryStats* stats = nullptr) const;

  std::optional<Index> locate(std::span<const Symbol> pattern) const;

 private:
  Text text_;
  SuffixTree st_;
  SuffixLinkTree slt_;
  std::vector<Run> runs_;
  std::vector<Index> bottom_start_;
  std::vector<Index> bottom_runs_;
  RangeMin<Index> ml_;
  RangeMin<Index> mb_;
};

}  // namespace cst
