#pragma once

// Brute-force reference implementations. Deliberately self-contained: nothing
// here depends on the suffix structures they are used to check.

#include <array>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "cst/text.hpp"

namespace cst::oracle {

using Pair = std::pair<Index, Index>;
using Triple = std::array<Index, 3>;  // (a, b, p)
using Word = std::vector<Symbol>;

struct Consecutive {
  std::vector<Pair> pairs;  // all consecutive occurrences, by i
  Index occ = 0;
  Index ov = 0;
  Index nov = 0;
};

// Pairwise longest-common-prefix table of the sentinel-terminated text.
// O(n^2) memory; intended for n up to a few hundred.
class NaiveIndex {
 public:
  explicit NaiveIndex(const Text& t);

  Index size() const { return n_; }
  Index lcp(Index i, Index j) const { return table_[cell(i, j)]; }  // 1-based, i, j in [1..n+1]

  // Occurrence starts of the fragment / word among positions 1..n+1
  // (a word containing the sentinel can only occur as a suffix).
  std::vector<Index> occurrences(Fragment f) const;
  std::vector<Index> occurrences(std::span<const Symbol> word) const;

  // Positions of T[1..n] covered by some occurrence.
  Index coverage(Fragment f) const;
  Consecutive consecutive(Fragment f) const;
  std::vector<Pair> ovocc(Fragment f, Index beta) const;

  // Leftmost occurrence of every distinct non-empty substring of T[1..n].
  std::vector<Fragment> distinct_substrings() const;

  Word word(Fragment f) const;

 private:
  std::size_t cell(Index i, Index j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(j - 1);
  }
  Index coverage_of(const std::vector<Index>& occ, Index len) const;

  std::vector<Symbol> symbols_;
  std::vector<Index> table_;
  Index n_ = 0;
};

Index naive_coverage(const Text& t, std::span<const Symbol> word);
Consecutive naive_consecutive(const Text& t, std::span<const Symbol> word);
std::vector<Pair> naive_ovocc(const Text& t, std::span<const Symbol> word, Index beta);

// Runs sorted by (a, p).
std::vector<Triple> naive_runs(const Text& t);

// Distinct square halves.
std::set<Word> naive_squares(const Text& t);

// lengths[alpha - 1] = length of a shortest substring covering >= alpha positions.
std::vector<Index> naive_all_partial_covers(const Text& t);

// Every shortest alpha-partial cover, as words.
std::set<Word> naive_shortest_alpha_covers(const Text& t, Index alpha);

}  // namespace cst::oracle
