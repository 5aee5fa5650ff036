#pragma once

#include <span>
#include <vector>

#include "cst/suffix_array.hpp"
#include "cst/text.hpp"

namespace cst {

// A maximal repetition T[a..b] with smallest period p and (b-a+1) >= 2p.
// Positions are 1-based.
struct Run {
  Index a = 0;
  Index b = 0;
  Index p = 0;

  Index length() const { return b - a + 1; }
  double exponent() const { return static_cast<double>(length()) / p; }
  friend bool operator==(const Run&, const Run&) = default;
};

// Occurrence of the square T[i..i+2d) with half length d (i is 1-based).
struct SquareOcc {
  Index i = 0;
  Index d = 0;

  Fragment half() const { return {i, i + d - 1}; }
  friend bool operator==(const SquareOcc&, const SquareOcc&) = default;
};

// All runs, sorted by (a, p).
//
// Lyndon-root method: for both the natural and the inverted symbol order, the
// longest Lyndon word starting at i ends where the next lexicographically
// smaller suffix begins; each such word is extended by forward and backward
// LCE queries and kept when the extension reaches exponent 2.
std::vector<Run> compute_runs(const Text& t);
std::vector<Run> compute_runs(const Text& t, const SuffixArray& sa, const LceIndex& lce);

// One occurrence per distinct square substring: the leftmost one.
//
// Candidates come from the runs: for run (a,b,p) and every k with 2kp <= b-a+1,
// starts i in [a .. min(a+p-1, b+1-2kp)] with half kp. A candidate is the
// leftmost occurrence of its square iff the longest previous factor at i is
// shorter than 2kp. Output is sorted by (i, d).
std::vector<SquareOcc> enumerate_distinct_squares(const Text& t, std::span<const Run> runs);
std::vector<SquareOcc> enumerate_distinct_squares(const Text& t, const SuffixArray& sa, const LceIndex& lce,
                                                  std::span<const Run> runs);

// Longest previous factor: lpf[i] = max over j < i of LCE(i, j), 0-based.
std::vector<Index> longest_previous_factor(const SuffixArray& sa, const LceIndex& lce);

}  // namespace cst
