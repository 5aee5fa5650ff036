#include "cst/repetitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace cst {

namespace {

// nsv[i] = smallest j > i with rank[j] < rank[i]; the sentinel suffix has the
// smallest rank, so every i < n finds one.
std::vector<Index> next_smaller_suffix(const std::vector<Index>& rank) {
  const Index total = static_cast<Index>(rank.size());
  std::vector<Index> nsv(rank.size(), total);
  std::vector<Index> stack;
  for (Index i = total - 1; i >= 0; --i) {
    while (!stack.empty() && rank[stack.back()] > rank[i]) stack.pop_back();
    nsv[i] = stack.empty() ? total : stack.back();
    stack.push_back(i);
  }
  return nsv;
}

}  // namespace

std::vector<Run> compute_runs(const Text& t, const SuffixArray& sa, const LceIndex& lce) {
  const Index n = t.size();
  const auto s = t.symbols();
  const Index sigma = t.sigma();

  std::vector<Symbol> reversed(static_cast<std::size_t>(n) + 1, kSentinel);
  for (Index k = 0; k < n; ++k) reversed[k] = s[n - 1 - k];
  LceIndex backward;
  {
    auto rsa = build_suffix_array(reversed, sigma);
    auto rlcp = build_lcp_array(reversed, rsa);
    backward = LceIndex(rsa, rlcp);
  }

  std::vector<Run> runs;
  auto scan = [&](const std::vector<Index>& rank) {
    const auto nsv = next_smaller_suffix(rank);
    for (Index i = 0; i < n; ++i) {
      const Index j = nsv[i];
      const Index p = j - i;
      const Index right = j < n ? lce.lce0(i, j) : 0;
      // Common suffix of T[0..i) and T[0..j), read on the reversed text.
      const Index left = i > 0 ? backward.lce0(n - i, n - j) : 0;
      if (left + right >= p && left < p) runs.push_back({i - left + 1, j + right, p});
    }
  };

  scan(sa.rank);
  {
    std::vector<Symbol> inverted(static_cast<std::size_t>(n) + 1, kSentinel);
    for (Index k = 0; k < n; ++k) inverted[k] = sigma + 1 - s[k];
    scan(build_suffix_array(inverted, sigma).rank);
  }

  std::sort(runs.begin(), runs.end(), [](const Run& x, const Run& y) {
    return x.a != y.a ? x.a < y.a : (x.p != y.p ? x.p < y.p : x.b < y.b);
  });
  runs.erase(std::unique(runs.begin(), runs.end()), runs.end());
  if (static_cast<Index>(runs.size()) > n) throw std::logic_error("more runs than text positions");
  return runs;
}

std::vector<Run> compute_runs(const Text& t) {
  auto sa = build_suffix_array(t);
  auto lcp = build_lcp_array(t, sa);
  LceIndex lce(sa, lcp);
  return compute_runs(t, sa, lce);
}

std::vector<Index> longest_previous_factor(const SuffixArray& sa, const LceIndex& lce) {
  // The best earlier match for suffix i is the nearest suffix in SA order, on
  // either side, that starts before i.
  const Index total = sa.size();
  std::vector<Index> lpf(static_cast<std::size_t>(total), 0);
  std::vector<Index> stack;
  for (Index r = 0; r < total; ++r) {
    const Index i = sa.sa[r];
    while (!stack.empty() && stack.back() > i) stack.pop_back();
    if (!stack.empty()) lpf[i] = lce.lce0(i, stack.back());
    stack.push_back(i);
  }
  stack.clear();
  for (Index r = total - 1; r >= 0; --r) {
    const Index i = sa.sa[r];
    while (!stack.empty() && stack.back() > i) stack.pop_back();
    if (!stack.empty()) lpf[i] = std::max(lpf[i], lce.lce0(i, stack.back()));
    stack.push_back(i);
  }
  return lpf;
}

std::vector<SquareOcc> enumerate_distinct_squares(const Text& t, const SuffixArray& sa, const LceIndex& lce,
                                                  std::span<const Run> runs) {
  const auto lpf = longest_previous_factor(sa, lce);
  std::vector<SquareOcc> squares;
  for (const Run& run : runs) {
    const Index len = run.length();
    for (Index d = run.p; 2 * static_cast<std::int64_t>(d) <= len; d += run.p) {
      const Index last = std::min(run.a + run.p - 1, run.b + 1 - 2 * d);
      for (Index i = run.a; i <= last; ++i) {
        if (lce.lce(i, i + d) < d) throw std::logic_error("run candidate is not a square");
        if (lpf[static_cast<std::size_t>(i - 1)] < 2 * d) squares.push_back({i, d});
      }
    }
  }
  std::sort(squares.begin(), squares.end(),
            [](const SquareOcc& x, const SquareOcc& y) { return x.i != y.i ? x.i < y.i : x.d < y.d; });
  if (static_cast<Index>(squares.size()) > t.size()) {
    throw std::logic_error("more distinct squares than text positions");
  }
  return squares;
}

std::vector<SquareOcc> enumerate_distinct_squares(const Text& t, std::span<const Run> runs) {
  auto sa = build_suffix_array(t);
  auto lcp = build_lcp_array(t, sa);
  LceIndex lce(sa, lcp);
  return enumerate_distinct_squares(t, sa, lce, runs);
}

}  // namespace cst
