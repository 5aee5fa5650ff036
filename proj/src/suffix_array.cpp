#include "cst/suffix_array.hpp"

#include <algorithm>

namespace cst {

// SA-IS: classify suffixes as S/L, sort LMS substrings by induction, name them,
// recurse on the reduced string, and induce the final order.
std::vector<Index> induced_sort(std::span<const Index> s, Index upper) {
  const Index n = static_cast<Index>(s.size());
  if (n == 0) return {};
  if (n == 1) return {0};
  if (n == 2) return s[0] < s[1] ? std::vector<Index>{0, 1} : std::vector<Index>{1, 0};

  std::vector<Index> sa(static_cast<std::size_t>(n));
  std::vector<bool> is_s(static_cast<std::size_t>(n));
  for (Index i = n - 2; i >= 0; --i) {
    is_s[i] = s[i] == s[i + 1] ? is_s[i + 1] : s[i] < s[i + 1];
  }

  // bucket_s[c]: first slot of S-suffixes starting with c;
  // bucket_l[c]: first slot of all suffixes starting with c.
  std::vector<Index> bucket_l(static_cast<std::size_t>(upper) + 2);
  std::vector<Index> bucket_s(static_cast<std::size_t>(upper) + 2);
  for (Index i = 0; i < n; ++i) {
    if (!is_s[i]) {
      ++bucket_s[s[i]];
    } else {
      ++bucket_l[s[i] + 1];
    }
  }
  for (Index c = 0; c <= upper; ++c) {
    bucket_s[c] += bucket_l[c];
    if (c < upper) bucket_l[c + 1] += bucket_s[c];
  }

  std::vector<Index> cursor(static_cast<std::size_t>(upper) + 2);
  auto induce = [&](const std::vector<Index>& lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::copy(bucket_s.begin(), bucket_s.end(), cursor.begin());
    for (Index d : lms) {
      if (d == n) continue;
      sa[cursor[s[d]]++] = d;
    }
    std::copy(bucket_l.begin(), bucket_l.end(), cursor.begin());
    sa[cursor[s[n - 1]]++] = n - 1;
    for (Index i = 0; i < n; ++i) {
      Index v = sa[i];
      if (v >= 1 && !is_s[v - 1]) sa[cursor[s[v - 1]]++] = v - 1;
    }
    std::copy(bucket_l.begin(), bucket_l.end(), cursor.begin());
    for (Index i = n - 1; i >= 0; --i) {
      Index v = sa[i];
      if (v >= 1 && is_s[v - 1]) sa[--cursor[s[v - 1] + 1]] = v - 1;
    }
  };

  std::vector<Index> lms_id(static_cast<std::size_t>(n) + 1, -1);
  std::vector<Index> lms;
  for (Index i = 1; i < n; ++i) {
    if (!is_s[i - 1] && is_s[i]) {
      lms_id[i] = static_cast<Index>(lms.size());
      lms.push_back(i);
    }
  }
  const Index m = static_cast<Index>(lms.size());
  induce(lms);

  if (m > 0) {
    std::vector<Index> sorted_lms;
    sorted_lms.reserve(static_cast<std::size_t>(m));
    for (Index v : sa) {
      if (lms_id[v] != -1) sorted_lms.push_back(v);
    }
    std::vector<Index> reduced(static_cast<std::size_t>(m));
    Index names = 0;
    reduced[lms_id[sorted_lms[0]]] = 0;
    for (Index k = 1; k < m; ++k) {
      Index l = sorted_lms[k - 1];
      Index r = sorted_lms[k];
      Index end_l = lms_id[l] + 1 < m ? lms[lms_id[l] + 1] : n;
      Index end_r = lms_id[r] + 1 < m ? lms[lms_id[r] + 1] : n;
      bool same = true;
      if (end_l - l != end_r - r) {
        same = false;
      } else {
        while (l < end_l && s[l] == s[r]) {
          ++l;
          ++r;
        }
        if (l == n || s[l] != s[r]) same = false;
      }
      if (!same) ++names;
      reduced[lms_id[sorted_lms[k]]] = names;
    }
    auto reduced_sa = induced_sort(reduced, names);
    for (Index k = 0; k < m; ++k) sorted_lms[k] = lms[reduced_sa[k]];
    induce(sorted_lms);
  }
  return sa;
}

SuffixArray build_suffix_array(std::span<const Symbol> symbols, Index upper) {
  SuffixArray out;
  out.sa = induced_sort(symbols, upper);
  out.rank.resize(out.sa.size());
  for (std::size_t k = 0; k < out.sa.size(); ++k) out.rank[out.sa[k]] = static_cast<Index>(k);
  return out;
}

SuffixArray build_suffix_array(const Text& t) { return build_suffix_array(t.symbols(), t.sigma()); }

// Kasai et al.: walk suffixes in text order, reusing lcp - 1 from the previous one.
LcpArray build_lcp_array(std::span<const Symbol> s, const SuffixArray& sa) {
  const Index n = static_cast<Index>(s.size());
  LcpArray out;
  out.lcp.assign(static_cast<std::size_t>(n), 0);
  Index h = 0;
  for (Index i = 0; i < n; ++i) {
    Index r = sa.rank[i];
    if (r == 0) {
      h = 0;
      continue;
    }
    Index j = sa.sa[r - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    out.lcp[r] = h;
    if (h > 0) --h;
  }
  return out;
}

LcpArray build_lcp_array(const Text& t, const SuffixArray& sa) { return build_lcp_array(t.symbols(), sa); }

LceIndex::LceIndex(const SuffixArray& sa, const LcpArray& lcp)
    : rank_(sa.rank), lcp_(lcp.lcp), size_(sa.size()) {}

LceIndex build_lce(const Text& t) {
  auto sa = build_suffix_array(t);
  auto lcp = build_lcp_array(t, sa);
  return LceIndex(sa, lcp);
}

}  // namespace cst
