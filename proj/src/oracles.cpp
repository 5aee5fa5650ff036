#include "cst/oracles.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cst::oracle {

NaiveIndex::NaiveIndex(const Text& t) : n_(t.size()) {
  symbols_.assign(t.symbols().begin(), t.symbols().end());
  const Index total = n_ + 1;
  table_.assign(static_cast<std::size_t>(total) * static_cast<std::size_t>(total), 0);
  for (Index i = total; i >= 1; --i) {
    for (Index j = total; j >= 1; --j) {
      if (symbols_[i - 1] != symbols_[j - 1]) continue;
      Index next = (i < total && j < total) ? table_[cell(i + 1, j + 1)] : 0;
      table_[cell(i, j)] = 1 + next;
    }
  }
}

Word NaiveIndex::word(Fragment f) const {
  return Word(symbols_.begin() + (f.start - 1), symbols_.begin() + f.end);
}

std::vector<Index> NaiveIndex::occurrences(Fragment f) const {
  std::vector<Index> out;
  for (Index j = 1; j <= n_ + 1; ++j) {
    if (table_[cell(f.start, j)] >= f.length()) out.push_back(j);
  }
  return out;
}

std::vector<Index> NaiveIndex::occurrences(std::span<const Symbol> word) const {
  std::vector<Index> out;
  const Index len = static_cast<Index>(word.size());
  for (Index j = 1; j + len - 1 <= n_ + 1; ++j) {
    bool match = true;
    for (Index k = 0; k < len && match; ++k) match = symbols_[j - 1 + k] == word[k];
    if (match) out.push_back(j);
  }
  return out;
}

Index NaiveIndex::coverage_of(const std::vector<Index>& occ, Index len) const {
  std::vector<char> covered(static_cast<std::size_t>(n_) + 2, 0);
  for (Index j : occ) {
    for (Index k = j; k < j + len && k <= n_; ++k) covered[k] = 1;
  }
  return static_cast<Index>(std::count(covered.begin(), covered.end(), 1));
}

Index NaiveIndex::coverage(Fragment f) const { return coverage_of(occurrences(f), f.length()); }

namespace {

Consecutive classify(const std::vector<Index>& occ, Index len) {
  Consecutive out;
  out.occ = static_cast<Index>(occ.size());
  for (std::size_t k = 1; k < occ.size(); ++k) {
    out.pairs.emplace_back(occ[k - 1], occ[k]);
    if (occ[k] < occ[k - 1] + len) ++out.ov;
  }
  out.nov = out.occ - out.ov;
  return out;
}

std::vector<Pair> within(const std::vector<Pair>& pairs, Index beta) {
  std::vector<Pair> out;
  for (auto [i, j] : pairs) {
    if (j - i <= beta) out.emplace_back(i, j);
  }
  return out;
}

}  // namespace

Consecutive NaiveIndex::consecutive(Fragment f) const { return classify(occurrences(f), f.length()); }

std::vector<Pair> NaiveIndex::ovocc(Fragment f, Index beta) const { return within(consecutive(f).pairs, beta); }

std::vector<Fragment> NaiveIndex::distinct_substrings() const {
  std::vector<Fragment> out;
  for (Index i = 1; i <= n_; ++i) {
    Index seen = 0;
    for (Index j = 1; j < i; ++j) seen = std::max(seen, table_[cell(i, j)]);
    for (Index len = seen + 1; i + len - 1 <= n_; ++len) out.push_back({i, i + len - 1});
  }
  return out;
}

Index naive_coverage(const Text& t, std::span<const Symbol> word) {
  NaiveIndex idx(t);
  auto occ = idx.occurrences(word);
  std::vector<char> covered(static_cast<std::size_t>(t.size()) + 2, 0);
  for (Index j : occ) {
    for (Index k = j; k < j + static_cast<Index>(word.size()) && k <= t.size(); ++k) covered[k] = 1;
  }
  return static_cast<Index>(std::count(covered.begin(), covered.end(), 1));
}

Consecutive naive_consecutive(const Text& t, std::span<const Symbol> word) {
  NaiveIndex idx(t);
  return classify(idx.occurrences(word), static_cast<Index>(word.size()));
}

std::vector<Pair> naive_ovocc(const Text& t, std::span<const Symbol> word, Index beta) {
  return within(naive_consecutive(t, word).pairs, beta);
}

std::vector<Triple> naive_runs(const Text& t) {
  const Index n = t.size();
  auto at = [&](Index pos) { return t.at(pos); };
  std::vector<Triple> out;
  for (Index a = 1; a <= n; ++a) {
    for (Index p = 1; a + 2 * p - 1 <= n; ++p) {
      if (a > 1 && at(a - 1) == at(a - 1 + p)) continue;
      Index b = a + p - 1;
      while (b + 1 <= n && at(b + 1) == at(b + 1 - p)) ++b;
      if (b - a + 1 < 2 * p) continue;
      bool smallest = true;
      for (Index q = 1; q < p && smallest; ++q) {
        bool period = true;
        for (Index k = a; k + q <= b && period; ++k) period = at(k) == at(k + q);
        if (period) smallest = false;
      }
      if (smallest) out.push_back({a, b, p});
    }
  }
  std::sort(out.begin(), out.end(), [](const Triple& x, const Triple& y) {
    return x[0] != y[0] ? x[0] < y[0] : x[2] < y[2];
  });
  return out;
}

std::set<Word> naive_squares(const Text& t) {
  const Index n = t.size();
  std::set<Word> out;
  for (Index i = 1; i <= n; ++i) {
    for (Index d = 1; i + 2 * d - 1 <= n; ++d) {
      bool square = true;
      for (Index k = 0; k < d && square; ++k) square = t.at(i + k) == t.at(i + d + k);
      if (!square) continue;
      Word half;
      for (Index k = 0; k < d; ++k) half.push_back(t.at(i + k));
      out.insert(std::move(half));
    }
  }
  return out;
}

std::vector<Index> naive_all_partial_covers(const Text& t) {
  const Index n = t.size();
  NaiveIndex idx(t);
  constexpr Index kInf = std::numeric_limits<Index>::max();
  std::vector<Index> best(static_cast<std::size_t>(n) + 1, kInf);
  for (Fragment f : idx.distinct_substrings()) {
    Index c = idx.coverage(f);
    best[c] = std::min(best[c], f.length());
  }
  std::vector<Index> lengths(static_cast<std::size_t>(n), kInf);
  Index running = kInf;
  for (Index alpha = n; alpha >= 1; --alpha) {
    running = std::min(running, best[alpha]);
    lengths[alpha - 1] = running;
  }
  return lengths;
}

std::set<Word> naive_shortest_alpha_covers(const Text& t, Index alpha) {
  if (alpha < 1 || alpha > t.size()) throw std::out_of_range("alpha out of range");
  NaiveIndex idx(t);
  const Index shortest = naive_all_partial_covers(t)[alpha - 1];
  std::set<Word> out;
  for (Fragment f : idx.distinct_substrings()) {
    if (f.length() == shortest && idx.coverage(f) >= alpha) out.insert(idx.word(f));
  }
  return out;
}

}  // namespace cst::oracle
