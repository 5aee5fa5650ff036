#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cst/oracles.hpp"
#include "cst/suffix_tree.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cst;

namespace {

std::vector<Index> naive_suffix_order(const Text& t) {
  auto s = t.symbols();
  std::vector<Index> order(s.size());
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](Index x, Index y) {
    return std::lexicographical_compare(s.begin() + (x - 1), s.end(), s.begin() + (y - 1), s.end());
  });
  return order;
}

Index naive_lce(const Text& t, Index i, Index j) {
  Index k = 0;
  const Index total = t.size() + 1;
  while (i + k <= total && j + k <= total && t.at(i + k) == t.at(j + k)) ++k;
  return k;
}

}  // namespace

TEST_CASE("load_text ranks symbols and appends the sentinel") {
  auto t = load_text("aaaa");
  CHECK(t.size() == 4);
  CHECK(t.sigma() == 1);
  CHECK(std::vector<Symbol>(t.symbols().begin(), t.symbols().end()) == std::vector<Symbol>{1, 1, 1, 1, 0});
  auto ab = load_text("ab");
  CHECK(std::vector<Symbol>(ab.symbols().begin(), ab.symbols().end()) == std::vector<Symbol>{1, 2, 0});
  auto ba = load_text("ba");
  CHECK(std::vector<Symbol>(ba.symbols().begin(), ba.symbols().end()) == std::vector<Symbol>{2, 1, 0});
  CHECK_THROWS_WITH_AS(load_text(""), "empty text", std::invalid_argument);
}

TEST_CASE("render inverts load_text") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    auto raw = testing::random_string(rng, 1 + iter, 4);
    CHECK(load_text(raw).render() == raw);
  }
  std::string binary = std::string("a\0b\xff", 4);
  CHECK(load_text(binary).render() == binary);
  std::vector<std::int64_t> values{50, -3, 50, 7};
  auto t = Text::from_values(values);
  CHECK(t.sigma() == 3);
  CHECK(t.at(2) == 1);
  CHECK(t.at(1) == 3);
}

TEST_CASE("fragment_equal") {
  auto t = load_text(testing::kExampleText);
  CHECK(fragment_equal(t, {3, 6}, {9, 12}));
  CHECK(fragment_equal(t, {5, 9}, {5, 9}));
  CHECK_FALSE(fragment_equal(load_text("ab"), {1, 1}, {2, 2}));
  CHECK_THROWS_AS(fragment_equal(t, {0, 2}, {1, 3}), std::out_of_range);
  CHECK_THROWS_AS(fragment_equal(t, {17, 20}, {1, 4}), std::out_of_range);

  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    auto t2 = load_text(testing::random_string(rng, 1 + static_cast<int>(rng() % 64), 2));
    for (Index i = 1; i <= t2.size(); ++i) {
      for (Index j = 1; j <= t2.size(); ++j) {
        Index len = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(t2.size() - std::max(i, j) + 1));
        bool expected = true;
        for (Index k = 0; k < len; ++k) expected = expected && t2.at(i + k) == t2.at(j + k);
        CHECK(fragment_equal(t2, {i, i + len - 1}, {j, j + len - 1}) == expected);
      }
    }
  }
}

TEST_CASE("range minimum matches a linear scan") {
  RangeMin<int> small(std::vector<int>{3, 1, 2});
  CHECK(small.query(0, 2).value == 1);
  CHECK(small.query(0, 2).index == 1);
  CHECK(small.query(2, 2).index == 2);
  CHECK_THROWS_AS(small.query(2, 1), std::out_of_range);
  CHECK_THROWS_AS(small.query(0, 3), std::out_of_range);

  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t n = 1 + rng() % 256;
    std::vector<int> keys(n);
    for (auto& k : keys) k = static_cast<int>(rng() % 6);
    RangeMin<int> rmq(keys);
    for (std::size_t l = 0; l < n; ++l) {
      std::size_t best = l;
      for (std::size_t r = l; r < n; ++r) {
        if (keys[r] < keys[best]) best = r;
        auto got = rmq.query(l, r);
        REQUIRE(got.index == best);
        REQUIRE(got.value == keys[best]);
      }
    }
  }
  std::vector<long> big(5000);
  for (auto& k : big) k = static_cast<long>(rng() % 1000);
  RangeMin<long> rmq(big);
  for (int q = 0; q < 2000; ++q) {
    std::size_t l = rng() % big.size(), r = rng() % big.size();
    if (l > r) std::swap(l, r);
    auto it = std::min_element(big.begin() + static_cast<long>(l), big.begin() + static_cast<long>(r) + 1);
    CHECK(rmq.query(l, r).index == static_cast<std::size_t>(it - big.begin()));
  }
}

TEST_CASE("suffix array and LCP on small texts") {
  auto ab = load_text("ab");
  auto sa = build_suffix_array(ab);
  CHECK(sa.suffix(1) == 3);
  CHECK(sa.suffix(2) == 1);
  CHECK(sa.suffix(3) == 2);
  CHECK(build_lcp_array(ab, sa).lcp == std::vector<Index>{0, 0, 0});

  auto a4 = load_text("aaaa");
  auto sa4 = build_suffix_array(a4);
  for (Index k = 1; k <= 5; ++k) CHECK(sa4.suffix(k) == 6 - k);
  CHECK(build_lcp_array(a4, sa4).lcp == std::vector<Index>{0, 0, 1, 2, 3});
  for (Index k = 1; k <= 5; ++k) CHECK(sa4.rank_of(sa4.suffix(k)) == k);
}

TEST_CASE("suffix array, LCP and LCE agree with brute force") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    int sigma = 1 + iter % 4;
    auto t = load_text(testing::random_string(rng, 1 + static_cast<int>(rng() % 64), sigma));
    auto sa = build_suffix_array(t);
    auto order = naive_suffix_order(t);
    for (Index k = 1; k <= t.size() + 1; ++k) REQUIRE(sa.suffix(k) == order[k - 1]);
    auto lcp = build_lcp_array(t, sa);
    for (Index k = 2; k <= t.size() + 1; ++k) {
      REQUIRE(lcp.lcp[k - 1] == naive_lce(t, sa.suffix(k - 1), sa.suffix(k)));
    }
    LceIndex lce(sa, lcp);
    for (Index i = 1; i <= t.size() + 1; ++i) {
      for (Index j = 1; j <= t.size() + 1; ++j) REQUIRE(lce.lce(i, j) == naive_lce(t, i, j));
    }
  }
  CHECK(build_lce(load_text("aaaa")).lce(1, 2) == 3);
  CHECK(build_lce(load_text("aaaa")).lce(2, 2) == 4);
}

TEST_CASE("suffix tree shape on small texts") {
  auto st = build_suffix_tree(load_text("aaaa"));
  CHECK(st.size() == 9);
  auto ab = build_suffix_tree(load_text("ab"));
  CHECK(ab.size() == 4);
  for (Index v = 1; v < ab.size(); ++v) CHECK(ab.is_leaf(v));

  auto t = load_text("aaaa");
  auto leaf = st.leaf(1);
  Index aa = st.weighted_ancestor(leaf, 2);
  CHECK(st.depth(aa) == 2);
  CHECK(st.weighted_ancestor(aa, 2) == aa);
  Index aaa = st.weighted_ancestor(leaf, 3);
  CHECK(st.suffix_link(aaa) == aa);
  CHECK(st.suffix_link(st.weighted_ancestor(leaf, 1)) == st.root());
  CHECK_THROWS_AS(st.weighted_ancestor(leaf, -1), std::invalid_argument);
}

TEST_CASE("suffix tree agrees with brute force") {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 300; ++iter) {
    int sigma = 1 + iter % 4;
    auto t = load_text(testing::random_string(rng, 1 + static_cast<int>(rng() % 64), sigma));
    oracle::NaiveIndex naive(t);
    auto st = build_suffix_tree(t);
    const Index n = t.size();
    auto s = t.symbols();

    Index leaves = 0;
    for (Index v = 0; v < st.size(); ++v) leaves += st.is_leaf(v) ? 1 : 0;
    REQUIRE(leaves == n + 1);
    REQUIRE(st.size() <= 2 * (n + 1));
    for (Index pos = 1; pos <= n + 1; ++pos) REQUIRE(st.depth(st.leaf(pos)) == n + 2 - pos);

    for (Index v = 1; v < st.size(); ++v) {
      REQUIRE(st.depth(st.parent(v)) < st.depth(v));
      REQUIRE(st.parent(v) < v);
      if (!st.is_leaf(v)) REQUIRE(st.child_count(v) >= 2);
      // Leaves below v are exactly the occurrences of its label.
      auto occ = naive.occurrences(st.label(v));
      std::vector<Index> below;
      for (Index w = v; w < st.subtree_end(v); ++w) {
        if (st.is_leaf(w)) below.push_back(st.repr(w) + 1);
      }
      std::sort(below.begin(), below.end());
      REQUIRE(below == occ);
      // Children are ordered by first symbol and reachable through the index.
      Symbol prev = -1;
      for (Index c = st.first_child(v); c != kNone; c = st.next_sibling(c)) {
        Symbol first = t.at(st.edge(c).start);
        REQUIRE(first > prev);
        prev = first;
        REQUIRE(st.child(v, first, s) == c);
      }
      // Suffix links drop exactly the first symbol.
      Index u = st.suffix_link(v);
      REQUIRE(st.depth(u) == st.depth(v) - 1);
      if (st.depth(u) > 0) {
        REQUIRE(fragment_equal(t, st.label(u), {st.label(v).start + 1, st.label(v).end}));
      }
    }

    std::vector<WaQuery> queries;
    std::vector<Index> expected;
    for (Index v = 0; v < st.size(); ++v) {
      for (Index d = 0; d <= st.depth(v); ++d) {
        Index w = v;
        while (w != st.root() && st.depth(st.parent(w)) >= d) w = st.parent(w);
        REQUIRE(st.weighted_ancestor(v, d) == w);
        queries.push_back({v, d});
        expected.push_back(w);
      }
    }
    REQUIRE(batch_weighted_ancestor(st, queries) == expected);

    auto slt = build_suffix_link_tree(st);
    REQUIRE(slt.parent[st.root()] == kNone);
    for (Index v = 1; v < st.size(); ++v) REQUIRE(st.depth(slt.parent[v]) == st.depth(v) - 1);
    for (Index u = 0; u < st.size(); ++u) {
      for (Index v = 0; v < st.size(); ++v) {
        bool ancestor = false;
        for (Index w = v; w != kNone; w = slt.parent[w]) ancestor = ancestor || w == u;
        REQUIRE(slt.preorder.contains(u, v) == ancestor);
      }
    }
    auto pre = preorder_index(st);
    REQUIRE(pre.number[st.root()] == 1);
    REQUIRE(pre.last[st.root()] == st.size());
    for (Index v = 0; v < st.size(); ++v) {
      if (st.is_leaf(v)) REQUIRE(pre.last[v] == pre.number[v]);
      for (Index w = v; w != kNone; w = w == st.root() ? kNone : st.parent(w)) REQUIRE(pre.contains(w, v));
    }
  }
}
