#include <random>
#include <stdexcept>

#include "cst/oracles.hpp"
#include "cst/ovocc_index.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cst;

TEST_CASE("example text queries") {
  OvOccIndex index(load_text(testing::kExampleText));
  using V = std::vector<Occurrence>;
  CHECK(index.query("aa", 1) == V{{1, 2}, {11, 12}, {15, 16}, {16, 17}});
  CHECK(index.query("abaa", 3) == V{{3, 6}, {6, 9}});
  CHECK(index.query("abaa", 1).empty());
  CHECK(index.query("abaa", 2).empty());
  CHECK(index.query("abaa", Index{3}) == index.query(Fragment{3, 6}, 3));
  CHECK(index.query("bb", 1).empty());
  CHECK(index.query("zz", 1).empty());
  CHECK_THROWS_WITH_AS(index.query("aa", 2), "beta must be smaller than pattern length", std::invalid_argument);
  CHECK_THROWS_AS(index.query("aa", 0), std::invalid_argument);
  CHECK_THROWS_AS(index.query(Fragment{17, 20}, 1), std::out_of_range);
}

TEST_CASE("no overlap without a short period") {
  OvOccIndex index(load_text("abab"));
  CHECK(index.query("ab", 1).empty());
  CHECK(index.query("aba", 2).empty());
  CHECK(OvOccIndex(load_text("ababa")).query("aba", 2) == std::vector<Occurrence>{{1, 3}});
}

TEST_CASE("MinLower and Bottoms") {
  OvOccIndex ex(load_text(testing::kExampleText));
  auto aaa = ex.locate(load_text("aaa").symbols().first(3));
  REQUIRE(aaa);
  CHECK(ex.min_lower(*aaa) == 1);

  auto t = ex.text();
  auto loc = ex.locate(t.symbols().subspan(1, 8));  // T[2..9]
  REQUIRE(loc);
  CHECK(ex.suffix_tree().depth(*loc) == 8);
  bool found = false;
  for (Index k : ex.bottoms(*loc)) found = found || ex.runs()[k] == Run{2, 12, 3};
  CHECK(found);

  OvOccIndex unary(load_text("aaaa"));
  auto s = unary.text().symbols();
  auto aa = unary.locate(s.first(2));
  auto a = unary.locate(s.first(1));
  REQUIRE(aa);
  REQUIRE(a);
  CHECK(unary.min_lower(*aa) == 1);
  CHECK(unary.min_lower(*a) == unary.infinity());
}

TEST_CASE("bottom lists are sorted by period") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 100; ++iter) {
    auto t = load_text(testing::random_string(rng, 1 + static_cast<int>(rng() % 150), 1 + iter % 3));
    OvOccIndex index(t);
    const auto& st = index.suffix_tree();
    std::size_t total = 0;
    for (Index v = 0; v < st.size(); ++v) {
      Index prev = 0;
      for (Index k : index.bottoms(v)) {
        const Run& r = index.runs()[k];
        REQUIRE(r.p >= prev);
        prev = r.p;
        REQUIRE(st.depth(v) == r.b - r.p - r.a + 1);
        REQUIRE(fragment_equal(t, st.label(v), {r.a, r.b - r.p}));
        ++total;
      }
    }
    std::size_t expected = 0;
    for (const Run& r : index.runs()) expected += r.length() > 2 * r.p ? 1 : 0;
    REQUIRE(total == expected);
  }
}

TEST_CASE("queries agree with brute force") {
  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 250; ++iter) {
    int n = 1 + static_cast<int>(rng() % 90);
    auto t = load_text(iter % 10 == 0 ? testing::fibonacci_word(n) : testing::random_string(rng, n, 1 + iter % 3));
    OvOccIndex index(t);
    oracle::NaiveIndex naive(t);
    for (Fragment f : naive.distinct_substrings()) {
      const Index len = f.length();
      for (Index beta = 1; beta < len; ++beta) {
        QueryStats stats;
        auto got = index.query(f, beta, &stats);
        REQUIRE(got == naive.ovocc(f, beta));
        REQUIRE(stats.rmq_calls <= 8 * (got.size() + 1));
        auto w = naive.word(f);
        REQUIRE(index.query(std::span<const Symbol>(w), beta) == got);
      }
    }
  }
}
