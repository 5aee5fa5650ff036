#include <algorithm>
#include <random>

#include "cst/oracles.hpp"
#include "cst/repetitions.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cst;

namespace {

std::vector<oracle::Triple> triples(const std::vector<Run>& runs) {
  std::vector<oracle::Triple> out;
  for (const Run& r : runs) out.push_back({r.a, r.b, r.p});
  return out;
}

bool has_run(const std::vector<Run>& runs, Run r) { return std::find(runs.begin(), runs.end(), r) != runs.end(); }

std::set<oracle::Word> halves(const Text& t, const std::vector<SquareOcc>& squares) {
  std::set<oracle::Word> out;
  for (auto sq : squares) {
    oracle::Word w;
    for (Index k = 0; k < sq.d; ++k) w.push_back(t.at(sq.i + k));
    out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("runs of small texts") {
  CHECK(compute_runs(load_text("aaaa")) == std::vector<Run>{{1, 4, 1}});
  auto r = compute_runs(load_text("abcdeabcdeabcd"));
  CHECK(has_run(r, {1, 14, 5}));
  CHECK(Run{1, 14, 5}.exponent() == doctest::Approx(2.8));
  auto r2 = compute_runs(load_text("ababababab"));
  CHECK(r2 == std::vector<Run>{{1, 10, 2}});
  CHECK(r2[0].exponent() == doctest::Approx(5.0));
  CHECK(compute_runs(load_text("ab")).empty());
  CHECK(compute_runs(load_text("a")).empty());

  auto ex = compute_runs(load_text(testing::kExampleText));
  for (Run expected : {Run{2, 12, 3}, Run{8, 17, 4}, Run{1, 3, 1}, Run{5, 6, 1}, Run{8, 9, 1}, Run{11, 13, 1},
                       Run{15, 18, 1}}) {
    CHECK(has_run(ex, expected));
  }
  CHECK(triples(ex) == oracle::naive_runs(load_text(testing::kExampleText)));
}

TEST_CASE("distinct squares of small texts") {
  auto t = load_text(testing::kExampleText);
  auto squares = enumerate_distinct_squares(t, compute_runs(t));
  std::set<std::string> rendered;
  for (auto sq : squares) rendered.insert(t.render(sq.half()));
  CHECK(rendered == std::set<std::string>{"a", "aa", "aab", "aaba", "aba", "abaa", "baa", "baaa"});
  CHECK(squares.size() == 8);

  auto a4 = load_text("aaaa");
  auto sq4 = enumerate_distinct_squares(a4, compute_runs(a4));
  CHECK(sq4 == std::vector<SquareOcc>{{1, 1}, {1, 2}});
  auto ab = load_text("ab");
  CHECK(enumerate_distinct_squares(ab, compute_runs(ab)).empty());
}

TEST_CASE("runs and squares agree with brute force") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 600; ++iter) {
    int sigma = 1 + iter % 4;
    int n = 1 + static_cast<int>(rng() % 200);
    auto t = load_text(testing::random_string(rng, n, sigma));
    auto runs = compute_runs(t);
    REQUIRE(triples(runs) == oracle::naive_runs(t));
    REQUIRE(static_cast<Index>(runs.size()) <= t.size());
    for (const Run& r : runs) {
      REQUIRE(2 * r.p <= r.length());
      for (Index k = r.a; k + r.p <= r.b; ++k) REQUIRE(t.at(k) == t.at(k + r.p));
      if (r.a > 1) REQUIRE(t.at(r.a - 1) != t.at(r.a - 1 + r.p));
      if (r.b < t.size()) REQUIRE(t.at(r.b + 1) != t.at(r.b + 1 - r.p));
    }

    auto squares = enumerate_distinct_squares(t, runs);
    REQUIRE(static_cast<Index>(squares.size()) <= t.size());
    auto expected = oracle::naive_squares(t);
    REQUIRE(halves(t, squares) == expected);
    REQUIRE(squares.size() == expected.size());
    for (auto sq : squares) {
      REQUIRE(fragment_equal(t, {sq.i, sq.i + sq.d - 1}, {sq.i + sq.d, sq.i + 2 * sq.d - 1}));
      // Leftmost occurrence: no earlier start spells the same square.
      for (Index j = 1; j < sq.i; ++j) {
        REQUIRE_FALSE(fragment_equal(t, {j, j + 2 * sq.d - 1}, {sq.i, sq.i + 2 * sq.d - 1}));
      }
    }
  }
}

TEST_CASE("runs on structured texts") {
  for (std::size_t n : {1u, 2u, 5u, 13u, 34u, 100u, 377u}) {
    auto t = load_text(testing::fibonacci_word(n));
    REQUIRE(triples(compute_runs(t)) == oracle::naive_runs(t));
    REQUIRE(halves(t, enumerate_distinct_squares(t, compute_runs(t))) == oracle::naive_squares(t));
  }
  auto unary = load_text(std::string(300, 'a'));
  CHECK(compute_runs(unary) == std::vector<Run>{{1, 300, 1}});
  CHECK(enumerate_distinct_squares(unary, compute_runs(unary)).size() == 150);
}
