#include "cst/verify.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cst/oracles.hpp"
#include "cst/ovocc_index.hpp"
#include "cst/partial_covers.hpp"

namespace cst {

namespace {

struct Failed {
  Mismatch m;
};

template <class... Args>
[[noreturn]] void fail(const std::string& suite, const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  throw Failed{{suite, os.str()}};
}

std::string show(const Text& t, Fragment f) {
  std::string s = t.render({f.start, std::min(f.end, t.size())});
  if (f.end > t.size()) s += "$";
  return s;
}

void check_runs(const Text& t, std::span<const Run> runs) {
  std::vector<oracle::Triple> got;
  for (const Run& r : runs) got.push_back({r.a, r.b, r.p});
  auto expected = oracle::naive_runs(t);
  auto by_ap = [](const oracle::Triple& x, const oracle::Triple& y) {
    return std::tie(x[0], x[2], x[1]) < std::tie(y[0], y[2], y[1]);
  };
  std::sort(got.begin(), got.end(), by_ap);
  std::sort(expected.begin(), expected.end(), by_ap);
  if (got != expected) fail("runs", got.size(), " runs reported, ", expected.size(), " expected");
  if (static_cast<Index>(runs.size()) > t.size()) fail("bounds", "more runs than n: ", runs.size());
}

void check_squares(const Text& t, const oracle::NaiveIndex& naive, std::span<const SquareOcc> squares,
                   const std::set<oracle::Word>& expected) {
  std::set<oracle::Word> got;
  for (const SquareOcc& q : squares) {
    if (!fragment_equal(t, {q.i, q.i + q.d - 1}, {q.i + q.d, q.i + 2 * q.d - 1})) {
      fail("squares", "(", q.i, ",", q.d, ") is not a square");
    }
    got.insert(naive.word({q.i, q.i + q.d - 1}));
  }
  if (got.size() != squares.size()) fail("squares", "duplicate square reported");
  if (got != expected) fail("squares", got.size(), " distinct squares reported, ", expected.size(), " expected");
  if (static_cast<Index>(squares.size()) > t.size()) fail("bounds", "more distinct squares than n: ", squares.size());
}

void check_nodes(const Text& t, const oracle::NaiveIndex& naive, const CoverSuffixTree& cst,
                 const std::set<oracle::Word>& halves, CheckStats& stats) {
  const auto& c = cst.tree();
  const auto& tree = c.tree;
  const Index n = t.size();
  if (c.size() > 3 * n + 2) fail("bounds", c.size(), " explicit nodes exceed 3n+2");

  std::set<oracle::Word> seen;
  for (Index v = 1; v < c.size(); ++v) {
    const Fragment f = tree.label(v);
    auto word = naive.word(f);
    if (!seen.insert(word).second) fail("cst", "label ", show(t, f), " appears twice");
    const bool half = halves.count(word) > 0;
    if (!tree.is_leaf(v) && tree.child_count(v) < 2 && !half) fail("cst", "unary node ", show(t, f), " is not a square half");
    if ((c.square_half[v] != 0) != half) fail("cst", "square flag wrong at ", show(t, f));

    auto cons = naive.consecutive(f);
    std::int64_t weighted = 0;
    Index apart = 0;
    for (auto [i, j] : cons.pairs) {
      if (j < i + f.length()) weighted += j - i;
      else ++apart;
    }
    // nov read as one plus the non-overlapping consecutive pairs.
    if (c.nov[v] != apart + 1) fail("cst", "node ", show(t, f), ": nov ", c.nov[v], " but ", apart, " pairs apart");
    const Index cover = naive.coverage(f);
    if (c.occ[v] != cons.occ || c.ov[v] != cons.ov || c.nov[v] != cons.nov || c.cv[v] != cover ||
        c.cv_ov[v] != weighted) {
      fail("cst", "node ", show(t, f), ": (occ,ov,nov,cv) = (", c.occ[v], ",", c.ov[v], ",", c.nov[v], ",", c.cv[v],
           "), expected (", cons.occ, ",", cons.ov, ",", cons.nov, ",", cover, ")");
    }
    ++stats.nodes;
  }
  for (const auto& h : halves) {
    if (!seen.count(h)) fail("cst", "square half of length ", h.size(), " has no explicit node");
  }
}

void check_partial_covers(const Text& t, const oracle::NaiveIndex& naive, const CoverSuffixTree& cst) {
  auto table = all_partial_covers(cst);
  auto expected = oracle::naive_all_partial_covers(t);
  if (table.size() != t.size()) fail("pcov", "table has ", table.size(), " entries");
  for (Index alpha = 1; alpha <= t.size(); ++alpha) {
    const Fragment f = table.at(alpha);
    if (f.length() != expected[alpha - 1]) {
      fail("pcov", "alpha ", alpha, ": length ", f.length(), ", expected ", expected[alpha - 1]);
    }
    if (naive.coverage(f) < alpha) fail("pcov", "alpha ", alpha, ": witness ", show(t, f), " covers too little");
  }
}

void check_ovocc(const Text& t, const oracle::NaiveIndex& naive, const CheckOptions& opt, CheckStats& stats) {
  OvOccIndex index(t);
  const auto& st = index.suffix_tree();
  std::vector<Occurrence> expected;
  for (Fragment f : naive.distinct_substrings()) {
    const Index len = f.length();
    if (len < 2) continue;
    const Index node = st.weighted_ancestor(st.leaf(f.start), len);
    auto pairs = naive.consecutive(f).pairs;
    for (Index beta = 1; beta < len; ++beta) {
      expected.clear();
      for (auto [i, j] : pairs) {
        if (j - i <= beta) expected.emplace_back(i, j);
      }
      QueryStats qs;
      auto got = index.query_at(node, len, beta, &qs);
      if (got != expected) {
        fail("ovocc", "pattern ", show(t, f), " beta ", beta, ": ", got.size(), " pairs, expected ", expected.size());
      }
      const double ratio = static_cast<double>(qs.rmq_calls) / static_cast<double>(got.size() + 1);
      stats.max_rmq_ratio = std::max(stats.max_rmq_ratio, ratio);
      if (qs.rmq_calls > opt.rmq_constant * (got.size() + 1)) {
        fail("ovocc", "pattern ", show(t, f), " beta ", beta, ": ", qs.rmq_calls, " RMQ calls for ", got.size(),
             " pairs");
      }
      ++stats.queries;
      stats.reported += got.size();
      stats.rmq_calls += qs.rmq_calls;
    }
  }
}

}  // namespace

std::optional<Mismatch> check_text(const std::string& raw, const CheckOptions& opt, CheckStats* stats) {
  CheckStats local;
  CheckStats& s = stats ? *stats : local;
  std::string suite = "input";
  try {
    const Text t = load_text(raw);
    oracle::NaiveIndex naive(t);
    const auto halves = oracle::naive_squares(t);
    suite = "cst";
    CoverSuffixTree cst(t, opt.rule);
    check_runs(t, cst.runs());
    check_squares(t, naive, cst.squares(), halves);
    check_nodes(t, naive, cst, halves, s);
    suite = "pcov";
    check_partial_covers(t, naive, cst);
    if (opt.ovocc) {
      suite = "ovocc";
      check_ovocc(t, naive, opt, s);
    }
  } catch (const Failed& f) {
    return f.m;
  } catch (const std::exception& e) {
    return Mismatch{suite, std::string("exception: ") + e.what()};
  }
  return std::nullopt;
}

std::string minimize_failure(const std::string& raw, const CheckOptions& opt) {
  std::string cur = raw;
  auto fails = [&](const std::string& s) { return !s.empty() && check_text(s, opt).has_value(); };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < cur.size();) {
      std::string shorter = cur;
      shorter.erase(k, 1);
      if (fails(shorter)) {
        cur = std::move(shorter);
        changed = true;
      } else {
        ++k;
      }
    }
    std::set<char> letters(cur.begin(), cur.end());
    for (char from : letters) {
      for (char to : letters) {
        if (to >= from) break;
        std::string merged = cur;
        std::replace(merged.begin(), merged.end(), from, to);
        if (fails(merged)) {
          cur = std::move(merged);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return cur;
}

std::vector<Index> verify_sizes(Index max_n) {
  std::vector<Index> sizes;
  for (Index n = 1; n <= std::min<Index>(max_n, 16); ++n) sizes.push_back(n);
  for (Index n = 16; n < max_n;) {
    n = std::min(max_n, n + std::max<Index>(1, n / 4));
    sizes.push_back(n);
  }
  return sizes;
}

std::string random_text(std::mt19937_64& rng, Index n, int sigma) {
  std::uniform_int_distribution<int> pick(0, sigma - 1);
  std::string s(static_cast<std::size_t>(n), 'a');
  for (auto& ch : s) ch = static_cast<char>('a' + pick(rng));
  return s;
}

VerifyReport run_verify(const VerifyConfig& cfg) {
  struct Job {
    Index n;
    std::size_t k;
  };
  std::vector<Job> jobs;
  for (Index n : verify_sizes(cfg.max_n)) {
    for (std::size_t k = 0; k < cfg.iters; ++k) jobs.push_back({n, k});
  }

  VerifyReport report;
  std::mutex lock;
  std::size_t first_job = jobs.size();
  std::string first_text;
  Mismatch first_mismatch;

  auto worker = [&](unsigned id, unsigned count) {
    CheckStats mine;
    std::size_t texts = 0, failures = 0;
    for (std::size_t j = id; j < jobs.size(); j += count) {
      // Each text depends only on (seed, n, k), never on the thread layout.
      std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(jobs[j].n), static_cast<std::uint64_t>(jobs[j].k)};
      std::mt19937_64 rng(seq);
      auto raw = random_text(rng, jobs[j].n, cfg.sigma);
      auto bad = check_text(raw, cfg.check, &mine);
      ++texts;
      if (bad) {
        ++failures;
        std::lock_guard<std::mutex> g(lock);
        if (j < first_job) {
          first_job = j;
          first_text = raw;
          first_mismatch = *bad;
        }
      }
    }
    std::lock_guard<std::mutex> g(lock);
    report.texts += texts;
    report.failures += failures;
    report.stats.nodes += mine.nodes;
    report.stats.queries += mine.queries;
    report.stats.reported += mine.reported;
    report.stats.rmq_calls += mine.rmq_calls;
    report.stats.max_rmq_ratio = std::max(report.stats.max_rmq_ratio, mine.max_rmq_ratio);
  };

  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id, threads);
    for (auto& th : pool) th.join();
  }

  if (first_job < jobs.size()) {
    report.first = VerifyFailure{first_text, minimize_failure(first_text, cfg.check), first_mismatch};
  }
  return report;
}

std::string fibonacci_text(Index n) {
  std::string a = "a", b = "ab";
  while (static_cast<Index>(b.size()) < n) {
    std::string next = b + a;
    a = std::move(b);
    b = std::move(next);
  }
  b.resize(static_cast<std::size_t>(n));
  return b;
}

std::string workload_text(std::string_view family, Index n, std::uint64_t seed, int sigma) {
  if (family == "random") {
    std::mt19937_64 rng(seed);
    return random_text(rng, n, sigma);
  }
  if (family == "unary") return std::string(static_cast<std::size_t>(n), 'a');
  if (family == "fibonacci") return fibonacci_text(n);
  throw std::invalid_argument("unknown family: " + std::string(family));
}

BuildTimings time_build(const std::string& raw, int repeats) {
  BuildTimings best;
  for (int r = 0; r < std::max(1, repeats); ++r) {
    CoverSuffixTree cst(load_text(raw));
    if (r == 0 || cst.timings().total() < best.total()) best = cst.timings();
  }
  return best;
}

}  // namespace cst
