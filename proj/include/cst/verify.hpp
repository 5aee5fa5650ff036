#pragma once

// Oracle-equivalence harness: runs every fast-path result on a text against
// the brute-force oracles.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cst/cover_suffix_tree.hpp"

namespace cst {

struct CheckStats {
  std::size_t nodes = 0;
  std::size_t queries = 0;
  std::size_t reported = 0;
  std::size_t rmq_calls = 0;
  double max_rmq_ratio = 0;  // max over queries of rmq_calls / (output + 1)
};

struct Mismatch {
  std::string suite;
  std::string detail;
};

struct CheckOptions {
  WrapRule rule = WrapRule::exact;
  bool ovocc = true;  // every distinct substring, every beta
  std::size_t rmq_constant = 8;
};

// Empty when every suite agrees. Exceptions thrown by the fast path count as
// a mismatch in the suite that raised them.
std::optional<Mismatch> check_text(const std::string& raw, const CheckOptions& opt = {}, CheckStats* stats = nullptr);

// Greedy shrinking: drops single symbols, then merges symbols, while the
// text still fails.
std::string minimize_failure(const std::string& raw, const CheckOptions& opt = {});

// Sizes exercised by verify for a given bound: every n up to 16, then a
// geometric ladder ending at max_n.
std::vector<Index> verify_sizes(Index max_n);

struct VerifyConfig {
  Index max_n = 50;
  std::size_t iters = 200;
  std::uint64_t seed = 42;
  int sigma = 2;
  unsigned threads = 1;
  CheckOptions check;
};

struct VerifyFailure {
  std::string text;
  std::string minimized;
  Mismatch mismatch;
};

struct VerifyReport {
  std::size_t texts = 0;
  std::size_t failures = 0;
  CheckStats stats;
  std::optional<VerifyFailure> first;
};

// Letters from 'a' on, uniform over the first sigma.
std::string random_text(std::mt19937_64& rng, Index n, int sigma);

VerifyReport run_verify(const VerifyConfig& cfg);

// Benchmark inputs: "random" (sigma letters), "unary", "fibonacci" (prefix of
// the Fibonacci word). Throws std::invalid_argument on other names.
std::string fibonacci_text(Index n);
std::string workload_text(std::string_view family, Index n, std::uint64_t seed = 1, int sigma = 4);

// Timings of the fastest of `repeats` full builds.
BuildTimings time_build(const std::string& raw, int repeats);

}  // namespace cst
