#pragma once

#include <random>
#include <string>

#include "cst/text.hpp"

namespace cst::testing {

inline std::string random_string(std::mt19937_64& rng, int n, int sigma) {
  std::uniform_int_distribution<int> pick(0, sigma - 1);
  std::string s(static_cast<std::size_t>(n), 'a');
  for (char& c : s) c = static_cast<char>('a' + pick(rng));
  return s;
}

inline std::string fibonacci_word(std::size_t n) {
  std::string a = "a", b = "ab";
  while (b.size() < n) {
    std::string next = b + a;
    a = std::move(b);
    b = std::move(next);
  }
  b.resize(n);
  return b;
}

inline const char* const kExampleText = "aaabaabaabaaabaaaa";

}  // namespace cst::testing
