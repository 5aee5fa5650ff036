#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cst {

// Static range-minimum structure over a key array.
//
// Linear space: a sparse table over 64-element block minima plus, for every
// position, a bitmask of the in-block minimum stack. Queries are O(1) and
// return the minimum together with the smallest index attaining it.
// Indices are 0-based; ranges are inclusive.
template <class Key>
class RangeMin {
 public:
  struct Result {
    Key value;
    std::size_t index;
  };

  RangeMin() = default;

  explicit RangeMin(std::vector<Key> keys) : keys_(std::move(keys)) {
    const std::size_t n = keys_.size();
    masks_.resize(n);
    const std::size_t blocks = (n + kBlock - 1) / kBlock;
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t lo = b * kBlock;
      const std::size_t hi = std::min(n, lo + kBlock);
      std::uint64_t stack = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        while (stack != 0) {
          std::size_t top = lo + 63 - static_cast<std::size_t>(std::countl_zero(stack));
          if (keys_[top] <= keys_[i]) break;
          stack &= ~(std::uint64_t{1} << (top - lo));
        }
        stack |= std::uint64_t{1} << (i - lo);
        masks_[i] = stack;
      }
    }
    if (blocks == 0) return;
    table_.emplace_back(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      table_[0][b] = in_block(b * kBlock, std::min(n, (b + 1) * kBlock) - 1);
    }
    for (std::size_t k = 1; (std::size_t{1} << k) <= blocks; ++k) {
      const std::size_t span = std::size_t{1} << k;
      std::vector<std::size_t> level(blocks - span + 1);
      for (std::size_t b = 0; b + span <= blocks; ++b) {
        level[b] = better(table_[k - 1][b], table_[k - 1][b + span / 2]);
      }
      table_.push_back(std::move(level));
    }
  }

  std::size_t size() const { return keys_.size(); }
  const Key& operator[](std::size_t i) const { return keys_[i]; }

  Result query(std::size_t l, std::size_t r) const {
    if (l > r || r >= keys_.size()) throw std::out_of_range("empty or invalid RMQ range");
    const std::size_t bl = l / kBlock;
    const std::size_t br = r / kBlock;
    std::size_t best;
    if (bl == br) {
      best = in_block(l, r);
    } else {
      best = in_block(l, (bl + 1) * kBlock - 1);
      if (bl + 1 < br) best = better(best, blocks(bl + 1, br - 1));
      best = better(best, in_block(br * kBlock, r));
    }
    return {keys_[best], best};
  }

 private:
  static constexpr std::size_t kBlock = 64;

  // Prefers the smaller key, then the smaller index.
  std::size_t better(std::size_t a, std::size_t b) const {
    if (keys_[b] < keys_[a] || (keys_[b] == keys_[a] && b < a)) return b;
    return a;
  }

  std::size_t in_block(std::size_t l, std::size_t r) const {
    const std::size_t lo = l - l % kBlock;
    std::uint64_t m = masks_[r] & (~std::uint64_t{0} << (l - lo));
    return lo + static_cast<std::size_t>(std::countr_zero(m));
  }

  std::size_t blocks(std::size_t l, std::size_t r) const {
    const std::size_t k = static_cast<std::size_t>(std::bit_width(r - l + 1)) - 1;
    return better(table_[k][l], table_[k][r + 1 - (std::size_t{1} << k)]);
  }

  std::vector<Key> keys_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<std::size_t>> table_;
};

}  // namespace cst
