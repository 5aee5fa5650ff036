#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cst {

using Symbol = std::int32_t;
using Index = std::int32_t;

inline constexpr Symbol kSentinel = 0;

// A positioned substring T[start..end], 1-based and inclusive.
struct Fragment {
  Index start = 1;
  Index end = 1;

  Index length() const { return end - start + 1; }
  friend bool operator==(const Fragment&, const Fragment&) = default;
};

// Rank-remapped text with a terminating sentinel.
//
// symbols() has n+1 entries: the ranks of the n input symbols (all in
// [1..sigma], every rank used) followed by the sentinel 0. Rank order follows
// the order of the original symbol values.
class Text {
 public:
  static Text from_bytes(std::string_view raw);
  static Text from_values(std::span<const std::int64_t> raw);

  Index size() const { return n_; }
  Index sigma() const { return static_cast<Index>(alphabet_.size()); }

  std::span<const Symbol> symbols() const { return symbols_; }

  // 1-based access; position n+1 is the sentinel.
  Symbol at(Index pos) const { return symbols_[static_cast<std::size_t>(pos - 1)]; }

  bool valid(Fragment f) const { return 1 <= f.start && f.start <= f.end && f.end <= n_ + 1; }

  // Maps raw pattern bytes to ranks; nullopt when a byte is absent from the text.
  std::optional<std::vector<Symbol>> encode(std::string_view pattern) const;

  std::string render() const;
  std::string render(Fragment f) const;

 private:
  Text() = default;
  void rank(std::span<const std::int64_t> raw);

  std::vector<Symbol> symbols_;
  std::vector<std::int64_t> alphabet_;  // alphabet_[r - 1] is the value with rank r
  Index n_ = 0;
};

Text load_text(std::string_view raw);

// True iff the two fragments spell the same symbols.
bool fragment_equal(const Text& t, Fragment a, Fragment b);

}  // namespace cst
