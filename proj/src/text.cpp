#include "cst/text.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace cst {

namespace {

// Node ids of the cover suffix tree must fit into Index (at most 3n+2 nodes).
constexpr std::size_t kMaxLength = (std::numeric_limits<Index>::max() - 8) / 3;

}  // namespace

void Text::rank(std::span<const std::int64_t> raw) {
  if (raw.empty()) throw std::invalid_argument("empty text");
  if (raw.size() > kMaxLength) throw std::invalid_argument("text too long");
  alphabet_.assign(raw.begin(), raw.end());
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  n_ = static_cast<Index>(raw.size());
  symbols_.resize(raw.size() + 1);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), raw[i]);
    symbols_[i] = static_cast<Symbol>(it - alphabet_.begin()) + 1;
  }
  symbols_.back() = kSentinel;
}

Text Text::from_bytes(std::string_view raw) {
  if (raw.empty()) throw std::invalid_argument("empty text");
  if (raw.size() > kMaxLength) throw std::invalid_argument("text too long");
  // Byte alphabets are ranked through a 256-entry table instead of a search.
  std::array<Symbol, 256> table{};
  for (unsigned char c : raw) table[c] = 1;
  Text t;
  for (int c = 0; c < 256; ++c) {
    if (table[c] != 0) {
      t.alphabet_.push_back(c);
      table[c] = static_cast<Symbol>(t.alphabet_.size());
    }
  }
  t.n_ = static_cast<Index>(raw.size());
  t.symbols_.resize(raw.size() + 1);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    t.symbols_[i] = table[static_cast<unsigned char>(raw[i])];
  }
  t.symbols_.back() = kSentinel;
  return t;
}

Text Text::from_values(std::span<const std::int64_t> raw) {
  Text t;
  t.rank(raw);
  return t;
}

std::optional<std::vector<Symbol>> Text::encode(std::string_view pattern) const {
  std::vector<Symbol> out;
  out.reserve(pattern.size());
  for (unsigned char c : pattern) {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), static_cast<std::int64_t>(c));
    if (it == alphabet_.end() || *it != c) return std::nullopt;
    out.push_back(static_cast<Symbol>(it - alphabet_.begin()) + 1);
  }
  return out;
}

std::string Text::render() const { return render(Fragment{1, n_}); }

std::string Text::render(Fragment f) const {
  if (!valid(f)) throw std::out_of_range("fragment out of range");
  std::string out;
  out.reserve(static_cast<std::size_t>(f.length()));
  for (Index i = f.start; i <= f.end; ++i) {
    Symbol s = at(i);
    out.push_back(s == kSentinel ? '#' : static_cast<char>(alphabet_[static_cast<std::size_t>(s - 1)]));
  }
  return out;
}

Text load_text(std::string_view raw) { return Text::from_bytes(raw); }

bool fragment_equal(const Text& t, Fragment a, Fragment b) {
  if (!t.valid(a) || !t.valid(b)) throw std::out_of_range("fragment out of range");
  if (a.length() != b.length()) return false;
  auto s = t.symbols();
  return std::equal(s.begin() + (a.start - 1), s.begin() + a.end, s.begin() + (b.start - 1));
}

}  // namespace cst
