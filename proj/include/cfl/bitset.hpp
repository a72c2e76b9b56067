#pragma once

// Fixed-universe bit-vectors used for patterns (subsets of the item universe)
// and extents (subsets of the object set).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cfl {

class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_(word_count(nbits), 0) {}
  Bitset(std::size_t nbits, std::initializer_list<std::size_t> members) : Bitset(nbits) {
    for (auto i : members) set(i);
  }

  static constexpr std::size_t word_count(std::size_t nbits) { return (nbits + kWordBits - 1) / kWordBits; }

  static Bitset full(std::size_t nbits) {
    Bitset b(nbits);
    b.fill();
    return b;
  }
  static Bitset from_indices(std::size_t nbits, std::span<const std::size_t> members) {
    Bitset b(nbits);
    for (auto i : members) b.set(i);
    return b;
  }
  // Low `nbits` bits of `mask`; convenient for universes of at most 64 items.
  static Bitset from_mask(std::size_t nbits, Word mask) {
    Bitset b(nbits);
    if (!b.words_.empty()) b.words_[0] = mask;
    b.trim();
    return b;
  }

  std::size_t size() const { return nbits_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  Bitset& set(std::size_t i) {
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
    return *this;
  }
  Bitset& reset(std::size_t i) {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
    return *this;
  }
  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }
  void fill() {
    std::fill(words_.begin(), words_.end(), ~Word{0});
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool intersects(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  // Set difference.
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  Bitset with(std::size_t i) const {
    Bitset b = *this;
    b.set(i);
    return b;
  }

  // Index of the lowest member, or size() when empty.
  std::size_t first() const { return next(0); }
  // Lowest member >= from, or size() when none.
  std::size_t next(std::size_t from) const {
    if (from >= nbits_) return nbits_;
    std::size_t k = from / kWordBits;
    Word w = words_[k] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == words_.size()) return nbits_;
      w = words_[k];
    }
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w) {
        fn(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  std::size_t hash() const {
    std::size_t h = nbits_;
    for (auto w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void trim() {
    if (nbits_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (nbits_ % kWordBits)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

// Lexicographic order on the ascending member sequences: a < ab < abc < ac < b.
// This is the canonical ordering for minimals and sorted output.
inline bool lex_less(const Bitset& a, const Bitset& b) {
  std::size_t i = a.first(), j = b.first();
  while (i < a.size() && j < b.size()) {
    if (i != j) return i < j;
    i = a.next(i + 1);
    j = b.next(j + 1);
  }
  return i >= a.size() && j < b.size();
}

struct LexLess {
  bool operator()(const Bitset& a, const Bitset& b) const { return lex_less(a, b); }
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

// Patterns are subsets of the item universe S; extents are subsets of the object set O.
using Pattern = Bitset;
using Extent = Bitset;

// Renders members through a name table, separated by `sep`.
std::string to_string(const Bitset& b, std::span<const std::string> names, std::string_view sep = " ");
// "{a b d}", or "{}" for the empty set; used in diagnostics.
std::string braced(const Bitset& b, std::span<const std::string> names);
// Renders members as letters a, b, c, ... (universes of at most 26 items).
std::string letters(const Bitset& b);
// Parses a letter word such as "abd" over a universe of `nbits` items.
Bitset from_letters(std::size_t nbits, std::string_view word);

}  // namespace cfl
