#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace trimlat {

// Fixed-width (set at construction) bitset over 0..size-1. All set
// operations work word-at-a-time; bits past size() are kept zero.
class Bitset {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}
  Bitset(std::size_t size, std::initializer_list<std::size_t> bits) : Bitset(size) {
    for (auto b : bits) set(b);
  }

  static Bitset full(std::size_t size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~word_type{0};
    b.trim();
    return b;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
  Bitset& set(std::size_t i) noexcept {
    words_[i / word_bits] |= word_type{1} << (i % word_bits);
    return *this;
  }
  Bitset& reset(std::size_t i) noexcept {
    words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
    return *this;
  }
  Bitset& set(std::size_t i, bool value) noexcept { return value ? set(i) : reset(i); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  // Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t wi = from / word_bits;
    word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
    while (true) {
      if (w != 0) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t first() const noexcept { return next(0); }

  bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  Bitset& operator-=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  Bitset operator~() const {
    Bitset r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  // Orders by cardinality, then by the sorted member lists lexicographically.
  // This is the canonical enumeration order used for output.
  friend bool operator<(const Bitset& a, const Bitset& b) noexcept {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    std::size_t i = a.first(), j = b.first();
    while (i < a.size_ && j < b.size_) {
      if (i != j) return i < j;
      i = a.next(i + 1);
      j = b.next(j + 1);
    }
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = first(); i < size_; i = next(i + 1)) f(i);
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_ * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

private:
  void trim() noexcept {
    if (size_ % word_bits != 0 && !words_.empty())
      words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

// Prints members with a display offset, e.g. offset 1 renders label 0 as "1".
inline void print_set(std::ostream& os, const Bitset& b, std::size_t offset = 0) {
  os << '{';
  bool first = true;
  b.for_each([&](std::size_t i) {
    if (!first) os << ',';
    os << i + offset;
    first = false;
  });
  os << '}';
}

}  // namespace trimlat
