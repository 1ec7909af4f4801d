#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyptree {

// Fixed-capacity bit set over row indices. All sets derived from the same
// table share one capacity; bits past the capacity are kept zero.
class RowSet {
public:
  RowSet() = default;
  explicit RowSet(std::size_t capacity)
      : nbits_(capacity), words_((capacity + 63) / 64, 0) {}

  static RowSet full(std::size_t capacity) {
    RowSet s(capacity);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.clear_tail();
    return s;
  }

  static RowSet single(std::size_t capacity, std::size_t bit) {
    RowSet s(capacity);
    s.set(bit);
    return s;
  }

  std::size_t capacity() const { return nbits_; }

  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void set(std::size_t i) {
    assert(i < nbits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    assert(i < nbits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool empty() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  RowSet& operator&=(const RowSet& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  RowSet& operator|=(const RowSet& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend RowSet operator&(RowSet a, const RowSet& b) {
    a &= b;
    return a;
  }

  // dst = a & b, reusing dst's storage when capacities match.
  static void and_into(const RowSet& a, const RowSet& b, RowSet& dst) {
    assert(a.nbits_ == b.nbits_);
    dst.nbits_ = a.nbits_;
    dst.words_.resize(a.words_.size());
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      dst.words_[i] = a.words_[i] & b.words_[i];
  }

  static std::size_t and_count(const RowSet& a, const RowSet& b) {
    assert(a.nbits_ == b.nbits_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    return c;
  }

  bool operator==(const RowSet& o) const = default;

  bool is_subset_of(const RowSet& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // Visits set bits in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        fn(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  int first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return static_cast<int>(wi * 64 + std::countr_zero(words_[wi]));
    return -1;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ nbits_;
    for (auto w : words_) {
      std::uint64_t x = w + 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      h ^= (x ^ (x >> 31)) + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

private:
  void clear_tail() {
    if (nbits_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct RowSetHash {
  std::size_t operator()(const RowSet& s) const { return s.hash(); }
};

}  // namespace hyptree
