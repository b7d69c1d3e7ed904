#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace crosscut {

// Subset of {0, ..., universe_size-1} backed by 64-bit words. All poset and
// complex element sets in this library use this type; set operations require
// matching universe sizes.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(int universe_size) : size_(universe_size) {
    assert(universe_size >= 0);
    words_.assign(word_count(universe_size), 0);
  }

  static ElementSet of(int universe_size, std::initializer_list<int> members) {
    ElementSet s(universe_size);
    for (int m : members) s.set(m);
    return s;
  }

  static ElementSet full(int universe_size) {
    ElementSet s(universe_size);
    for (int i = 0; i < universe_size; ++i) s.set(i);
    return s;
  }

  int universe_size() const { return size_; }

  bool test(int i) const {
    assert(i >= 0 && i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    assert(i >= 0 && i < size_);
    words_[i >> 6] |= std::uint64_t(1) << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < size_);
    words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool any() const { return !empty(); }

  bool is_subset_of(const ElementSet& o) const {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  ElementSet& operator|=(const ElementSet& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  // Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    assert(size_ == o.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool operator==(const ElementSet& o) const = default;

  // First member, or -1 when empty.
  int first() const { return scan(0); }

  // Next member strictly after `i`, or -1.
  int next(int i) const { return scan(i + 1); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }

  // Total order on sets over the same universe: lexicographic on the sorted
  // member sequence ({0,2} < {1}, {0} < {0,1}). Used for canonical output.
  static int compare(const ElementSet& a, const ElementSet& b) {
    assert(a.size_ == b.size_);
    int x = a.first(), y = b.first();
    while (x >= 0 && y >= 0) {
      if (x != y) return x < y ? -1 : 1;
      x = a.next(x);
      y = b.next(y);
    }
    if (x == y) return 0;
    return x < 0 ? -1 : 1;
  }

  bool operator<(const ElementSet& o) const { return compare(*this, o) < 0; }

  // Key usable in hash maps; content-identical sets collide as required.
  std::string key() const {
    return std::string(reinterpret_cast<const char*>(words_.data()),
                       words_.size() * sizeof(std::uint64_t));
  }

 private:
  static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

  int scan(int from) const {
    if (from >= size_) return -1;
    std::size_t k = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t(0) << (from & 63));
    while (true) {
      if (w) {
        int bit = static_cast<int>(k * 64 + std::countr_zero(w));
        return bit < size_ ? bit : -1;
      }
      if (++k >= words_.size()) return -1;
      w = words_[k];
    }
  }

  std::vector<std::uint64_t> words_;
  int size_ = 0;
};

}  // namespace crosscut
