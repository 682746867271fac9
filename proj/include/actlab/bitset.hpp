#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace actlab {

/// Fixed-universe bitset used for element subsets of an act.
///
/// Bit i stands for element index i. operator< orders bitsets as
/// little-endian integers (bit 0 least significant); this is the
/// "lexicographic on bitsets" order used by every enumeration in the
/// library, so {0} < {1} < {0,1}.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(int universe)
      : size_(universe), words_((universe + 63) / 64, 0) {}

  static Bitset full(int universe) {
    Bitset b(universe);
    if (universe == 0) return b;
    for (int w = 0; w < static_cast<int>(b.words_.size()); ++w)
      b.words_[w] = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  static Bitset of(int universe, std::initializer_list<int> bits) {
    Bitset b(universe);
    for (int i : bits) b.set(i);
    return b;
  }

  static Bitset of(int universe, const std::vector<int>& bits) {
    Bitset b(universe);
    for (int i : bits) b.set(i);
    return b;
  }

  int universe() const { return size_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
  }
  void set(int i) {
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  bool is_full() const { return count() == size_; }

  /// other ⊆ this
  bool contains(const Bitset& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (other.words_[w] & ~words_[w]) return false;
    return true;
  }

  bool intersects(const Bitset& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  Bitset operator|(const Bitset& o) const {
    Bitset r(size_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      r.words_[w] = words_[w] | o.words_[w];
    return r;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r(size_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      r.words_[w] = words_[w] & o.words_[w];
    return r;
  }
  /// this ∖ o
  Bitset minus(const Bitset& o) const {
    Bitset r(size_);
    for (std::size_t w = 0; w < words_.size(); ++w)
      r.words_[w] = words_[w] & ~o.words_[w];
    return r;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }

  bool operator==(const Bitset& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  /// Little-endian integer order: compare most significant word first.
  bool operator<(const Bitset& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    for (std::size_t w = words_.size(); w-- > 0;)
      if (words_[w] != o.words_[w]) return words_[w] < o.words_[w];
    return false;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int i = 0; i < size_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(size_);
    for (auto w : words_) h = h * 1099511628211ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  void trim() {
    int extra = static_cast<int>(words_.size()) * 64 - size_;
    if (extra > 0 && !words_.empty())
      words_.back() &= ~std::uint64_t{0} >> extra;
  }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace actlab
