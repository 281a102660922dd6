#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace krasner {

/// Subset of a fixed universe [0, N), packed into 64-bit words.
/// Carriers up to 64 elements fit a single word; larger carriers spill
/// into additional words with identical semantics.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static Subset single(int universe, int e) {
    Subset s(universe);
    s.set(e);
    return s;
  }

  static Subset full(int universe) {
    Subset s(universe);
    for (int e = 0; e < universe; ++e) s.set(e);
    return s;
  }

  int universe() const { return universe_; }

  bool test(int e) const {
    return (words_[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1;
  }
  void set(int e) { words_[static_cast<size_t>(e) >> 6] |= uint64_t{1} << (e & 63); }
  void reset(int e) { words_[static_cast<size_t>(e) >> 6] &= ~(uint64_t{1} << (e & 63)); }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  /// True iff every element of `other` is in *this.
  bool contains(const Subset& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (other.words_[i] & ~words_[i]) return false;
    return true;
  }

  Subset& operator|=(const Subset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Subset& operator&=(const Subset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }

  bool operator==(const Subset& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const Subset& o) const { return !(*this == o); }

  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        f(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h ^ static_cast<uint64_t>(universe_));
  }

  /// Deterministic total order: by cardinality, then by bit pattern read
  /// as a little-endian integer. Used wherever subsets are listed.
  friend bool subset_order_less(const Subset& a, const Subset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

 private:
  int universe_ = 0;
  std::vector<uint64_t> words_;
};

struct SubsetHash {
  size_t operator()(const Subset& s) const { return s.hash(); }
};

struct SubsetVecHash {
  size_t operator()(const std::vector<Subset>& v) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (const Subset& s : v) h = h * 31 + s.hash();
    return h;
  }
};

}  // namespace krasner
