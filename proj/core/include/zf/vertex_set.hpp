#pragma once

// Fixed-width bit-indexed vertex set. The capacity is selected at configure
// time via ZF_MAX_VERTICES; every graph in a build shares it.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#ifndef ZF_MAX_VERTICES
#define ZF_MAX_VERTICES 128
#endif

namespace zf {

class VertexSet {
public:
  static constexpr int kCapacity = ZF_MAX_VERTICES;
  static constexpr int kWords = (kCapacity + 63) / 64;
  static_assert(kCapacity > 0);

  constexpr VertexSet() = default;

  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) set(v);
  }

  /// The set {0, ..., n-1}.
  static VertexSet universe(int n) {
    VertexSet s;
    for (int w = 0; w < kWords; ++w) {
      int lo = w * 64;
      if (n <= lo) break;
      int bits = n - lo >= 64 ? 64 : n - lo;
      s.words_[w] = bits == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << bits) - 1;
    }
    return s;
  }

  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const {
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }

  /// Lowest member, or -1 when empty.
  int first() const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return -1;
  }

  /// Lowest member strictly greater than v, or -1.
  int next_after(int v) const {
    int i = (v + 1) >> 6;
    if (i >= kWords) return -1;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
    while (true) {
      if (w) return i * 64 + std::countr_zero(w);
      if (++i >= kWords) return -1;
      w = words_[i];
    }
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.words_ == b.words_;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet with(int v) const { VertexSet s = *this; s.set(v); return s; }
  VertexSet without(int v) const { VertexSet s = *this; s.reset(v); return s; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = first(); v >= 0; v = next_after(v)) out.push_back(v);
    return out;
  }

  // Range-for over members in increasing order.
  class iterator {
  public:
    iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() { v_ = set_->next_after(v_); return *this; }
    bool operator!=(const iterator& o) const { return v_ != o.v_; }
  private:
    const VertexSet* set_;
    int v_;
  };
  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace zf
