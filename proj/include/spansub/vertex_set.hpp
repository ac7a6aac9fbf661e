#pragma once

// Fixed-universe bitset over vertex ids 0..n-1. Adjacency rows and all
// neighbourhood intersections in the solver run through this type, so the
// word array stays contiguous and intersection is word-parallel.

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace spansub {

using Vertex = int;

class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(Vertex v) const {
    assert(v >= 0 && v < n_);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }

  void set(Vertex v) {
    assert(v >= 0 && v < n_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void reset(Vertex v) {
    assert(v >= 0 && v < n_);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  void clear() { words_.assign(words_.size(), 0); }

  void fill() {
    if (n_ == 0) return;
    words_.assign(words_.size(), ~std::uint64_t{0});
    trim_tail();
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

  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  // set difference
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // smallest member, or -1
  int first() const { return next(-1); }

  // smallest member > after, or -1
  int next(int after) const {
    int start = after + 1;
    if (start >= n_) return -1;
    std::size_t wi = static_cast<std::size_t>(start) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (w) return static_cast<int>((wi << 6) + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(static_cast<int>((wi << 6) + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  static int intersection_count(const VertexSet& a, const VertexSet& b) {
    assert(a.n_ == b.n_);
    int c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += std::popcount(a.words_[i] & b.words_[i]);
    return c;
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  void trim_tail() {
    int tail = n_ & 63;
    if (tail != 0 && !words_.empty()) words_.back() &= (~std::uint64_t{0} >> (64 - tail));
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace spansub
