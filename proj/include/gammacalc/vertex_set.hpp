#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "gammacalc/error.hpp"

namespace gammacalc {

inline constexpr std::size_t kMaxVertices = 256;

/// Fixed-capacity bitset over vertex indices [0, kMaxVertices).
class VertexSet {
  static constexpr std::size_t kWords = kMaxVertices / 64;

 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<std::size_t> vs) {
    for (auto v : vs) insert(v);
  }

  static VertexSet range(std::size_t n) {
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  void insert(std::size_t v) {
    if (v >= kMaxVertices) throw SizeLimitError("vertex index exceeds capacity of 256 vertices");
    w_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(std::size_t v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(std::size_t v) const { return v < kMaxVertices && (w_[v >> 6] >> (v & 63)) & 1; }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : w_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) {
    for (std::size_t i = 0; i < kWords; ++i) a.w_[i] |= b.w_[i];
    return a;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) {
    for (std::size_t i = 0; i < kWords; ++i) a.w_[i] &= b.w_[i];
    return a;
  }
  /// Set difference.
  friend VertexSet operator-(VertexSet a, const VertexSet& b) {
    for (std::size_t i = 0; i < kWords; ++i) a.w_[i] &= ~b.w_[i];
    return a;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  /// Calls f on every subset (including empty and the set itself).
  template <typename F>
  void for_each_subset(F&& f) const {
    auto m = members();
    const std::size_t n = m.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet s;
      for (std::size_t j = 0; j < n; ++j)
        if ((mask >> j) & 1) s.insert(m[j]);
      f(s);
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Graded lexicographic: smaller sets first, then by sorted member list.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    auto ma = a.members(), mb = b.members();
    return ma <=> mb;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : w_) h = h * 0x9e3779b97f4a7c15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> w_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace gammacalc
