#pragma once

// Reduced integral homology of simplicial complexes via Smith normal form of
// the boundary matrices, and the generalized-homology-sphere test.

#include <cstdint>
#include <cstdlib>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gammacalc/complex.hpp"

namespace gammacalc {

namespace detail {

struct Overflow {};

inline long long checked_mul_sub(long long a, long long q, long long b) {
  long long prod = 0, out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
  return out;
}
inline long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow{};
  return out;
}
inline BigInt checked_mul_sub(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }

template <typename Int>
Int abs_value(const Int& x) {
  return x < 0 ? Int(-x) : x;
}

/// Nonzero invariant factors of a dense integer matrix, in divisibility order.
template <typename Int>
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> a, std::size_t rows, std::size_t cols) {
  std::vector<Int> diag;
  auto row_op = [&](std::size_t dst, std::size_t src, const Int& q, std::size_t from) {
    for (std::size_t j = from; j < cols; ++j)
      if (a[src][j] != 0) a[dst][j] = checked_mul_sub(a[dst][j], q, a[src][j]);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Int& q, std::size_t from) {
    for (std::size_t i = from; i < rows; ++i)
      if (a[i][src] != 0) a[i][dst] = checked_mul_sub(a[i][dst], q, a[i][src]);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
  };

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    std::size_t pi = rows, pj = cols;
    Int best = 0;
    for (std::size_t i = t; i < rows && best != 1; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        Int m = abs_value(a[i][j]);
        if (pi == rows || m < best) {
          best = m;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        while (a[i][t] != 0) {
          Int q = a[i][t] / a[t][t];
          row_op(i, t, q, t);
          if (a[i][t] != 0) std::swap(a[t], a[i]);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        while (a[t][j] != 0) {
          Int q = a[t][j] / a[t][t];
          col_op(j, t, q, t);
          if (a[t][j] != 0) {
            swap_cols(t, j);
            dirty = true;
          }
        }
      }
      if (dirty) continue;  // column t may have refilled after a column swap
      bool refill = false;
      for (std::size_t i = t + 1; i < rows && !refill; ++i)
        if (a[i][t] != 0) refill = true;
      if (refill) continue;
      // Divisibility of the trailing block by the pivot.
      std::size_t bad = rows;
      if (abs_value(a[t][t]) != 1) {
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              bad = i;
              break;
            }
      }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] = checked_add(a[t][j], a[bad][j]);
    }
    diag.push_back(abs_value(a[t][t]));
  }
  return diag;
}

}  // namespace detail

/// Nonzero invariant factors of an integer matrix (as BigInt).
inline std::vector<BigInt> smith_invariant_factors(const std::vector<std::vector<long long>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  try {
    auto d = detail::smith_diagonal<long long>(m, rows, cols);
    return std::vector<BigInt>(d.begin(), d.end());
  } catch (const detail::Overflow&) {
    std::vector<std::vector<BigInt>> big(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) big[i][j] = m[i][j];
    return detail::smith_diagonal<BigInt>(std::move(big), rows, cols);
  }
}

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  ///< invariant factors > 1
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced homology in dimensions -1 .. dim X.
struct ReducedHomology {
  std::vector<HomologyGroup> groups;  ///< groups[k + 1] is H~_k

  const HomologyGroup& at(int dim) const {
    static const HomologyGroup zero;
    const auto i = static_cast<std::size_t>(dim + 1);
    return dim >= -1 && i < groups.size() ? groups[i] : zero;
  }

  /// Reduced homology of S^k: Z in degree k only.
  bool is_sphere(int k) const {
    const int top = static_cast<int>(groups.size()) - 2;
    if (k > top) return false;
    for (int d = -1; d <= top; ++d) {
      const auto& g = at(d);
      if (!g.torsion.empty() || g.betti != (d == k ? 1u : 0u)) return false;
    }
    return true;
  }
};

inline ReducedHomology homology_ranks(const SimplicialComplex& x) {
  const int dim = x.dimension();
  // faces_by_size[s] lists faces with s vertices, i.e. chains in degree s-1.
  std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(dim) + 2);
  for (const auto& f : x.faces()) by_size[f.size()].push_back(f);

  // Invariant factors of the boundary from size s to size s-1, s >= 1.
  std::vector<std::vector<BigInt>> factors(by_size.size());
  for (std::size_t s = 1; s < by_size.size(); ++s) {
    const auto& lower = by_size[s - 1];
    const auto& upper = by_size[s];
    std::unordered_map<VertexSet, std::size_t, VertexSetHash> row_of;
    for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = i;
    std::vector<std::vector<long long>> m(lower.size(), std::vector<long long>(upper.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j) {
      long long sign = 1;
      upper[j].for_each([&](std::size_t v) {
        VertexSet face = upper[j];
        face.erase(v);
        m[row_of.at(face)][j] = sign;
        sign = -sign;
      });
    }
    factors[s] = smith_invariant_factors(m);
  }

  ReducedHomology out;
  out.groups.resize(by_size.size());
  for (std::size_t s = 0; s < by_size.size(); ++s) {
    const std::size_t rank_out = s >= 1 ? factors[s].size() : 0;
    const std::size_t rank_in = s + 1 < by_size.size() ? factors[s + 1].size() : 0;
    auto& g = out.groups[s];
    g.betti = by_size[s].size() - rank_out - rank_in;
    if (s + 1 < by_size.size())
      for (const auto& d : factors[s + 1])
        if (d > 1) g.torsion.push_back(d);
  }
  return out;
}

/// Pure, and the link of every face sigma (including ∅) has the reduced
/// homology of S^{dim X - #sigma}.
inline bool is_ghs(const SimplicialComplex& x) {
  if (!x.is_pure()) return false;
  const int dim = x.dimension();
  for (const auto& sigma : x.faces()) {
    const int expected = dim - static_cast<int>(sigma.size());
    if (!homology_ranks(link(x, sigma)).is_sphere(expected)) return false;
  }
  return true;
}

}  // namespace gammacalc
