#pragma once

// Growth series of the right-angled Coxeter group of a flag complex: the
// rational function, its power-series expansion, a breadth-first word
// enumeration used as an independent check, and the radius-one classifier.

#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "gammacalc/complex.hpp"
#include "gammacalc/realroots.hpp"

namespace gammacalc {

/// Generators are the vertices; adjacent vertices commute.
class RacgPresentation {
 public:
  explicit RacgPresentation(const SimplicialComplex& x) : skeleton_(x.one_skeleton()) {
    if (!is_flag(x)) throw PreconditionError("right-angled Coxeter group needs a flag complex");
  }

  std::size_t num_generators() const { return skeleton_.num_vertices(); }
  bool commute(std::size_t s, std::size_t t) const { return skeleton_.adjacent(s, t); }
  const std::vector<std::string>& generators() const { return skeleton_.labels(); }

 private:
  Graph skeleton_;
};

struct GrowthSeries {
  RationalFunction rat;
};

/// W(t) = (1+t)^n / g(t) with n = dim X + 1 and
/// g(t) = sum over faces (-t)^{#σ} (1+t)^{n-#σ} = (1+t)^n f_X(-t/(1+t)).
inline GrowthSeries growth_series(const SimplicialComplex& x) {
  if (!is_flag(x)) throw PreconditionError("growth_series: complex is not flag");
  const std::size_t n = x.max_facet_size();
  const IntPolynomial f = f_polynomial(x);
  IntPolynomial g;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0) continue;
    IntPolynomial term = pow(int_poly({1, 1}), n - k).shift(k) * f[k];
    g += k % 2 ? -term : term;
  }
  return {RationalFunction(pow(int_poly({1, 1}), n), g)};
}

/// First N+1 Taylor coefficients via the recurrence den * W = num.
inline std::vector<BigInt> series_expand(const RationalFunction& w, std::size_t n) {
  const auto& num = w.numerator();
  const auto& den = w.denominator();
  if (den[0] == 0) throw PreconditionError("series_expand: denominator vanishes at 0");
  std::vector<BigInt> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt acc = num[k];
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) acc -= den[j] * c[k - j];
    if (acc % den[0] != 0) throw PreconditionError("series_expand: coefficients are not integral");
    c[k] = acc / den[0];
  }
  return c;
}

inline std::vector<BigInt> series_expand(const GrowthSeries& w, std::size_t n) { return series_expand(w.rat, n); }

namespace detail {

using Word = std::basic_string<std::uint8_t>;

/// s is a right descent of the reduced word w iff its last occurrence can be
/// shuffled to the end, i.e. everything after it commutes with s.
inline bool is_right_descent(const RacgPresentation& g, const Word& w, std::uint8_t s) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] == s) return true;
    if (!g.commute(w[i], s)) return false;
  }
  return false;
}

/// Lexicographically least word in the commutation class of a reduced word:
/// repeatedly emit the smallest letter that commutes with every letter before
/// it among those not yet emitted.
inline Word lex_normal_form(const RacgPresentation& g, Word w) {
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    std::size_t best = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
      bool free = true;
      for (std::size_t j = 0; j < i && free; ++j)
        if (w[j] == w[i] || !g.commute(w[j], w[i])) free = false;
      if (free && (best == w.size() || w[i] < w[best])) best = i;
    }
    out.push_back(w[best]);
    w.erase(best, 1);
  }
  return out;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(w.data()), w.size()));
  }
};

}  // namespace detail

/// Number of group elements of each length 0..N, by breadth-first search over
/// lexicographic normal forms. Independent of the rational formula.
inline std::vector<BigInt> bfs_growth_oracle(const SimplicialComplex& x, std::size_t n,
                                             std::size_t max_states = 5'000'000) {
  RacgPresentation g(x);
  const auto gens = g.num_generators();
  std::vector<BigInt> counts;
  std::unordered_set<detail::Word, detail::WordHash> seen;
  std::vector<detail::Word> layer{detail::Word{}};
  seen.insert(detail::Word{});
  counts.emplace_back(1);
  for (std::size_t len = 1; len <= n; ++len) {
    std::unordered_set<detail::Word, detail::WordHash> next;
    for (const auto& w : layer) {
      for (std::size_t s = 0; s < gens; ++s) {
        const auto letter = static_cast<std::uint8_t>(s);
        if (detail::is_right_descent(g, w, letter)) continue;
        detail::Word ws = w;
        ws.push_back(letter);
        next.insert(detail::lex_normal_form(g, std::move(ws)));
      }
    }
    for (const auto& w : next)
      if (!seen.insert(w).second) throw Error("bfs_growth_oracle: normal form repeated across lengths");
    if (seen.size() > max_states) throw SizeLimitError("bfs_growth_oracle: state cap exceeded");
    counts.emplace_back(next.size());
    layer.assign(next.begin(), next.end());
  }
  return counts;
}

/// Complement of the one-skeleton is a matching plus isolated vertices,
/// i.e. X = O^k * simplex.
inline bool is_crosspolytope_join_simplex(const SimplicialComplex& x) {
  if (!is_flag(x)) throw PreconditionError("is_crosspolytope_join_simplex: complex is not flag");
  const Graph g = x.one_skeleton();
  const std::size_t n = g.num_vertices();
  for (std::size_t v = 0; v < n; ++v)
    if (g.neighbors(v).size() + 2 < n) return false;
  return true;
}

struct RadiusCheck {
  bool radius_one = false;  ///< no pole of W strictly inside the unit disk
  bool ambiguous = false;   ///< a pole modulus within tol below 1, or numeric/exact disagreement
};

/// Poles of W are the roots of its reduced denominator. Real poles in (-1,1)
/// are counted exactly; complex ones are located with Durand-Kerner.
inline RadiusCheck radius_one_check(const SimplicialComplex& x, double tol = 1e-9) {
  RadiusCheck out;
  const IntPolynomial den = growth_series(x).rat.denominator();
  if (den.degree().value_or(0) == 0) {
    out.radius_one = true;
    return out;
  }
  const IntPolynomial q = squarefree_part(den);
  SturmChain chain(q);
  const std::size_t real_inside = chain.count(BigRational(-1), BigRational(1)) - (q.evaluate(BigInt(1)) == 0 ? 1 : 0);
  const auto cr = detail::classify_roots(q, 1e-12);
  bool numeric_inside = false;
  std::size_t numeric_real_inside = 0;
  for (std::size_t i = 0; i < cr.roots.size(); ++i) {
    const double m = std::abs(cr.roots[i]);
    if (m < 1 - tol) {
      numeric_inside = true;
      if (cr.is_real[i]) ++numeric_real_inside;
    } else if (m < 1 - 1e-12) {
      out.ambiguous = true;
    }
  }
  if (numeric_real_inside != real_inside) out.ambiguous = true;
  out.radius_one = real_inside == 0 && !numeric_inside;
  return out;
}

}  // namespace gammacalc
