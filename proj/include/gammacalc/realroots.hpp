#pragma once

// Exact real-root counting with Sturm chains over Q, the degree-4 reciprocal
// region classifier, the cubic real-rootedness obstruction, and a
// Durand-Kerner root finder used for modulus comparisons.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gammacalc/polynomial.hpp"

namespace gammacalc {

/// p / gcd(p, p'), primitive with positive leading coefficient.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("squarefree_part: zero polynomial");
  if (*p.degree() == 0) return int_poly({1});
  IntPolynomial g = gcd(p, p.derivative());
  return primitive_part(exact_quotient(p, g));
}

/// Yun's algorithm: p = c * prod factor_i^multiplicity_i with squarefree,
/// pairwise coprime, primitive factors. Constant factors are omitted.
inline std::vector<std::pair<IntPolynomial, std::size_t>> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<IntPolynomial, std::size_t>> out;
  if (*p.degree() == 0) return out;
  RatPolynomial a = to_rational(p);
  RatPolynomial da = a.derivative();
  RatPolynomial g = gcd(a, da);
  RatPolynomial b = divmod(a, g).first;
  RatPolynomial c = divmod(da, g).first;
  RatPolynomial d = c - b.derivative();
  for (std::size_t i = 1; b.degree().value_or(0) > 0; ++i) {
    RatPolynomial f = gcd(b, d);
    if (f.degree().value_or(0) > 0) out.emplace_back(primitive_part(f), i);
    b = divmod(b, f).first;
    c = divmod(d, f).first;
    d = c - b.derivative();
  }
  return out;
}

/// Negated-remainder sequence p, p', -rem(p, p'), ... of a squarefree p.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& squarefree) {
    if (squarefree.is_zero()) throw PreconditionError("Sturm chain of the zero polynomial");
    chain_.push_back(to_rational(squarefree));
    if (*squarefree.degree() == 0) return;
    chain_.push_back(chain_[0].derivative());
    while (chain_.back().degree().value_or(0) > 0) {
      RatPolynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }

  const std::vector<RatPolynomial>& polynomials() const { return chain_; }

  /// Sign variations at x; nullopt with `positive` selects +/- infinity.
  std::size_t variations(const std::optional<BigRational>& x, bool positive_infinity) const {
    std::size_t v = 0;
    int last = 0;
    for (const auto& p : chain_) {
      int s = 0;
      if (x) {
        BigRational y = p.evaluate(*x);
        s = y > 0 ? 1 : (y < 0 ? -1 : 0);
      } else {
        s = p.leading() > 0 ? 1 : -1;
        if (!positive_infinity && *p.degree() % 2 == 1) s = -s;
      }
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  /// Distinct roots in (lo, hi]; nullopt bounds are -inf / +inf.
  std::size_t count(const std::optional<BigRational>& lo, const std::optional<BigRational>& hi) const {
    const std::size_t a = variations(lo, false);
    const std::size_t b = variations(hi, true);
    return a >= b ? a - b : 0;
  }

 private:
  std::vector<RatPolynomial> chain_;
};

/// Number of distinct real roots of p in (lo, hi].
inline std::size_t count_real_roots(const IntPolynomial& p, const std::optional<BigRational>& lo = std::nullopt,
                                    const std::optional<BigRational>& hi = std::nullopt) {
  return SturmChain(squarefree_part(p)).count(lo, hi);
}

/// Every root of p (over C) is real and strictly negative.
inline bool all_roots_real_negative(const IntPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("all_roots_real_negative: zero polynomial");
  if (p[0] == 0) throw PreconditionError("all_roots_real_negative: constant term is zero");
  IntPolynomial q = squarefree_part(p);
  SturmChain chain(q);
  const std::size_t negative = chain.count(std::nullopt, BigRational(0));
  const std::size_t nonneg = chain.count(BigRational(0), std::nullopt) + (q[0] == 0 ? 1 : 0);
  return nonneg == 0 && negative == *q.degree();
}

/// Every root of p is real.
inline bool all_roots_real(const IntPolynomial& p) {
  IntPolynomial q = squarefree_part(p);
  return count_real_roots(q) == *q.degree();
}

/// Necessary condition gamma2^2 >= 3 gamma3 gamma1 for 1 + g1 t + g2 t^2 + g3 t^3
/// to have only real roots; false certifies a non-real root.
inline bool cubic_real_root_obstruction(const BigInt& g1, const BigInt& g2, const BigInt& g3) {
  return g2 * g2 >= 3 * g3 * g1;
}

// ---------------------------------------------------------------------------
// Degree-4 reciprocal polynomials 1 + h1 t + h2 t^2 + h1 t^3 + t^4.

enum class RegionTag {
  ALL_REAL_NEGATIVE,
  UNIT_CIRCLE,
  MIXED_REAL_PAIR,
  MIXED_CIRCLE_PAIR,
  COMPLEX_QUADRUPLE,
  BOUNDARY_DOUBLE_ROOT,
};

inline std::string to_string(RegionTag t) {
  switch (t) {
    case RegionTag::ALL_REAL_NEGATIVE: return "ALL_REAL_NEGATIVE";
    case RegionTag::UNIT_CIRCLE: return "UNIT_CIRCLE";
    case RegionTag::MIXED_REAL_PAIR: return "MIXED_REAL_PAIR";
    case RegionTag::MIXED_CIRCLE_PAIR: return "MIXED_CIRCLE_PAIR";
    case RegionTag::COMPLEX_QUADRUPLE: return "COMPLEX_QUADRUPLE";
    case RegionTag::BOUNDARY_DOUBLE_ROOT: return "BOUNDARY_DOUBLE_ROOT";
  }
  return "?";
}

struct RegionClass {
  RegionTag tag = RegionTag::ALL_REAL_NEGATIVE;
  BigInt cd;  ///< h2 - 2 h1 + 2
  BigInt sr;  ///< h1^2 - 4 (h2 - 2)
  bool double_root = false;
};

inline IntPolynomial reciprocal_quartic(const BigInt& h1, const BigInt& h2) {
  return IntPolynomial({BigInt(1), h1, h2, h1, BigInt(1)});
}

/// ALL_REAL_NEGATIVE exactly when cd >= 0, sr >= 0 and h1 >= 4. The remaining
/// tags come from the roots u of gamma(u) = 1 + (h1-4) u + cd u^2: each real
/// u < 0 gives a pair of negative roots, u > 1/4 a pair on the unit circle,
/// 0 < u < 1/4 a positive pair, complex u four roots off the circle; a drop in
/// degree of gamma is the double root t = -1.
inline RegionClass deg4_region(const BigInt& h1, const BigInt& h2) {
  RegionClass rc;
  rc.cd = h2 - 2 * h1 + 2;
  rc.sr = h1 * h1 - 4 * (h2 - 2);
  const BigInt g1 = h1 - 4;
  const BigInt& g2 = rc.cd;

  if (rc.cd >= 0 && rc.sr >= 0 && h1 >= 4) {
    rc.tag = RegionTag::ALL_REAL_NEGATIVE;
    rc.double_root = rc.cd == 0 || rc.sr == 0;
    return rc;
  }

  enum Kind { Neg, Circ, Quarter, Pos, Complex };
  std::vector<Kind> kinds;
  auto classify_real = [&](const IntPolynomial& gamma, std::size_t copies) {
    SturmChain ch(squarefree_part(gamma));
    const BigRational quarter(1, 4);
    const std::size_t neg = ch.count(std::nullopt, BigRational(0));
    const std::size_t below_q = ch.count(BigRational(0), quarter);
    const bool at_q = gamma.evaluate(quarter) == 0;
    const std::size_t above = ch.count(quarter, std::nullopt);
    for (std::size_t c = 0; c < copies; ++c) {
      kinds.insert(kinds.end(), neg, Neg);
      kinds.insert(kinds.end(), below_q - (at_q ? 1 : 0), Pos);
      if (at_q) kinds.push_back(Quarter);
      kinds.insert(kinds.end(), above, Circ);
    }
  };

  const IntPolynomial gamma({BigInt(1), g1, g2});
  bool has_inf = false;
  if (g2 == 0) {
    has_inf = true;
    if (g1 != 0) classify_real(gamma, 1);
  } else if (rc.sr < 0) {
    kinds = {Complex, Complex};
  } else {
    classify_real(gamma, rc.sr == 0 ? 2 : 1);
  }

  auto has = [&](Kind k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };
  rc.double_root = rc.cd == 0 || rc.sr == 0 || has(Quarter);
  const bool only_circle = std::all_of(kinds.begin(), kinds.end(), [](Kind k) { return k == Circ; });

  if (rc.double_root) {
    rc.tag = RegionTag::BOUNDARY_DOUBLE_ROOT;
  } else if (has(Complex)) {
    rc.tag = RegionTag::COMPLEX_QUADRUPLE;
  } else if (only_circle && !has_inf) {
    rc.tag = RegionTag::UNIT_CIRCLE;
  } else if (has(Neg) && has(Circ) && !has(Pos)) {
    rc.tag = RegionTag::MIXED_CIRCLE_PAIR;
  } else {
    rc.tag = RegionTag::MIXED_REAL_PAIR;
  }
  return rc;
}

// ---------------------------------------------------------------------------
// Numerics.

struct NumericRoots {
  std::vector<std::complex<double>> roots;
  bool converged = false;
  int iterations = 0;
};

/// Durand-Kerner iteration started on the circle of radius
/// 1 + max|a_i / a_n| with angles offset by 0.4 rad.
inline NumericRoots numeric_roots(const IntPolynomial& p, double tol = 1e-12, int max_iter = 200) {
  if (p.degree().value_or(0) < 1) throw PreconditionError("numeric_roots: degree must be at least 1");
  const std::size_t n = *p.degree();
  std::vector<double> a(n + 1);
  const double lead = p.leading().convert_to<double>();
  for (std::size_t i = 0; i <= n; ++i) a[i] = p[i].convert_to<double>() / lead;
  double radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i]));
  radius += 1;

  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (std::size_t i = n + 1; i-- > 0;) acc = acc * z + a[i];
    return acc;
  };

  NumericRoots out;
  out.roots.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    out.roots[k] = std::polar(radius, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);

  for (int it = 1; it <= max_iter; ++it) {
    double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::complex<double> denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) denom *= out.roots[k] - out.roots[j];
      if (denom == std::complex<double>(0)) denom = 1e-300;
      const std::complex<double> step = eval(out.roots[k]) / denom;
      out.roots[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(out.roots[k])));
    }
    out.iterations = it;
    if (worst <= tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

namespace detail {

/// Numeric roots of a squarefree integer polynomial, with the exact number of
/// real roots used to decide which approximations are real: the `real_count`
/// roots with the smallest imaginary parts are snapped to the real axis.
struct ClassifiedRoots {
  std::vector<std::complex<double>> roots;
  std::vector<bool> is_real;
};

inline ClassifiedRoots classify_roots(const IntPolynomial& squarefree, double tol) {
  ClassifiedRoots out;
  if (squarefree.degree().value_or(0) == 0) return out;
  auto nr = numeric_roots(squarefree, std::min(tol, 1e-12));
  if (!nr.converged) throw ConvergenceError("Durand-Kerner did not converge for " + squarefree.to_string());
  const std::size_t real_count = count_real_roots(squarefree);
  std::vector<std::size_t> order(nr.roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::abs(nr.roots[x].imag()) < std::abs(nr.roots[y].imag());
  });
  out.roots = nr.roots;
  out.is_real.assign(nr.roots.size(), false);
  for (std::size_t i = 0; i < real_count && i < order.size(); ++i) {
    out.is_real[order[i]] = true;
    out.roots[order[i]] = {nr.roots[order[i]].real(), 0.0};
  }
  return out;
}

inline BigRational to_big_rational(double x) {
  // Exact binary value of the double.
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  BigRational r(scaled);
  exp -= 53;
  if (exp >= 0) return r * BigRational(BigInt(1) << exp);
  return r / BigRational(BigInt(1) << (-exp));
}

}  // namespace detail

struct SmallestRootCheck {
  bool real_negative = false;  ///< min-modulus set contains a real negative root
  bool ambiguous = false;      ///< the tie window mixes root types
  double min_modulus = 0;
};

/// Among the roots of p of smallest modulus (ties within tie_tol), is one real
/// and negative? Real candidates are confirmed by an exact Sturm count on a
/// small rational window around the approximation.
inline SmallestRootCheck smallest_modulus_root_is_real_negative(const IntPolynomial& p, double tie_tol = 1e-9) {
  if (p.is_zero() || p[0] == 0) throw PreconditionError("smallest modulus root: constant term must be nonzero");
  SmallestRootCheck out;
  const IntPolynomial q = squarefree_part(p);
  if (q.degree().value_or(0) == 0) return out;
  const auto cr = detail::classify_roots(q, 1e-12);
  double rmin = INFINITY;
  for (const auto& z : cr.roots) rmin = std::min(rmin, std::abs(z));
  out.min_modulus = rmin;
  bool any_other = false;
  for (std::size_t i = 0; i < cr.roots.size(); ++i) {
    if (std::abs(cr.roots[i]) > rmin + tie_tol) continue;
    const double x = cr.roots[i].real();
    if (cr.is_real[i] && x < 0) {
      const double delta = 1e-6 * std::max(1.0, std::abs(x));
      const auto lo = detail::to_big_rational(x - delta);
      const auto hi = detail::to_big_rational(std::min(x + delta, -0.0));
      if (SturmChain(q).count(lo, hi) >= 1) out.real_negative = true;
    } else {
      any_other = true;
    }
  }
  out.ambiguous = out.real_negative && any_other;
  return out;
}

}  // namespace gammacalc
