#pragma once

// Dense univariate polynomials over Z and Q, and the f <-> h <-> gamma
// transforms used throughout the library.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gammacalc/error.hpp"

namespace gammacalc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense polynomial with ascending coefficients. The stored sequence is
/// always normalized: either its last entry is nonzero or it is exactly [0].
template <typename T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() : coeffs_{T(0)} {}
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

  static Polynomial monomial(T c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// (a + b t)^n
  static Polynomial binomial_power(const T& a, const T& b, std::size_t n) {
    return pow(Polynomial{a, b}, n);
  }

  /// Degree, or nullopt for the zero polynomial (degree -infinity).
  std::optional<std::size_t> degree() const {
    if (is_zero()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  /// Coefficient of t^i; zero beyond the stored range.
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  T operator[](std::size_t i) const { return coeff(i); }

  const T& leading() const { return coeffs_.back(); }
  const std::vector<T>& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  template <typename X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() == 1) return Polynomial();
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * T(static_cast<long long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const T& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
  friend Polynomial operator*(Polynomial a, const T& c) { return a *= c; }
  friend Polynomial operator*(const T& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend Polynomial pow(Polynomial base, std::size_t n) {
    Polynomial r = constant(T(1));
    while (n) {
      if (n & 1) r *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return r;
  }

  /// Multiply by t^k.
  Polynomial shift(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<T> v(k, T(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  /// Human-readable form, e.g. "1 + 5t + 5t^2".
  std::string to_string(char var = 't') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const T& c = coeffs_[i];
      if (c == 0) continue;
      bool neg = c < 0;
      T mag = neg ? T(-c) : c;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      if (i == 0 || mag != 1) os << mag;
      if (i >= 1) os << var;
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void normalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(T(0));
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRational>;

inline IntPolynomial int_poly(std::initializer_list<long long> c) {
  std::vector<BigInt> v;
  v.reserve(c.size());
  for (long long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRational> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

/// gcd of the coefficients (nonnegative; zero for the zero polynomial).
inline BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) g = boost::multiprecision::gcd(g, c);
  return g;
}

/// Scales a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient. Zero maps to zero.
inline IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return IntPolynomial();
  BigInt lcm = 1;
  for (const auto& c : p.coefficients()) {
    BigInt d = boost::multiprecision::denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) {
    v.push_back(boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c)));
  }
  IntPolynomial q(std::move(v));
  BigInt g = content(q);
  if (q.leading() < 0) g = -g;
  std::vector<BigInt> w;
  for (const auto& c : q.coefficients()) w.push_back(c / g);
  return IntPolynomial(std::move(w));
}

inline IntPolynomial primitive_part(const IntPolynomial& p) { return primitive_part(to_rational(p)); }

/// Quotient and remainder over Q.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const std::size_t db = *b.degree();
  std::vector<BigRational> r = a.coefficients();
  if (a.is_zero() || r.size() - 1 < db) return {RatPolynomial(), a};
  std::vector<BigRational> q(r.size() - db, BigRational(0));
  for (std::size_t i = r.size(); i-- > db;) {
    BigRational f = r[i] / b.leading();
    q[i - db] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
  }
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

/// Monic gcd over Q (zero only when both inputs are zero).
inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (BigRational(1) / a.leading());
}

/// Primitive gcd with positive leading coefficient.
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return primitive_part(gcd(to_rational(a), to_rational(b)));
}

/// Exact quotient a / b; throws if b does not divide a over Z.
inline IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) throw PreconditionError("polynomial division is not exact");
  std::vector<BigInt> v;
  for (const auto& c : q.coefficients()) {
    if (boost::multiprecision::denominator(c) != 1) throw PreconditionError("quotient is not integral");
    v.push_back(boost::multiprecision::numerator(c));
  }
  return IntPolynomial(std::move(v));
}

inline BigRational eval_rational(const IntPolynomial& p, const BigRational& x) { return p.evaluate(x); }

// ---------------------------------------------------------------------------
// f, h and gamma.

/// h(t) = sum_i f_i t^i (1-t)^(n-i), the unique h with
/// (1+t)^n h(1/(1+t)) = t^n f(1/t).
inline IntPolynomial h_from_f(const IntPolynomial& f, std::size_t n) {
  if (f.degree().value_or(0) > n) {
    throw PreconditionError("h_from_f: deg f = " + std::to_string(*f.degree()) + " exceeds n = " + std::to_string(n));
  }
  IntPolynomial h;
  const IntPolynomial one_minus_t = int_poly({1, -1});
  for (std::size_t i = 0; i <= n && i < f.size(); ++i) {
    if (f[i] == 0) continue;
    h += (pow(one_minus_t, n - i) * f[i]).shift(i);
  }
  return h;
}

inline bool is_reciprocal(const IntPolynomial& h) {
  const auto& c = h.coefficients();
  return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

/// sum_i g_i t^i (1+t)^(n-2i)
inline IntPolynomial h_from_gamma(const IntPolynomial& g, std::size_t n) {
  if (g.degree().value_or(0) > n / 2) {
    throw PreconditionError("h_from_gamma: deg gamma exceeds floor(n/2)");
  }
  IntPolynomial h;
  const IntPolynomial one_plus_t = int_poly({1, 1});
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    h += (pow(one_plus_t, n - 2 * i) * g[i]).shift(i);
  }
  return h;
}

/// Coordinates of a reciprocal h in the basis t^i (1+t)^(n-2i), n = deg h.
/// Peels off the lowest remaining coefficient one basis element at a time.
inline IntPolynomial gamma_from_h(const IntPolynomial& h) {
  if (h.is_zero()) throw PreconditionError("gamma_from_h: zero polynomial");
  if (!is_reciprocal(h)) throw PreconditionError("gamma_from_h: h = " + h.to_string() + " is not reciprocal");
  const std::size_t n = *h.degree();
  const IntPolynomial one_plus_t = int_poly({1, 1});
  IntPolynomial rest = h;
  std::vector<BigInt> g(n / 2 + 1, BigInt(0));
  for (std::size_t i = 0; i <= n / 2; ++i) {
    g[i] = rest[i];
    if (g[i] != 0) rest -= (pow(one_plus_t, n - 2 * i) * g[i]).shift(i);
  }
  if (!rest.is_zero()) throw PreconditionError("gamma_from_h: residual after basis expansion");
  return IntPolynomial(std::move(g));
}

/// h_0 <= ... <= h_{floor(n/2)} and h_{ceil(n/2)} >= ... >= h_n.
inline bool is_unimodal(const IntPolynomial& h) {
  if (h.is_zero()) return true;
  const std::size_t n = *h.degree();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (h[i] > h[i + 1]) return false;
  }
  for (std::size_t i = (n + 1) / 2; i < n; ++i) {
    if (h[i] < h[i + 1]) return false;
  }
  return true;
}

/// (-1)^m h(-1) for deg h = 2m.
inline BigInt charney_davis_quantity(const IntPolynomial& h) {
  if (h.is_zero() || *h.degree() % 2 != 0) {
    throw PreconditionError("charney_davis_quantity: degree must be even");
  }
  BigInt v = h.evaluate(BigInt(-1));
  return (*h.degree() / 2) % 2 ? BigInt(-v) : v;
}

/// Top gamma coefficient of an Eulerian complex of dimension 2m read off its
/// f-polynomial: (-1)^m 2^(2m-1) f'(-1/2).
inline BigRational gamma_top_via_derivative(const IntPolynomial& f, std::size_t m) {
  BigRational d = eval_rational(f.derivative(), BigRational(-1, 2));
  BigRational scale = m == 0 ? BigRational(1, 2) : BigRational(BigInt(1) << (2 * m - 1));
  BigRational v = scale * d;
  return m % 2 ? BigRational(-v) : v;
}

// ---------------------------------------------------------------------------

/// num/den over Z in lowest terms: gcd(num, den) constant, integer content
/// shared by num and den removed, den(0) positive (or the leading coefficient
/// of den when den(0) = 0).
class RationalFunction {
 public:
  RationalFunction(IntPolynomial num, IntPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
    reduce();
  }

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }

  RationalFunction inverse() const {
    if (num_.is_zero()) throw PreconditionError("inverse of zero rational function");
    return RationalFunction(den_, num_);
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = int_poly({1});
      return;
    }
    IntPolynomial g = gcd(num_, den_);
    if (g.degree().value_or(0) > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
    BigInt c = boost::multiprecision::gcd(content(num_), content(den_));
    if ((den_[0] != 0 ? den_[0] : den_.leading()) < 0) c = -c;
    std::vector<BigInt> n, d;
    for (const auto& x : num_.coefficients()) n.push_back(x / c);
    for (const auto& x : den_.coefficients()) d.push_back(x / c);
    num_ = IntPolynomial(std::move(n));
    den_ = IntPolynomial(std::move(d));
  }

  IntPolynomial num_;
  IntPolynomial den_;
};

}  // namespace gammacalc
