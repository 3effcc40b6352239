#pragma once

// Graded posets with a bottom and a top, the ab-index and cd-index, and
// order complexes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gammacalc/complex.hpp"

namespace gammacalc {

class GradedPoset {
 public:
  /// Builds from covering pairs (x, y) meaning x is covered by y. Ranks are
  /// derived from the covers; the poset must have a unique minimum and
  /// maximum and every cover must raise rank by exactly one.
  GradedPoset(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& covers)
      : labels_(std::move(labels)) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (!index.emplace(labels_[i], i).second) throw InputError("poset: duplicate element '" + labels_[i] + "'");
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (const auto& [a, b] : covers) {
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end() || ib == index.end()) throw InputError("poset: cover mentions unknown element");
      idx.emplace_back(ia->second, ib->second);
    }
    init(idx);
  }

  GradedPoset(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& covers)
      : labels_(std::move(labels)) {
    for (const auto& [a, b] : covers)
      if (a >= labels_.size() || b >= labels_.size()) throw InputError("poset: cover index out of range");
    init(covers);
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  /// rank(top); the poset has rank n+1 in the usual convention.
  int rank() const { return rank_[top_]; }
  int rank(std::size_t x) const { return rank_[x]; }
  bool leq(std::size_t x, std::size_t y) const { return le_[x][y]; }
  bool less(std::size_t x, std::size_t y) const { return x != y && le_[x][y]; }
  const std::vector<std::size_t>& up_covers(std::size_t x) const { return up_[x]; }
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < size(); ++x)
      for (auto y : up_[x]) out.emplace_back(x, y);
    return out;
  }

  /// Elements other than bottom and top.
  std::vector<std::size_t> proper_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x)
      if (x != bottom_ && x != top_) out.push_back(x);
    return out;
  }

 private:
  void init(const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
    const std::size_t n = labels_.size();
    if (n == 0) throw InputError("poset: no elements");
    up_.assign(n, {});
    std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
    for (const auto& [a, b] : covers) {
      if (a == b) throw InputError("poset: element covers itself");
      up_[a].push_back(b);
      ++indeg[b];
      ++outdeg[a];
    }
    for (auto& u : up_) {
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
    }
    std::vector<std::size_t> mins, maxs;
    for (std::size_t x = 0; x < n; ++x) {
      if (indeg[x] == 0) mins.push_back(x);
      if (outdeg[x] == 0) maxs.push_back(x);
    }
    if (mins.size() != 1) throw InputError("poset: minimum element is not unique");
    if (maxs.size() != 1) throw InputError("poset: maximum element is not unique");
    bottom_ = mins[0];
    top_ = maxs[0];

    // Ranks by breadth-first search from the bottom; every cover must agree.
    rank_.assign(n, -1);
    rank_[bottom_] = 0;
    std::vector<std::size_t> order{bottom_};
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto x = order[i];
      for (auto y : up_[x]) {
        if (rank_[y] < 0) {
          rank_[y] = rank_[x] + 1;
          order.push_back(y);
        } else if (rank_[y] != rank_[x] + 1) {
          throw InputError("poset: not graded (covers disagree on rank of '" + labels_[y] + "')");
        }
      }
    }
    if (order.size() != n) throw InputError("poset: some element is not above the minimum");

    // Closure, processing elements from the top rank down.
    le_.assign(n, std::vector<bool>(n, false));
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank_[a] > rank_[b]; });
    for (auto x : order) {
      le_[x][x] = true;
      for (auto y : up_[x])
        for (std::size_t z = 0; z < n; ++z)
          if (le_[y][z]) le_[x][z] = true;
    }
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<bool>> le_;
  std::vector<int> rank_;
  std::size_t bottom_ = 0, top_ = 0;
};

inline std::string face_label(const SimplicialComplex& x, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : x.labels_of(s)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

/// Faces of X ordered by inclusion with an adjoined top; rank(σ) = #σ.
/// X must be pure so that the result is graded.
inline GradedPoset face_poset(const SimplicialComplex& x) {
  if (!x.is_pure()) throw PreconditionError("face_poset: complex is not pure");
  const auto& faces = x.faces();
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    index[faces[i]] = i;
    labels.push_back(face_label(x, faces[i]));
  }
  const std::size_t top = faces.size();
  labels.push_back("^1");
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  const std::size_t full = x.max_facet_size();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].size() == full) covers.emplace_back(i, top);
    faces[i].for_each([&](std::size_t v) {
      VertexSet lower = faces[i];
      lower.erase(v);
      covers.emplace_back(index.at(lower), i);
    });
  }
  return GradedPoset(std::move(labels), covers);
}

/// Subsets of {1..n} under inclusion.
inline GradedPoset boolean_lattice(std::size_t n) {
  if (n > 12) throw SizeLimitError("boolean_lattice: n too large");
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::string> labels;
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::string l = "{";
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) l += (l.size() > 1 ? "," : "") + std::to_string(i + 1);
    labels.push_back(l + "}");
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t mask = 0; mask < count; ++mask)
    for (std::size_t i = 0; i < n; ++i)
      if (!((mask >> i) & 1)) covers.emplace_back(mask, mask | (std::size_t{1} << i));
  return GradedPoset(std::move(labels), covers);
}

/// Alternating rank sums over every nontrivial interval vanish.
inline bool is_eulerian_poset(const GradedPoset& p) {
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      if (!p.less(x, z)) continue;
      long long sum = 0;
      for (std::size_t y = 0; y < n; ++y)
        if (p.leq(x, y) && p.leq(y, z)) sum += p.rank(y) % 2 ? -1 : 1;
      if (sum != 0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Noncommutative polynomials.

/// Homogeneous polynomial in noncommuting letters; keys are words.
class WordPolynomial {
 public:
  WordPolynomial() = default;
  explicit WordPolynomial(std::size_t weight) : weight_(weight) {}

  std::size_t weight() const { return weight_; }
  const std::map<std::string, BigInt>& terms() const { return terms_; }
  BigInt coeff(const std::string& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  void add(const std::string& w, const BigInt& c) {
    if (c == 0) return;
    auto& slot = terms_[w];
    slot += c;
    if (slot == 0) terms_.erase(w);
  }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const WordPolynomial& a, const WordPolynomial& b) {
    return a.weight_ == b.weight_ && a.terms_ == b.terms_;
  }

 protected:
  std::size_t weight_ = 0;
  std::map<std::string, BigInt> terms_;
};

/// Polynomial in a, b; every word has length weight().
class ABPolynomial : public WordPolynomial {
 public:
  using WordPolynomial::WordPolynomial;

  /// Commutative specialization a -> x, b -> y.
  IntPolynomial specialize(const IntPolynomial& a, const IntPolynomial& b) const {
    IntPolynomial out;
    for (const auto& [w, c] : terms_) {
      IntPolynomial term = IntPolynomial::constant(c);
      for (char ch : w) term = term * (ch == 'a' ? a : b);
      out += term;
    }
    return out;
  }

  std::string to_string() const { return render(terms_); }

  static std::string render(const std::map<std::string, BigInt>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      const std::string word = compress(w);
      if (mag != 1 || word.empty()) out += mag.str();
      out += word;
    }
    return out;
  }

  /// Runs of a letter become letter^k.
  static std::string compress(const std::string& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      out += w[i];
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  }
};

/// Polynomial in c (weight 1) and d (weight 2).
class CDPolynomial : public WordPolynomial {
 public:
  using WordPolynomial::WordPolynomial;

  /// Expansion with c = a+b, d = ab+ba.
  ABPolynomial to_ab() const {
    ABPolynomial out(weight_);
    for (const auto& [w, c] : terms_)
      for (const auto& [ab, k] : expand(w)) out.add(ab, c * k);
    return out;
  }

  /// Commutative specialization c -> x, d -> y.
  IntPolynomial specialize(const IntPolynomial& c, const IntPolynomial& d) const {
    IntPolynomial out;
    for (const auto& [w, k] : terms_) {
      IntPolynomial term = IntPolynomial::constant(k);
      for (char ch : w) term = term * (ch == 'c' ? c : d);
      out += term;
    }
    return out;
  }

  bool has_negative_coefficient() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second < 0; });
  }

  std::string to_string() const { return ABPolynomial::render(terms_); }

  /// ab-words (with multiplicity one each) of a single cd-word.
  static std::map<std::string, BigInt> expand(const std::string& cd) {
    std::map<std::string, BigInt> cur{{"", BigInt(1)}};
    for (char ch : cd) {
      std::map<std::string, BigInt> next;
      for (const auto& [w, k] : cur) {
        if (ch == 'c') {
          next[w + "a"] += k;
          next[w + "b"] += k;
        } else {
          next[w + "ab"] += k;
          next[w + "ba"] += k;
        }
      }
      cur = std::move(next);
    }
    return cur;
  }

  /// All cd-words of weight n, lexicographic with c < d.
  static std::vector<std::string> basis(std::size_t n) {
    std::vector<std::string> out;
    std::string w;
    auto rec = [&](auto&& self, std::size_t left) -> void {
      if (left == 0) {
        out.push_back(w);
        return;
      }
      w.push_back('c');
      self(self, left - 1);
      w.pop_back();
      if (left >= 2) {
        w.push_back('d');
        self(self, left - 2);
        w.pop_back();
      }
    };
    rec(rec, n);
    return out;
  }
};

/// Sum over chains bottom < x1 < ... < xd < top (including the empty chain)
/// of the word with b at positions rank(x_i) and a elsewhere.
inline ABPolynomial upsilon(const GradedPoset& p, std::size_t max_chains = 20000) {
  const int top_rank = p.rank();
  if (top_rank < 1) throw PreconditionError("upsilon: poset must have rank at least 1");
  const std::size_t n = static_cast<std::size_t>(top_rank - 1);
  if (n > 62) throw SizeLimitError("upsilon: rank too large");
  std::map<std::uint64_t, BigInt> by_mask;
  std::size_t chains = 0;
  // Depth-first over chains; `last` is the largest element of the chain.
  auto dfs = [&](auto&& self, std::size_t last, std::uint64_t mask) -> void {
    if (++chains > max_chains) throw SizeLimitError("upsilon: chain count exceeds cap");
    by_mask[mask] += 1;
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (y == p.top() || !p.less(last, y)) continue;
      self(self, y, mask | (std::uint64_t{1} << (p.rank(y) - 1)));
    }
  };
  dfs(dfs, p.bottom(), 0);
  ABPolynomial out(n);
  for (const auto& [mask, c] : by_mask) {
    std::string w(n, 'a');
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) w[i] = 'b';
    out.add(w, c);
  }
  return out;
}

/// Substitutes a -> a - b.
inline ABPolynomial psi(const ABPolynomial& u) {
  ABPolynomial out(u.weight());
  for (const auto& [w, c] : u.terms()) {
    std::vector<std::size_t> apos;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == 'a') apos.push_back(i);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << apos.size()); ++mask) {
      std::string v = w;
      int flips = 0;
      for (std::size_t j = 0; j < apos.size(); ++j)
        if ((mask >> j) & 1) {
          v[apos[j]] = 'b';
          ++flips;
        }
      out.add(v, flips % 2 ? BigInt(-c) : c);
    }
  }
  return out;
}

inline ABPolynomial psi(const GradedPoset& p) { return psi(upsilon(p)); }

/// Solves psi = sum_w x_w * expand(w) over the cd-words of matching weight.
inline CDPolynomial cd_rewrite(const ABPolynomial& ps) {
  const std::size_t n = ps.weight();
  for (const auto& [w, c] : ps.terms())
    if (w.size() != n) throw PreconditionError("cd_rewrite: ab-polynomial is not homogeneous");
  const auto basis = CDPolynomial::basis(n);
  if (n > 24) throw SizeLimitError("cd_rewrite: weight too large");

  // One row per ab-word of length n, in lexicographic order.
  const std::size_t rows = std::size_t{1} << n;
  auto word_of = [n](std::size_t r) {
    std::string w(n, 'a');
    for (std::size_t i = 0; i < n; ++i)
      if ((r >> (n - 1 - i)) & 1) w[i] = 'b';
    return w;
  };
  auto row_of = [n](const std::string& w) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) r = r << 1 | (w[i] == 'b');
    return r;
  };
  const std::size_t cols = basis.size();
  std::vector<std::vector<BigRational>> m(rows, std::vector<BigRational>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [w, k] : CDPolynomial::expand(basis[j])) m[row_of(w)][j] = BigRational(k);
  for (const auto& [w, c] : ps.terms()) m[row_of(w)][cols] = BigRational(c);
  std::vector<std::size_t> row_word(rows);
  for (std::size_t r = 0; r < rows; ++r) row_word[r] = r;

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t piv = r;
    while (piv < rows && m[piv][j] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    std::swap(row_word[r], row_word[piv]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][j] == 0) continue;
      const BigRational f = m[i][j] / m[r][j];
      for (std::size_t k = j; k <= cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_col.push_back(j);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) throw NotCdExpressible(word_of(row_word[i]));

  CDPolynomial out(n);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    const BigRational x = m[i][cols] / m[i][pivot_col[i]];
    if (denominator(x) != 1) throw NotCdExpressible(word_of(row_word[i]));
    out.add(basis[pivot_col[i]], numerator(x));
  }
  return out;
}

inline CDPolynomial cd_index(const GradedPoset& p) { return cd_rewrite(psi(p)); }

/// Chains of proper elements; a clique complex of the comparability graph.
inline SimplicialComplex order_complex(const GradedPoset& p) {
  const auto proper = p.proper_elements();
  if (proper.size() > kMaxVertices) throw SizeLimitError("order_complex: more than 256 proper elements");
  std::vector<std::string> labels;
  for (auto x : proper) labels.push_back(p.labels()[x]);
  Graph g(labels);
  for (std::size_t i = 0; i < proper.size(); ++i)
    for (std::size_t j = i + 1; j < proper.size(); ++j)
      if (p.less(proper[i], proper[j]) || p.less(proper[j], proper[i])) g.add_edge(i, j);
  return clique_complex(g);
}

/// Order complex of the nonempty faces of X under inclusion.
inline SimplicialComplex barycentric(const SimplicialComplex& x) {
  std::vector<VertexSet> faces;
  for (const auto& f : x.faces())
    if (!f.empty()) faces.push_back(f);
  if (faces.size() > kMaxVertices) throw SizeLimitError("barycentric: more than 256 nonempty faces");
  std::vector<std::string> labels;
  for (const auto& f : faces) labels.push_back(face_label(x, f));
  Graph g(labels);
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = i + 1; j < faces.size(); ++j)
      if (faces[i].is_subset_of(faces[j]) || faces[j].is_subset_of(faces[i])) g.add_edge(i, j);
  return clique_complex(g);
}

/// Φ(1, 2t): c -> 1, d -> 2t.
inline IntPolynomial cd_gamma(const CDPolynomial& phi) { return phi.specialize(int_poly({1}), int_poly({0, 2})); }

/// h of the order complex, taken in dimension rank(P) - 1.
inline IntPolynomial order_complex_h(const GradedPoset& p) {
  return h_from_f(f_polynomial(order_complex(p)), static_cast<std::size_t>(p.rank() - 1));
}

/// γ of the order complex equals Φ_P(1, 2t).
inline bool gamma_cd_bridge_check(const GradedPoset& p) {
  if (!is_eulerian_poset(p)) throw PreconditionError("gamma_cd_bridge_check: poset is not Eulerian");
  return cd_gamma(cd_index(p)) == gamma_from_h(order_complex_h(p));
}

/// h_{N(P)}(-1) equals the cd-index evaluated at c = 0, d = -2.
inline bool babson_check(const GradedPoset& p) {
  if (!is_eulerian_poset(p)) throw PreconditionError("babson_check: poset is not Eulerian");
  const BigInt lhs = order_complex_h(p).evaluate(BigInt(-1));
  const BigInt rhs = cd_index(p).specialize(int_poly({0}), int_poly({-2})).evaluate(BigInt(0));
  return lhs == rhs;
}

}  // namespace gammacalc
