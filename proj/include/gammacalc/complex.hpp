#pragma once

// Finite abstract simplicial complexes stored by facets, with memoized face
// enumeration, links, flagness, the Eulerian test and the constructions used
// for flag spheres: joins, suspensions, polygons, cross-polytopes, simplices
// and edge subdivisions.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gammacalc/error.hpp"
#include "gammacalc/polynomial.hpp"
#include "gammacalc/vertex_set.hpp"

namespace gammacalc {

/// Simple undirected graph on labeled vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels) : labels_(std::move(labels)), adj_(labels_.size()) {
    if (labels_.size() > kMaxVertices) throw SizeLimitError("graph has more than 256 vertices");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
      if (!seen.insert(l).second) throw InputError("duplicate vertex label '" + l + "'");
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw InputError("graph loop at vertex '" + labels_.at(u) + "'");
    adj_.at(u).insert(v);
    adj_.at(v).insert(u);
  }
  void add_edge(const std::string& a, const std::string& b) { add_edge(index_of(a), index_of(b)); }

  std::size_t index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw InputError("unknown vertex label '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::size_t num_vertices() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].contains(v); }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < adj_.size(); ++u)
      adj_[u].for_each([&](std::size_t v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  /// Complement graph on the same vertices.
  Graph complement() const {
    Graph g(labels_);
    for (std::size_t u = 0; u < adj_.size(); ++u)
      for (std::size_t v = u + 1; v < adj_.size(); ++v)
        if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
  }

  /// Maximal cliques (Bron-Kerbosch with pivoting), each as a vertex set.
  std::vector<VertexSet> maximal_cliques() const {
    std::vector<VertexSet> out;
    if (labels_.empty()) {
      out.emplace_back();
      return out;
    }
    bron_kerbosch(VertexSet{}, VertexSet::range(labels_.size()), VertexSet{}, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void bron_kerbosch(VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) const {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    std::size_t pivot = 0, best = 0;
    bool have = false;
    (p | x).for_each([&](std::size_t u) {
      std::size_t c = (p & adj_[u]).size();
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    });
    VertexSet candidates = p - adj_[pivot];
    candidates.for_each([&](std::size_t v) {
      VertexSet rv = r;
      rv.insert(v);
      bron_kerbosch(rv, p & adj_[v], x & adj_[v], out);
      p.erase(v);
      x.insert(v);
    });
  }

  std::vector<std::string> labels_;
  std::vector<VertexSet> adj_;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class SimplicialComplex {
 public:
  /// The complex {∅}: no vertices, one (empty) face.
  SimplicialComplex() : facets_{VertexSet{}}, cache_(std::make_shared<Cache>()) {}

  /// Builds from labeled facets. Facets contained in other facets are
  /// absorbed. Every label must occur in some facet.
  static SimplicialComplex from_facets(std::vector<std::string> labels,
                                       const std::vector<std::vector<std::string>>& facets) {
    if (labels.size() > kMaxVertices) throw SizeLimitError("complex has more than 256 vertices");
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (!index.emplace(labels[i], i).second) throw InputError("duplicate vertex label '" + labels[i] + "'");
    std::vector<VertexSet> sets;
    VertexSet used;
    for (const auto& f : facets) {
      VertexSet s;
      for (const auto& l : f) {
        auto it = index.find(l);
        if (it == index.end()) throw InputError("unknown vertex label '" + l + "' in facet");
        if (s.contains(it->second)) throw InputError("vertex '" + l + "' repeated within a face");
        s.insert(it->second);
      }
      used = used | s;
      sets.push_back(s);
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (!used.contains(i)) throw InputError("vertex '" + labels[i] + "' is not in any facet");
    return SimplicialComplex(std::move(labels), std::move(sets));
  }

  /// Builds from index facets over `labels`; vertices in no facet are dropped
  /// (remaining vertices keep their relative order).
  static SimplicialComplex from_index_facets(const std::vector<std::string>& labels, std::vector<VertexSet> facets) {
    VertexSet used;
    for (const auto& f : facets) used = used | f;
    if (used.size() == labels.size()) return SimplicialComplex(labels, std::move(facets));
    std::vector<std::size_t> remap(labels.size(), 0);
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (used.contains(i)) {
        remap[i] = kept.size();
        kept.push_back(labels[i]);
      }
    }
    for (auto& f : facets) {
      VertexSet g;
      f.for_each([&](std::size_t v) { g.insert(remap[v]); });
      f = g;
    }
    return SimplicialComplex(std::move(kept), std::move(facets));
  }

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t num_vertices() const { return labels_.size(); }
  const std::vector<VertexSet>& facets() const { return facets_; }

  std::optional<std::size_t> find_vertex(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }
  std::size_t vertex(const std::string& label) const {
    auto v = find_vertex(label);
    if (!v) throw InputError("unknown vertex label '" + label + "'");
    return *v;
  }
  VertexSet face_of(const std::vector<std::string>& labels) const {
    VertexSet s;
    for (const auto& l : labels) s.insert(vertex(l));
    return s;
  }
  std::vector<std::string> labels_of(const VertexSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](std::size_t v) { out.push_back(labels_[v]); });
    return out;
  }

  /// Largest facet cardinality, i.e. dim + 1.
  std::size_t max_facet_size() const {
    std::size_t n = 0;
    for (const auto& f : facets_) n = std::max(n, f.size());
    return n;
  }
  int dimension() const { return static_cast<int>(max_facet_size()) - 1; }
  bool is_pure() const {
    const std::size_t n = max_facet_size();
    return std::all_of(facets_.begin(), facets_.end(), [n](const VertexSet& f) { return f.size() == n; });
  }

  /// All faces including ∅, sorted by size then members. Computed once.
  const std::vector<VertexSet>& faces() const {
    std::call_once(cache_->once, [this] {
      std::unordered_set<VertexSet, VertexSetHash> all;
      for (const auto& f : facets_) f.for_each_subset([&](const VertexSet& s) { all.insert(s); });
      cache_->faces.assign(all.begin(), all.end());
      std::sort(cache_->faces.begin(), cache_->faces.end());
      cache_->face_set = std::move(all);
    });
    return cache_->faces;
  }

  bool contains_face(const VertexSet& s) const {
    faces();
    return cache_->face_set.count(s) != 0;
  }

  /// Edges in vertex-index order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& f : faces()) {
      if (f.size() != 2) continue;
      auto m = f.members();
      out.push_back({m[0], m[1]});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Graph one_skeleton() const {
    Graph g(labels_);
    for (const auto& e : edges()) g.add_edge(e.u, e.v);
    return g;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.labels_ == b.labels_ && a.facets_ == b.facets_;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<VertexSet> faces;
    std::unordered_set<VertexSet, VertexSetHash> face_set;
  };

  SimplicialComplex(std::vector<std::string> labels, std::vector<VertexSet> facets)
      : labels_(std::move(labels)), cache_(std::make_shared<Cache>()) {
    if (labels_.size() > kMaxVertices) throw SizeLimitError("complex has more than 256 vertices");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // Sorted by size, so a facet can only be absorbed by a later one.
    for (std::size_t i = 0; i < facets.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = i + 1; j < facets.size() && maximal; ++j)
        if (facets[i].is_subset_of(facets[j])) maximal = false;
      if (maximal) facets_.push_back(facets[i]);
    }
    if (facets_.empty()) facets_.emplace_back();
  }

  std::vector<std::string> labels_;
  std::vector<VertexSet> facets_;
  std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Invariants.

/// f(t) = sum over faces (including ∅) of t^{#face}.
inline IntPolynomial f_polynomial(const SimplicialComplex& x) {
  std::vector<BigInt> c(x.max_facet_size() + 1, BigInt(0));
  for (const auto& f : x.faces()) c[f.size()] += 1;
  return IntPolynomial(std::move(c));
}

/// h-polynomial with n = dim + 1.
inline IntPolynomial h_polynomial(const SimplicialComplex& x) { return h_from_f(f_polynomial(x), x.max_facet_size()); }

inline IntPolynomial gamma_polynomial(const SimplicialComplex& x) { return gamma_from_h(h_polynomial(x)); }

/// Lk(sigma) = {tau : tau ∪ sigma ∈ X, tau ∩ sigma = ∅}, on the vertices it uses.
inline SimplicialComplex link(const SimplicialComplex& x, const VertexSet& sigma) {
  if (!x.contains_face(sigma)) throw InputError("link: not a face of the complex");
  std::vector<VertexSet> facets;
  for (const auto& f : x.facets())
    if (sigma.is_subset_of(f)) facets.push_back(f - sigma);
  return SimplicialComplex::from_index_facets(x.labels(), std::move(facets));
}

inline SimplicialComplex link(const SimplicialComplex& x, const std::vector<std::string>& sigma) {
  return link(x, x.face_of(sigma));
}

inline SimplicialComplex clique_complex(const Graph& g) {
  return SimplicialComplex::from_index_facets(g.labels(), g.maximal_cliques());
}

/// Every clique of the one-skeleton is a face. Equivalently the maximal
/// cliques are exactly the facets.
inline bool is_flag(const SimplicialComplex& x) {
  auto cliques = x.one_skeleton().maximal_cliques();
  return cliques == x.facets();
}

/// Pure, and every face sigma (including ∅) has
/// sum_{tau ⊇ sigma} (-1)^{#tau} = (-1)^n with n the facet size.
inline bool is_eulerian(const SimplicialComplex& x) {
  if (!x.is_pure()) throw PreconditionError("is_eulerian: complex is not pure");
  const int n = static_cast<int>(x.max_facet_size());
  std::unordered_map<VertexSet, long long, VertexSetHash> sums;
  for (const auto& tau : x.faces()) {
    const long long sign = tau.size() % 2 ? -1 : 1;
    tau.for_each_subset([&](const VertexSet& s) { sums[s] += sign; });
  }
  const long long expected = n % 2 ? -1 : 1;
  for (const auto& [face, s] : sums)
    if (s != expected) return false;
  return true;
}

/// Sum of f-polynomials of links of all faces with k vertices, computed from
/// the links themselves.
inline IntPolynomial sum_link_f(const SimplicialComplex& x, std::size_t k) {
  IntPolynomial total;
  for (const auto& s : x.faces())
    if (s.size() == k) total += f_polynomial(link(x, s));
  return total;
}

// ---------------------------------------------------------------------------
// Shape recognition (fixed shapes only, no general isomorphism).

/// Cycle on m >= 3 vertices (m unconstrained when nullopt).
inline bool is_polygon(const SimplicialComplex& x, std::optional<std::size_t> m = std::nullopt) {
  const std::size_t n = x.num_vertices();
  if (n < 3 || (m && *m != n) || x.max_facet_size() != 2 || !x.is_pure()) return false;
  Graph g = x.one_skeleton();
  if (g.edges().size() != n) return false;
  for (std::size_t v = 0; v < n; ++v)
    if (g.neighbors(v).size() != 2) return false;
  // connected
  VertexSet seen{0}, frontier{0};
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](std::size_t v) { next = next | g.neighbors(v); });
    frontier = next - seen;
    seen = seen | next;
  }
  return seen.size() == n;
}

/// True iff every vertex misses exactly one other vertex in the one-skeleton.
inline bool complement_is_perfect_matching(const Graph& g) {
  const std::size_t n = g.num_vertices();
  for (std::size_t v = 0; v < n; ++v)
    if (g.neighbors(v).size() + 2 != n) return false;
  return true;
}

/// Flag with one-skeleton complement a perfect matching, i.e. O^n.
inline bool is_cross_polytope(const SimplicialComplex& x, std::optional<std::size_t> n = std::nullopt) {
  if (x.num_vertices() % 2 != 0 || (n && 2 * *n != x.num_vertices())) return false;
  return complement_is_perfect_matching(x.one_skeleton()) && is_flag(x);
}

// ---------------------------------------------------------------------------
// Constructions.

/// Join on disjoint copies; labels are prefixed "L:" and "R:".
inline SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
  std::vector<std::string> labels;
  for (const auto& l : x.labels()) labels.push_back("L:" + l);
  for (const auto& l : y.labels()) labels.push_back("R:" + l);
  if (labels.size() > kMaxVertices) throw SizeLimitError("join has more than 256 vertices");
  const std::size_t off = x.num_vertices();
  std::vector<VertexSet> facets;
  for (const auto& a : x.facets()) {
    for (const auto& b : y.facets()) {
      VertexSet s = a;
      b.for_each([&](std::size_t v) { s.insert(v + off); });
      facets.push_back(s);
    }
  }
  return SimplicialComplex::from_index_facets(labels, std::move(facets));
}

inline SimplicialComplex polygon(int m) {
  if (m < 3) throw InputError("polygon: need m >= 3");
  std::vector<std::string> labels;
  std::vector<VertexSet> facets;
  for (int i = 0; i < m; ++i) {
    labels.push_back("v" + std::to_string(i));
    facets.push_back(VertexSet{static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % m)});
  }
  return SimplicialComplex::from_index_facets(labels, std::move(facets));
}

/// O^n: vertices +1,-1,...,+n,-n; facets pick one of each antipodal pair.
inline SimplicialComplex cross_polytope(int n) {
  if (n < 0) throw InputError("cross_polytope: need n >= 0");
  if (2 * static_cast<std::size_t>(n) > kMaxVertices) throw SizeLimitError("cross_polytope: too many vertices");
  if (n > 20) throw SizeLimitError("cross_polytope: 2^n facets exceeds cap");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    labels.push_back("+" + std::to_string(i));
    labels.push_back("-" + std::to_string(i));
  }
  std::vector<VertexSet> facets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s;
    for (int i = 0; i < n; ++i) s.insert(2 * static_cast<std::size_t>(i) + ((mask >> i) & 1));
    facets.push_back(s);
  }
  return SimplicialComplex::from_index_facets(labels, std::move(facets));
}

/// Solid n-simplex on vertices v0..vn.
inline SimplicialComplex simplex(int n) {
  if (n < 0) throw InputError("simplex: need n >= 0");
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  return SimplicialComplex::from_index_facets(labels, {VertexSet::range(static_cast<std::size_t>(n) + 1)});
}

/// Boundary of the n-simplex: all n-subsets of n+1 vertices.
inline SimplicialComplex simplex_boundary(int n) {
  if (n < 0) throw InputError("simplex_boundary: need n >= 0");
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<VertexSet> facets;
  const auto all = VertexSet::range(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    VertexSet f = all;
    f.erase(static_cast<std::size_t>(i));
    facets.push_back(f);
  }
  return SimplicialComplex::from_index_facets(labels, std::move(facets));
}

/// join(X, S^0).
inline SimplicialComplex suspension(const SimplicialComplex& x) { return join(x, cross_polytope(1)); }

/// Smallest label "e<i>" not used in x.
inline std::string fresh_label(const SimplicialComplex& x, const std::string& stem = "e") {
  for (std::size_t i = 0;; ++i) {
    std::string l = stem + std::to_string(i);
    if (!x.find_vertex(l)) return l;
  }
}

/// Bisects every face containing the edge {s,t} with a new vertex e: the
/// faces containing {s,t} are replaced by sigma∪{s,e}, sigma∪{t,e} for sigma
/// in Lk{s,t}. The new vertex is appended as the last vertex.
inline SimplicialComplex edge_subdivision(const SimplicialComplex& x, std::size_t s, std::size_t t,
                                          const std::string& new_label) {
  const VertexSet eta{s, t};
  if (s == t || !x.contains_face(eta)) throw InputError("edge_subdivision: not an edge of the complex");
  if (x.find_vertex(new_label)) throw InputError("edge_subdivision: label '" + new_label + "' already in use");
  std::vector<std::string> labels = x.labels();
  labels.push_back(new_label);
  const std::size_t e = x.num_vertices();
  std::vector<VertexSet> facets;
  for (const auto& f : x.facets()) {
    if (!eta.is_subset_of(f)) {
      facets.push_back(f);
      continue;
    }
    VertexSet a = f, b = f;
    a.erase(t);
    a.insert(e);
    b.erase(s);
    b.insert(e);
    facets.push_back(a);
    facets.push_back(b);
  }
  return SimplicialComplex::from_index_facets(labels, std::move(facets));
}

inline SimplicialComplex edge_subdivision(const SimplicialComplex& x, const std::string& s, const std::string& t,
                                          std::optional<std::string> new_label = std::nullopt) {
  return edge_subdivision(x, x.vertex(s), x.vertex(t), new_label ? *new_label : fresh_label(x));
}

using ComplexPredicate = std::function<bool(const SimplicialComplex&)>;

/// All edges whose link satisfies pred, in vertex-index order.
inline std::vector<Edge> find_edges_with_link(const SimplicialComplex& x, const ComplexPredicate& pred) {
  std::vector<Edge> out;
  for (const auto& e : x.edges())
    if (pred(link(x, VertexSet{e.u, e.v}))) out.push_back(e);
  return out;
}

inline ComplexPredicate link_is_polygon(std::size_t m) {
  return [m](const SimplicialComplex& l) { return is_polygon(l, m); };
}

inline ComplexPredicate link_is_cross_polytope(std::size_t n) {
  return [n](const SimplicialComplex& l) { return is_cross_polytope(l, n); };
}

}  // namespace gammacalc
