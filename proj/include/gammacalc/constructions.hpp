#pragma once

// Explicit builds: the flag 5-sphere whose h-polynomial has non-real roots,
// flag 3-spheres realizing degree-4 h-polynomials, and the region grid.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gammacalc/complex.hpp"
#include "gammacalc/homology.hpp"
#include "gammacalc/realroots.hpp"

namespace gammacalc {

namespace detail {

inline Edge first_edge_with_link(const SimplicialComplex& x, const ComplexPredicate& pred, const char* what) {
  auto edges = find_edges_with_link(x, pred);
  if (edges.empty()) throw Error(std::string("no edge with ") + what + " link");
  return edges.front();
}

/// Subdivides {s,t} `times` times, each time continuing on the new edge {s,e}.
/// Returns the complex and leaves t pointing at the last new vertex.
inline SimplicialComplex iterate_subdivision(SimplicialComplex x, std::size_t s, std::size_t& t, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) {
    x = edge_subdivision(x, s, t, fresh_label(x));
    t = x.num_vertices() - 1;
  }
  return x;
}

}  // namespace detail

/// join(pentagon, pentagon), subdivide the first edge with a quadrilateral
/// link, join with another pentagon, then subdivide m times along an edge
/// whose link is the 4-dimensional cross-polytope.
inline SimplicialComplex paper_counterexample(std::size_t m) {
  const auto x1 = join(polygon(5), polygon(5));
  const Edge q = detail::first_edge_with_link(x1, link_is_polygon(4), "quadrilateral");
  const auto x2 = edge_subdivision(x1, q.u, q.v, fresh_label(x1));
  auto x = join(x2, polygon(5));
  if (m == 0) return x;
  const Edge eta = detail::first_edge_with_link(x, link_is_cross_polytope(4), "cross-polytope");
  std::size_t s = eta.u, t = eta.v;
  for (std::size_t i = 0; i < m; ++i) {
    x = edge_subdivision(x, s, t, fresh_label(x));
    const std::size_t e = x.num_vertices() - 1;
    // Continue on a new edge through e that still has an O^4 link.
    std::optional<Edge> next;
    for (const auto& cand : x.edges()) {
      if (cand.v != e && cand.u != e) continue;
      if (is_cross_polytope(link(x, VertexSet{cand.u, cand.v}), 4)) {
        next = cand;
        break;
      }
    }
    if (!next) throw Error("paper_counterexample: no cross-polytope link among new edges");
    s = next->u;
    t = next->v;
  }
  return x;
}

struct CounterexampleReport {
  SimplicialComplex complex;
  IntPolynomial f, h, gamma;
  bool flag = false;
  bool eulerian = false;
  std::optional<bool> ghs;
  bool real_rooted = false;
  bool gamma_nonneg = false;
  std::size_t real_root_count = 0;      ///< distinct real roots of h
  std::size_t distinct_root_count = 0;  ///< degree of the squarefree part of h
  bool cubic_obstruction = false;       ///< γ2^2 < 3 γ1 γ3
};

inline CounterexampleReport verify_complex_report(SimplicialComplex x, bool with_ghs) {
  CounterexampleReport r;
  r.complex = std::move(x);
  r.f = f_polynomial(r.complex);
  r.h = h_from_f(r.f, r.complex.max_facet_size());
  r.flag = is_flag(r.complex);
  r.eulerian = r.complex.is_pure() && is_eulerian(r.complex);
  if (with_ghs) r.ghs = is_ghs(r.complex);
  r.gamma = gamma_from_h(r.h);
  r.gamma_nonneg = true;
  for (const auto& c : r.gamma.coefficients())
    if (c < 0) r.gamma_nonneg = false;
  r.real_rooted = all_roots_real(r.h);
  r.real_root_count = count_real_roots(r.h);
  r.distinct_root_count = squarefree_part(r.h).degree().value_or(0);
  if (r.gamma.degree().value_or(0) == 3) r.cubic_obstruction = !cubic_real_root_obstruction(r.gamma[1], r.gamma[2], r.gamma[3]);
  return r;
}

/// Every field is recomputed from the complex.
inline CounterexampleReport verify_counterexample(std::size_t m, bool with_ghs = false) {
  return verify_complex_report(paper_counterexample(m), with_ghs);
}

inline SimplicialComplex higher_dim_counterexample(std::size_t m, const SimplicialComplex& extra) {
  if (!is_flag(extra)) throw PreconditionError("higher_dim_counterexample: extra complex is not flag");
  if (!extra.is_pure() || !is_eulerian(extra)) throw PreconditionError("higher_dim_counterexample: extra complex is not Eulerian");
  if (!all_roots_real(h_polynomial(extra))) throw PreconditionError("higher_dim_counterexample: extra h is not real-rooted");
  return join(paper_counterexample(m), extra);
}

// ---------------------------------------------------------------------------
// Degree-4 realization.

struct ConeCoordinates {
  long long k = 0;
  long long a = 0;
  long long b = 0;
  friend bool operator==(const ConeCoordinates&, const ConeCoordinates&) = default;
};

/// Cone coordinates of (h1-1, h2-2) in the union of the cones C_k with vertex
/// (2k-1, k^2-k+2) spanned by (1,k-1) and (1,k); C_2 is the ray alpha_2 = 0.
inline ConeCoordinates cone_decompose(long long h1, long long h2) {
  const long long x = h1 - 1, y = h2 - 2;
  if (!(6 <= 2 * x - 2 && 2 * x - 2 <= y && 4 * y <= x * x + 8))
    throw PreconditionError("cone_decompose: (" + std::to_string(h1) + "," + std::to_string(h2) +
                            ") is outside the union of cones");
  auto alpha = [&](long long k) { return y - 2 - k * (x - k); };
  long long k = 0;
  if (alpha(2) == 0 && x >= 4) {
    k = 2;
  } else {
    for (long long j = 3; j <= x + 1; ++j)
      if (alpha(j - 1) >= 0 && alpha(j) <= 0) {
        k = j;
        break;
      }
  }
  if (k == 0) throw PreconditionError("cone_decompose: no cone contains the point");
  ConeCoordinates c{k, 0, h2 - (k - 1) * h1 + k * k - k - 4};
  c.a = h1 - 2 * k - c.b;
  if (c.a < 0 || c.b < 0) throw Error("cone_decompose: negative coordinates");
  return c;
}

struct Realization {
  SimplicialComplex complex;
  ConeCoordinates cone;
  IntPolynomial h;
  bool flag = false;
  bool eulerian = false;
  std::optional<bool> ghs;
};

/// Flag 3-sphere with h = 1 + h1 t + h2 t^2 + h1 t^3 + t^4.
inline Realization realize_h4(long long h1, long long h2, bool verify_ghs = false) {
  Realization r;
  r.cone = cone_decompose(h1, h2);
  const auto [k, a, b] = r.cone;
  SimplicialComplex x;
  if (k == 2) {
    x = cross_polytope(4);
  } else {
    const auto j = join(polygon(static_cast<int>(k + 1)), polygon(static_cast<int>(k + 2)));
    std::optional<Edge> cross;
    for (const auto& e : j.edges()) {
      const bool left_u = j.labels()[e.u].starts_with("L:");
      const bool left_v = j.labels()[e.v].starts_with("L:");
      if (left_u != left_v) {
        cross = e;
        break;
      }
    }
    x = edge_subdivision(j, cross->u, cross->v, fresh_label(j));
  }

  // Two edges, with (k+1)-gon and (k+2)-gon links, not in a common facet.
  std::optional<Edge> ea, eb;
  const auto cand_a = a > 0 ? find_edges_with_link(x, link_is_polygon(static_cast<std::size_t>(k + 1)))
                            : std::vector<Edge>{};
  const auto cand_b = b > 0 ? find_edges_with_link(x, link_is_polygon(static_cast<std::size_t>(k + 2)))
                            : std::vector<Edge>{};
  if (a > 0 && b > 0) {
    for (const auto& p : cand_a) {
      for (const auto& q : cand_b)
        if (!x.contains_face(VertexSet{p.u, p.v, q.u, q.v})) {
          ea = p;
          eb = q;
          break;
        }
      if (ea) break;
    }
  } else {
    if (a > 0 && !cand_a.empty()) ea = cand_a.front();
    if (b > 0 && !cand_b.empty()) eb = cand_b.front();
  }
  if ((a > 0 && !ea) || (b > 0 && !eb)) throw Error("realize_h4: no suitable pair of edges");

  if (ea) {
    std::size_t t = ea->v;
    x = detail::iterate_subdivision(std::move(x), ea->u, t, static_cast<std::size_t>(a));
  }
  if (eb) {
    std::size_t t = eb->v;
    x = detail::iterate_subdivision(std::move(x), eb->u, t, static_cast<std::size_t>(b));
  }

  r.complex = std::move(x);
  r.h = h_polynomial(r.complex);
  r.flag = is_flag(r.complex);
  r.eulerian = r.complex.is_pure() && is_eulerian(r.complex);
  if (verify_ghs) r.ghs = is_ghs(r.complex);
  const IntPolynomial target = reciprocal_quartic(h1, h2);
  if (r.h != target || !r.flag || !r.eulerian || (r.ghs && !*r.ghs)) {
    std::ostringstream msg;
    msg << "realize_h4(" << h1 << "," << h2 << "): verification failed: h=" << r.h.to_string()
        << " flag=" << r.flag << " eulerian=" << r.eulerian;
    throw Error(msg.str());
  }
  return r;
}

struct RegionRow {
  long long h1 = 0, h2 = 0;
  RegionClass region;
  bool realizable = false;
};

inline std::vector<RegionRow> region_grid(long long h1_max, long long h2_max) {
  if (h1_max < 4 || h2_max < 4) throw InputError("region_grid: bounds must be at least 4");
  std::vector<RegionRow> rows;
  for (long long h1 = 0; h1 <= h1_max; ++h1) {
    for (long long h2 = 0; h2 <= h2_max; ++h2) {
      RegionRow row{h1, h2, deg4_region(h1, h2), false};
      try {
        cone_decompose(h1, h2);
        row.realizable = true;
      } catch (const PreconditionError&) {
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::string region_csv(const std::vector<RegionRow>& rows) {
  std::ostringstream out;
  out << "h1,h2,cd,sr,class,realizable\n";
  for (const auto& r : rows)
    out << r.h1 << ',' << r.h2 << ',' << r.region.cd << ',' << r.region.sr << ',' << to_string(r.region.tag) << ','
        << (r.realizable ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace gammacalc
