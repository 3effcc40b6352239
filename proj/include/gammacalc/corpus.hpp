#pragma once

// A fixed, reproducible collection of Eulerian complexes and posets used by
// the property tests and exported by the command-line tool.

#include <random>
#include <string>
#include <vector>

#include "gammacalc/complex.hpp"
#include "gammacalc/constructions.hpp"
#include "gammacalc/posets.hpp"

namespace gammacalc {

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

struct NamedPoset {
  std::string name;
  GradedPoset poset;
};

/// Uniformly chosen edge, subdivided with a fresh label.
template <typename Rng>
SimplicialComplex random_edge_subdivision(const SimplicialComplex& x, Rng& rng) {
  const auto edges = x.edges();
  if (edges.empty()) throw PreconditionError("random_edge_subdivision: complex has no edges");
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  const Edge e = edges[pick(rng)];
  return edge_subdivision(x, e.u, e.v, fresh_label(x));
}

/// Small flag spheres that serve as building blocks.
inline std::vector<NamedComplex> corpus_blocks() {
  std::vector<NamedComplex> out;
  for (int m = 4; m <= 7; ++m) out.push_back({"polygon(" + std::to_string(m) + ")", polygon(m)});
  for (int n = 1; n <= 3; ++n) out.push_back({"cross(" + std::to_string(n) + ")", cross_polytope(n)});
  return out;
}

/// At least 100 Eulerian complexes (spheres) of dimension at most 5, built
/// from polygons, cross-polytopes and simplex boundaries by joins,
/// suspensions and edge subdivisions. Deterministic.
inline std::vector<NamedComplex> eulerian_corpus() {
  std::vector<NamedComplex> out;
  for (int m = 3; m <= 12; ++m) out.push_back({"polygon(" + std::to_string(m) + ")", polygon(m)});
  for (int n = 0; n <= 4; ++n) out.push_back({"cross(" + std::to_string(n) + ")", cross_polytope(n)});
  for (int n = 1; n <= 4; ++n) out.push_back({"simplex_boundary(" + std::to_string(n) + ")", simplex_boundary(n)});
  for (int m = 3; m <= 7; ++m)
    out.push_back({"suspension(polygon(" + std::to_string(m) + "))", suspension(polygon(m))});
  for (int n = 2; n <= 3; ++n)
    out.push_back({"suspension(simplex_boundary(" + std::to_string(n) + "))", suspension(simplex_boundary(n))});
  out.push_back({"suspension(suspension(polygon(5)))", suspension(suspension(polygon(5)))});
  for (int p = 3; p <= 7; ++p)
    for (int q = p; q <= 7; ++q)
      out.push_back({"join(polygon(" + std::to_string(p) + "),polygon(" + std::to_string(q) + "))",
                     join(polygon(p), polygon(q))});
  for (int p = 3; p <= 7; ++p)
    out.push_back({"join(polygon(" + std::to_string(p) + "),simplex_boundary(3))", join(polygon(p), simplex_boundary(3))});
  out.push_back({"join(polygon(5),cross(2))", join(polygon(5), cross_polytope(2))});
  out.push_back({"join(polygon(4),cross(3))", join(polygon(4), cross_polytope(3))});
  out.push_back({"suspension(join(polygon(4),polygon(5)))", suspension(join(polygon(4), polygon(5)))});
  out.push_back({"join(join(polygon(5),polygon(5)),polygon(5))", join(join(polygon(5), polygon(5)), polygon(5))});

  // Random iterated edge subdivisions of small spheres.
  std::mt19937 rng(20240601u);
  const std::vector<NamedComplex> bases = {
      {"polygon(4)", polygon(4)},
      {"cross(3)", cross_polytope(3)},
      {"simplex_boundary(3)", simplex_boundary(3)},
      {"suspension(polygon(5))", suspension(polygon(5))},
      {"cross(4)", cross_polytope(4)},
      {"join(polygon(4),polygon(5))", join(polygon(4), polygon(5))},
  };
  for (const auto& base : bases) {
    SimplicialComplex x = base.complex;
    for (int step = 1; step <= 8; ++step) {
      x = random_edge_subdivision(x, rng);
      out.push_back({"sub^" + std::to_string(step) + "(" + base.name + ")#" + std::to_string(out.size()), x});
    }
  }
  out.push_back({"paper(0)", paper_counterexample(0)});
  out.push_back({"paper(1)", paper_counterexample(1)});
  return out;
}

/// Flag members of the corpus: the Eulerian flag spheres.
inline std::vector<NamedComplex> flag_corpus() {
  std::vector<NamedComplex> out;
  for (auto& c : eulerian_corpus())
    if (is_flag(c.complex)) out.push_back(std::move(c));
  return out;
}

/// Face posets of polygons, simplex boundaries, cross-polytopes and a few
/// joins, plus the Boolean lattices B_1..B_4.
inline std::vector<NamedPoset> poset_corpus() {
  std::vector<NamedPoset> out;
  for (int m = 3; m <= 12; ++m) out.push_back({"face_poset(polygon(" + std::to_string(m) + "))", face_poset(polygon(m))});
  for (int n = 0; n <= 4; ++n)
    out.push_back({"face_poset(simplex_boundary(" + std::to_string(n) + "))", face_poset(simplex_boundary(n))});
  for (int n = 0; n <= 3; ++n)
    out.push_back({"face_poset(cross(" + std::to_string(n) + "))", face_poset(cross_polytope(n))});
  out.push_back({"face_poset(suspension(polygon(5)))", face_poset(suspension(polygon(5)))});
  out.push_back({"face_poset(join(polygon(4),polygon(4)))", face_poset(join(polygon(4), polygon(4)))});
  for (int n = 1; n <= 4; ++n)
    out.push_back({"boolean(" + std::to_string(n) + ")", boolean_lattice(n)});
  return out;
}

}  // namespace gammacalc
