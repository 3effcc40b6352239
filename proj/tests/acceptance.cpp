#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gammacalc/gammacalc.hpp"

using namespace gammacalc;

namespace {

int failures = 0;

void criterion(int id, const std::string& title, const std::function<bool(std::string&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!ok) ++failures;
  std::printf("%s %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
}

IntPolynomial compose(const IntPolynomial& p, const IntPolynomial& q) {
  IntPolynomial r;
  for (std::size_t i = p.size(); i-- > 0;) r = r * q + IntPolynomial::constant(p[i]);
  return r;
}

IntPolynomial nth_derivative(IntPolynomial p, std::size_t k) {
  while (k--) p = p.derivative();
  return p;
}

BigInt factorial(std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= i;
  return r;
}

SimplicialComplex graph_complex(std::size_t n, unsigned mask) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  Graph g(labels);
  unsigned bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1u) g.add_edge(u, v);
  return clique_complex(g);
}

bool nonneg(const IntPolynomial& p) {
  for (const auto& c : p.coefficients())
    if (c < 0) return false;
  return true;
}

}  // namespace

int main() {
  const auto corpus = eulerian_corpus();
  std::vector<NamedComplex> flag_ghs;
  for (const auto& c : corpus)
    if (is_flag(c.complex) && is_ghs(c.complex)) flag_ghs.push_back(c);

  criterion(1, "paper 1 f-polynomial", [](std::string&) {
    return f_polynomial(paper_counterexample(1)) == int_poly({1, 17, 109, 345, 575, 483, 161});
  });

  criterion(2, "paper m gamma = 1+(4+m)t+4t^2+t^3 for m <= 8", [](std::string& d) {
    for (long long m = 0; m <= 8; ++m)
      if (gamma_polynomial(paper_counterexample(static_cast<std::size_t>(m))) != int_poly({1, 4 + m, 4, 1})) {
        d = "m = " + std::to_string(m);
        return false;
      }
    return true;
  });

  criterion(3, "Sturm certifies non-real roots for m = 1, 2", [](std::string&) {
    const auto r1 = verify_counterexample(1);
    const auto r2 = verify_counterexample(2);
    return r1.distinct_root_count == 6 && r1.real_root_count == 2 && !r1.real_rooted &&
           r2.real_root_count < r2.distinct_root_count && r2.cubic_obstruction && !r2.real_rooted;
  });

  criterion(4, "counterexamples stay gamma-nonnegative for m <= 8", [](std::string& d) {
    for (std::size_t m = 0; m <= 8; ++m)
      if (!verify_counterexample(m).gamma_nonneg) {
        d = "m = " + std::to_string(m);
        return false;
      }
    return true;
  });

  criterion(5, "polygon f, h, gamma for 3 <= m <= 50", [](std::string& d) {
    for (long long m = 3; m <= 50; ++m) {
      const auto x = polygon(static_cast<int>(m));
      if (f_polynomial(x) != int_poly({1, m, m}) || h_polynomial(x) != int_poly({1, m - 2, 1}) ||
          gamma_polynomial(x) != int_poly({1, m - 4})) {
        d = "m = " + std::to_string(m);
        return false;
      }
    }
    return true;
  });

  criterion(6, "Dehn-Sommerville on the Eulerian corpus", [&](std::string& d) {
    if (corpus.size() < 100) {
      d = "corpus has only " + std::to_string(corpus.size()) + " members";
      return false;
    }
    for (const auto& c : corpus) {
      const auto f = f_polynomial(c.complex);
      const std::size_t n = c.complex.max_facet_size();
      auto rhs = compose(f, int_poly({0, -1}));
      if (n % 2) rhs = -rhs;
      if (!is_eulerian(c.complex) || compose(f, int_poly({-1, 1})) != rhs) {
        d = c.name;
        return false;
      }
    }
    d = std::to_string(corpus.size()) + " complexes";
    return true;
  });

  criterion(7, "edge subdivision h by face recount on 60 random subdivisions", [&](std::string& d) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    int done = 0;
    while (done < 60) {
      const auto& x = corpus[pick(rng)].complex;
      const auto edges = x.edges();
      if (edges.empty()) continue;
      const Edge e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
      const auto sub = edge_subdivision(x, e.u, e.v, fresh_label(x));
      const auto lk = link(x, VertexSet{e.u, e.v});
      const auto recount = h_from_f(f_polynomial(sub), sub.max_facet_size());
      if (recount != h_polynomial(x) + h_polynomial(lk).shift(1)) {
        d = "mismatch on trial " + std::to_string(done);
        return false;
      }
      ++done;
    }
    return true;
  });

  criterion(8, "join multiplies f, h, gamma on 60 random pairs", [&](std::string& d) {
    std::vector<const NamedComplex*> small;
    for (const auto& c : corpus)
      if (c.complex.facets().size() <= 40) small.push_back(&c);
    std::mt19937 rng(8);
    std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
      const auto& a = *small[pick(rng)];
      const auto& b = *small[pick(rng)];
      const auto j = join(a.complex, b.complex);
      if (f_polynomial(j) != f_polynomial(a.complex) * f_polynomial(b.complex) ||
          h_polynomial(j) != h_polynomial(a.complex) * h_polynomial(b.complex) ||
          gamma_polynomial(j) != gamma_polynomial(a.complex) * gamma_polynomial(b.complex)) {
        d = a.name + " * " + b.name;
        return false;
      }
    }
    return true;
  });

  criterion(9, "link sums give derivatives of f for k <= 3", [&](std::string& d) {
    for (const auto& c : corpus) {
      const auto f = f_polynomial(c.complex);
      for (std::size_t k = 0; k <= 3; ++k)
        if (sum_link_f(c.complex, k) * factorial(k) != nth_derivative(f, k)) {
          d = c.name + ", k = " + std::to_string(k);
          return false;
        }
    }
    return true;
  });

  criterion(10, "flag GHS of dimension <= 4 are real-rooted", [&](std::string& d) {
    std::size_t checked = 0;
    for (const auto& c : flag_ghs) {
      if (c.complex.dimension() > 4) continue;
      ++checked;
      if (!all_roots_real_negative(h_polynomial(c.complex))) {
        d = c.name;
        return false;
      }
    }
    d = std::to_string(checked) + " complexes";
    return checked > 0;
  });

  criterion(11, "gamma_1 = f_0 - 2n >= 0, zero exactly for cross-polytopes", [&](std::string& d) {
    for (const auto& c : flag_ghs) {
      const auto& x = c.complex;
      const auto g = gamma_polynomial(x);
      const BigInt g1 = g[1];
      const BigInt expect = BigInt(x.num_vertices()) - 2 * BigInt(x.max_facet_size());
      if (g1 != expect || g1 < 0 || (g1 == 0) != is_cross_polytope(x)) {
        d = c.name;
        return false;
      }
    }
    d = std::to_string(flag_ghs.size()) + " complexes";
    return true;
  });

  criterion(12, "degree-4 geography matches Sturm; (4,6) has cd = sr = 0", [](std::string& d) {
    for (long long h1 = 4; h1 <= 30; ++h1)
      for (long long h2 = 0; h2 <= 250; ++h2)
        if ((deg4_region(h1, h2).tag == RegionTag::ALL_REAL_NEGATIVE) !=
            all_roots_real_negative(reciprocal_quartic(h1, h2))) {
          d = "(" + std::to_string(h1) + "," + std::to_string(h2) + ")";
          return false;
        }
    const auto r = deg4_region(4, 6);
    return r.cd == 0 && r.sr == 0;
  });

  criterion(13, "realize_h4 on every accepted point with h1 <= 12; GHS on 10 samples", [](std::string& d) {
    std::vector<std::pair<long long, long long>> accepted;
    for (long long h1 = 0; h1 <= 12; ++h1)
      for (long long h2 = 0; h2 <= 200; ++h2) {
        try {
          cone_decompose(h1, h2);
          accepted.emplace_back(h1, h2);
        } catch (const PreconditionError&) {
        }
      }
    for (const auto& [h1, h2] : accepted) {
      const auto r = realize_h4(h1, h2);
      if (!is_flag(r.complex) || !is_eulerian(r.complex) || h_polynomial(r.complex) != reciprocal_quartic(h1, h2)) {
        d = "(" + std::to_string(h1) + "," + std::to_string(h2) + ")";
        return false;
      }
    }
    const std::size_t stride = std::max<std::size_t>(1, accepted.size() / 10);
    int sampled = 0;
    for (std::size_t i = 0; i < accepted.size() && sampled < 10; i += stride, ++sampled) {
      const auto [h1, h2] = accepted[i];
      if (!is_ghs(realize_h4(h1, h2).complex)) {
        d = "not GHS at (" + std::to_string(h1) + "," + std::to_string(h2) + ")";
        return false;
      }
    }
    d = std::to_string(accepted.size()) + " points, " + std::to_string(sampled) + " GHS";
    return !accepted.empty() && sampled == 10;
  });

  criterion(14, "(9,21) is real-rooted but not covered", [](std::string&) {
    if (!all_roots_real_negative(reciprocal_quartic(9, 21))) return false;
    try {
      cone_decompose(9, 21);
      return false;
    } catch (const PreconditionError&) {
      return true;
    }
  });

  criterion(15, "cd-index of polygons and the gamma bridge", [](std::string& d) {
    for (long long m = 3; m <= 12; ++m) {
      const auto phi = cd_index(face_poset(polygon(static_cast<int>(m))));
      CDPolynomial want(2);
      want.add("cc", 1);
      want.add("d", m - 2);
      if (!(phi == want)) {
        d = "polygon(" + std::to_string(m) + "): " + phi.to_string();
        return false;
      }
    }
    std::vector<std::pair<std::string, GradedPoset>> posets;
    for (int m = 3; m <= 12; ++m) posets.emplace_back("polygon", face_poset(polygon(m)));
    for (int n = 0; n <= 4; ++n) posets.emplace_back("simplex_boundary", face_poset(simplex_boundary(n)));
    for (int n = 0; n <= 3; ++n) posets.emplace_back("cross", face_poset(cross_polytope(n)));
    for (const auto& [name, p] : posets)
      if (cd_gamma(cd_index(p)) != gamma_from_h(order_complex_h(p)) || !gamma_cd_bridge_check(p)) {
        d = name;
        return false;
      }
    return true;
  });

  criterion(16, "Babson identity on the poset corpus", [](std::string& d) {
    const auto posets = poset_corpus();
    for (const auto& p : posets) {
      const auto h = order_complex_h(p.poset);
      const auto lhs = eval_rational(h, BigRational(-1));
      const auto rhs = cd_index(p.poset).specialize(int_poly({0}), int_poly({-2}))[0];
      if (lhs != BigRational(rhs) || !babson_check(p.poset)) {
        d = p.name;
        return false;
      }
    }
    d = std::to_string(posets.size()) + " posets";
    return true;
  });

  criterion(17, "growth series vs BFS oracle: graphs on <= 5 vertices, polygons m <= 7", [](std::string& d) {
    std::size_t checked = 0;
    for (std::size_t n = 0; n <= 5; ++n) {
      const unsigned edges = static_cast<unsigned>(n * (n - (n ? 1 : 0)) / 2);
      for (unsigned mask = 0; mask < (1u << edges); ++mask) {
        const auto x = graph_complex(n, mask);
        if (series_expand(growth_series(x), 7) != bfs_growth_oracle(x, 7)) {
          d = "n = " + std::to_string(n) + ", mask = " + std::to_string(mask);
          return false;
        }
        ++checked;
      }
    }
    for (int m = 4; m <= 7; ++m) {
      const auto x = polygon(m);
      if (series_expand(growth_series(x), 7) != bfs_growth_oracle(x, 7)) {
        d = "polygon(" + std::to_string(m) + ")";
        return false;
      }
      ++checked;
    }
    d = std::to_string(checked) + " complexes";
    return true;
  });

  criterion(18, "first 30 growth coefficients positive for infinite groups", [&](std::string& d) {
    std::size_t checked = 0;
    for (const auto& c : corpus) {
      if (!is_flag(c.complex)) continue;
      const auto w = growth_series(c.complex);
      if (w.rat.denominator().degree().value_or(0) == 0) continue;
      ++checked;
      const auto s = series_expand(w, 29);
      for (const auto& a : s)
        if (a <= 0) {
          d = c.name;
          return false;
        }
    }
    d = std::to_string(checked) + " groups";
    return checked > 0;
  });

  criterion(19, "radius one implies cross-polytope join simplex: graphs on <= 6 vertices", [](std::string& d) {
    std::size_t checked = 0, radius_one = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
      const unsigned edges = static_cast<unsigned>(n * (n - (n ? 1 : 0)) / 2);
      for (unsigned mask = 0; mask < (1u << edges); ++mask) {
        const auto x = graph_complex(n, mask);
        const auto r = radius_one_check(x, 1e-9);
        ++checked;
        if (r.ambiguous) {
          d = "ambiguous at n = " + std::to_string(n) + ", mask = " + std::to_string(mask);
          return false;
        }
        if (!r.radius_one) continue;
        ++radius_one;
        if (!is_crosspolytope_join_simplex(x)) {
          d = "n = " + std::to_string(n) + ", mask = " + std::to_string(mask);
          return false;
        }
      }
    }
    d = std::to_string(checked) + " graphs, " + std::to_string(radius_one) + " of radius one";
    return true;
  });

  criterion(20, "smallest-modulus root of h is real negative on flag GHS members", [&](std::string& d) {
    for (const auto& c : flag_ghs) {
      const auto h = h_polynomial(c.complex);
      if (h.degree().value_or(0) == 0) continue;
      const auto s = smallest_modulus_root_is_real_negative(h, 1e-9);
      if (!s.real_negative) {
        d = c.name;
        return false;
      }
    }
    d = std::to_string(flag_ghs.size()) + " complexes";
    return true;
  });

  std::printf("%d of 20 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
