#include <catch_amalgamated.hpp>

#include "gammacalc/constructions.hpp"

using namespace gammacalc;

TEST_CASE("counterexample f-polynomials") {
  CHECK(f_polynomial(paper_counterexample(0)) == int_poly({1, 16, 100, 313, 519, 435, 145}));
  CHECK(f_polynomial(paper_counterexample(1)) == int_poly({1, 17, 109, 345, 575, 483, 161}));
}

TEST_CASE("counterexample gamma grows only in the linear term") {
  for (long long m = 0; m <= 8; ++m) {
    const auto r = verify_counterexample(static_cast<std::size_t>(m));
    INFO("m = " << m);
    CHECK(r.gamma == int_poly({1, 4 + m, 4, 1}));
    CHECK(r.gamma_nonneg);
    CHECK(r.flag);
    CHECK(r.eulerian);
    CHECK(r.real_rooted == (m == 0));
  }
}

TEST_CASE("certificates of non-real roots") {
  const auto r1 = verify_counterexample(1);
  CHECK(r1.distinct_root_count == 6);
  CHECK(r1.real_root_count == 2);
  CHECK_FALSE(r1.real_rooted);

  const auto r2 = verify_counterexample(2);
  CHECK(r2.cubic_obstruction);  // 16 < 3 * 6 * 1
  CHECK(r2.real_root_count < r2.distinct_root_count);

  const auto r0 = verify_counterexample(0, true);
  CHECK(r0.real_rooted);
  CHECK_FALSE(r0.cubic_obstruction);
  REQUIRE(r0.ghs.has_value());
  CHECK(*r0.ghs);
}

TEST_CASE("higher-dimensional counterexamples") {
  for (const auto& extra : {polygon(5), cross_polytope(1), cross_polytope(2)}) {
    const auto x = higher_dim_counterexample(1, extra);
    CHECK(x.dimension() == 5 + extra.dimension() + 1);
    CHECK_FALSE(all_roots_real(h_polynomial(x)));
  }
  CHECK_THROWS_AS(higher_dim_counterexample(1, polygon(3)), PreconditionError);
  CHECK_THROWS_AS(higher_dim_counterexample(1, simplex(1)), PreconditionError);
}

TEST_CASE("cone coordinates") {
  CHECK(cone_decompose(7, 12) == ConeCoordinates{2, 0, 3});
  CHECK(cone_decompose(5, 8) == ConeCoordinates{2, 0, 1});
  CHECK(cone_decompose(6, 10) == ConeCoordinates{2, 0, 2});
  CHECK(cone_decompose(7, 13) == ConeCoordinates{3, 0, 1});
  CHECK_THROWS_AS(cone_decompose(4, 6), PreconditionError);
  CHECK_THROWS_AS(cone_decompose(9, 21), PreconditionError);
  CHECK_THROWS_AS(cone_decompose(6, 14), PreconditionError);

  // Every accepted point satisfies the cone identity.
  for (long long h1 = 0; h1 <= 20; ++h1)
    for (long long h2 = 0; h2 <= 120; ++h2) {
      try {
        const auto c = cone_decompose(h1, h2);
        CHECK(c.a >= 0);
        CHECK(c.b >= 0);
        CHECK(h1 - 1 == 2 * c.k - 1 + c.a + c.b);
        CHECK(h2 - 2 == c.k * c.k - c.k + 2 + c.a * (c.k - 1) + c.b * c.k);
      } catch (const PreconditionError&) {
      }
    }
}

TEST_CASE("real-rooted points not covered by the cones") {
  // Real-rooted, rejected by cone_decompose, and not the h of a join of two
  // polygons (those are realized directly).
  auto is_polygon_join = [](long long h1, long long h2) {
    for (long long p = 3; p <= h1 + 1; ++p) {
      const long long q = h1 + 4 - p;
      if (q >= 3 && h2 == 2 + (p - 2) * (q - 2)) return true;
    }
    return false;
  };
  std::vector<long long> uncovered;
  for (long long h2 = 0; h2 <= 54; ++h2) {
    for (long long h1 = 0; h1 <= 30; ++h1) {
      if (!all_roots_real_negative(reciprocal_quartic(h1, h2)) || is_polygon_join(h1, h2)) continue;
      try {
        cone_decompose(h1, h2);
      } catch (const PreconditionError&) {
        uncovered.push_back(h2);
      }
    }
  }
  CHECK(uncovered == std::vector<long long>{21, 25, 31, 35, 36, 41, 43, 48, 49, 54});
}

TEST_CASE("realizing degree-4 h-polynomials") {
  const auto r = realize_h4(7, 12);
  CHECK(r.h == int_poly({1, 7, 12, 7, 1}));
  CHECK(r.flag);
  CHECK(r.eulerian);
  CHECK(all_roots_real_negative(r.h));

  for (long long h1 = 5; h1 <= 10; ++h1)
    for (long long h2 = 0; h2 <= 40; ++h2) {
      try {
        cone_decompose(h1, h2);
      } catch (const PreconditionError&) {
        continue;
      }
      const auto x = realize_h4(h1, h2);
      CHECK(x.h == reciprocal_quartic(h1, h2));
    }

  const auto g = realize_h4(8, 16, true);
  REQUIRE(g.ghs.has_value());
  CHECK(*g.ghs);
  CHECK_THROWS_AS(realize_h4(9, 21), PreconditionError);
}

TEST_CASE("the join of polygons sits at the cone vertex") {
  for (long long k = 3; k <= 6; ++k) {
    const auto h = h_polynomial(join(polygon(static_cast<int>(k + 1)), polygon(static_cast<int>(k + 2))));
    CHECK(h[1] == 2 * k - 1);
    CHECK(h[2] == k * k - k + 2);
  }
}

TEST_CASE("region grid") {
  const auto rows = region_grid(12, 30);
  CHECK(rows.size() == 13 * 31);
  auto find = [&](long long h1, long long h2) {
    for (const auto& r : rows)
      if (r.h1 == h1 && r.h2 == h2) return r;
    FAIL("row missing");
    return rows.front();
  };
  CHECK(find(4, 6).region.cd == 0);
  CHECK(find(4, 6).region.sr == 0);
  CHECK(find(9, 21).region.tag == RegionTag::ALL_REAL_NEGATIVE);
  CHECK_FALSE(find(9, 21).realizable);
  CHECK(find(7, 12).realizable);
  const auto csv = region_csv(rows);
  CHECK(csv.rfind("h1,h2,cd,sr,class,realizable\n", 0) == 0);
  CHECK(csv.find("\n9,21,5,5,ALL_REAL_NEGATIVE,false\n") != std::string::npos);
  CHECK_THROWS_AS(region_grid(3, 10), InputError);
}
