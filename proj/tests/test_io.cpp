#include <catch_amalgamated.hpp>

#include "gammacalc/io.hpp"

using namespace gammacalc;

TEST_CASE("polynomials are decimal-string arrays") {
  const auto p = int_poly({1, -17, 109});
  CHECK(poly_to_json(p).dump() == R"(["1","-17","109"])");
  CHECK(poly_from_json(Json::parse(R"(["1","-17",109])")) == p);
  const BigInt huge("123456789012345678901234567890");
  CHECK(poly_from_json(Json::array({huge.str()}))[0] == huge);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"(["x"])")), InputError);
  CHECK_THROWS_AS(poly_from_json(Json::parse("[]")), InputError);
}

TEST_CASE("complex JSON round-trips") {
  const auto x = join(polygon(4), cross_polytope(1));
  const auto j = complex_to_json(x);
  CHECK(j.begin().key() == "vertices");
  CHECK(complex_from_json(j) == x);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"vertices":["a"]})")), InputError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"vertices":["a"],"facets":[["b"]]})")), InputError);
}

TEST_CASE("poset JSON round-trips") {
  const auto p = face_poset(polygon(4));
  const auto q = poset_from_json(poset_to_json(p));
  CHECK(q.size() == p.size());
  CHECK(upsilon(q) == upsilon(p));
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements":["a","b"],"covers":[["a"]]})")), InputError);
}

TEST_CASE("builder expressions") {
  auto build = [](const char* s) { return build_complex(Json::parse(s)); };
  CHECK(is_polygon(build(R"({"op":"polygon","m":5})"), 5));
  CHECK(is_cross_polytope(build(R"({"op":"cross","n":4})"), 4));
  CHECK(build(R"({"op":"simplex_boundary","n":3})") == simplex_boundary(3));
  CHECK(build(R"({"op":"simplex","n":2})") == simplex(2));
  CHECK(f_polynomial(build(R"({"op":"join","args":[{"op":"polygon","m":5},{"op":"polygon","m":5}]})")) ==
        int_poly({1, 10, 35, 50, 25}));
  CHECK(is_polygon(build(R"({"op":"barycentric","of":{"op":"polygon","m":4}})"), 8));
  CHECK(is_polygon(build(R"({"op":"sub","edge":["v0","v1"],"times":3,"of":{"op":"polygon","m":4}})"), 7));
  CHECK(build(R"({"op":"suspension","of":{"op":"polygon","m":4}})").dimension() == 2);
  CHECK(f_polynomial(build(R"({"op":"paper","m":1})")) == int_poly({1, 17, 109, 345, 575, 483, 161}));
  const auto c = build(R"({"op":"clique","graph":{"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"],["d","a"]]}})");
  CHECK(is_polygon(c, 4));
  CHECK(is_cross_polytope(build(R"({"vertices":["a","b"],"facets":[["a"],["b"]]})"), 1));

  CHECK_THROWS_AS(build(R"({"op":"polygon"})"), InputError);
  CHECK_THROWS_AS(build(R"({"op":"polygon","m":2})"), InputError);
  CHECK_THROWS_AS(build(R"({"op":"sub","edge":["v0","v2"],"of":{"op":"polygon","m":5}})"), InputError);
  CHECK_THROWS_AS(build(R"({"op":"sub","edge":["v0","zz"],"of":{"op":"polygon","m":5}})"), InputError);
  CHECK_THROWS_AS(build(R"({"op":"join","args":[]})"), InputError);
  CHECK_THROWS_AS(build(R"({"op":"mystery"})"), InputError);
  CHECK_THROWS_AS(build(R"([1,2])"), InputError);
}
