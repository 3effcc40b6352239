#include <catch_amalgamated.hpp>

#include <cstdlib>

#include "commands.hpp"

using namespace gammacalc;
using namespace gammacalc::cli;

namespace {

Json run(const Outcome& o) {
  INFO(o.err);
  REQUIRE(o.code == kOk);
  return Json::parse(o.out);
}

std::vector<std::string> strings(const Json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace

TEST_CASE("invariants") {
  const Options opt;
  auto j = run(cmd_invariants(R"({"op":"polygon","m":5})", opt));
  CHECK(strings(j["f"]) == std::vector<std::string>{"1", "5", "5"});
  CHECK(strings(j["h"]) == std::vector<std::string>{"1", "3", "1"});
  CHECK(strings(j["gamma"]) == std::vector<std::string>{"1", "1"});
  CHECK(j["flag"] == true);
  CHECK(j["eulerian"] == true);
  CHECK(j["charney_davis"] == "1");

  j = run(cmd_invariants(R"({"op":"cross","n":4})", opt));
  CHECK(strings(j["gamma"]) == std::vector<std::string>{"1"});

  j = run(cmd_invariants(R"({"op":"paper","m":1})", opt));
  CHECK(strings(j["f"]) == std::vector<std::string>{"1", "17", "109", "345", "575", "483", "161"});

  Options ghs;
  ghs.ghs = true;
  j = run(cmd_invariants(R"({"op":"polygon","m":6})", ghs));
  CHECK(j["ghs"] == true);
}

TEST_CASE("exit codes") {
  const Options opt;
  CHECK(run_guarded([&] { return cmd_invariants(R"({"op":"simplex","n":2})", opt); }).code == kPreconditionError);
  CHECK(run_guarded([&] { return cmd_invariants(R"({"op":"nope"})", opt); }).code == kInputError);
  CHECK(run_guarded([&] { return cmd_invariants("{not json", opt); }).code == kInputError);
  CHECK(run_guarded([&] { return cmd_invariants("/no/such/file.json", opt); }).code == kInputError);
  CHECK(run_guarded([&] { return cmd_realize(9, 21, opt); }).code == kPreconditionError);
  CHECK(run_guarded([&] { return cmd_growth(R"({"op":"polygon","m":3})", 5, opt); }).code == kPreconditionError);
  CHECK(run_guarded([&] { return cmd_paper(-1, opt); }).code == kInputError);
  CHECK(run_guarded([&] { return cmd_cdindex(R"({"op":"simplex","n":2})", opt); }).code == kPreconditionError);

  Options small;
  small.max_faces = 10;
  CHECK(run_guarded([&] { return cmd_invariants(R"({"op":"cross","n":3})", small); }).code == kPreconditionError);
}

TEST_CASE("max-faces cap from the environment") {
  ::setenv("GAMMACALC_MAX_FACES", "12", 1);
  CHECK(max_faces_from_env(100) == 12);
  ::setenv("GAMMACALC_MAX_FACES", "lots", 1);
  CHECK_THROWS_AS(max_faces_from_env(100), InputError);
  ::unsetenv("GAMMACALC_MAX_FACES");
  CHECK(max_faces_from_env(100) == 100);
}

TEST_CASE("roots") {
  const Options opt;
  auto j = run(cmd_roots(R"(["1","9","21","9","1"])", opt));
  CHECK(j["all_real_negative"] == true);
  CHECK(j["real_root_count"] == 4);
  CHECK(j["deg4_region"]["class"] == "ALL_REAL_NEGATIVE");
  CHECK(j["roots"].size() == 4);

  j = run(cmd_roots(R"({"op":"paper","m":1})", opt));
  CHECK(j["all_real_negative"] == false);
  CHECK(j["real_root_count"] == 2);
  CHECK(j["deg4_region"].is_null());

  j = run(cmd_roots(R"(["1","4","6","4","1"])", opt));
  CHECK(j["all_real_negative"] == true);
  CHECK(j["roots"].size() == 1);
  CHECK(j["roots"][0]["multiplicity"] == 4);
}

TEST_CASE("paper") {
  const Options opt;
  auto o = cmd_paper(1, opt);
  CHECK(o.code == kOk);
  auto j = Json::parse(o.out);
  CHECK(strings(j["f"]) == std::vector<std::string>{"1", "17", "109", "345", "575", "483", "161"});
  CHECK(j["real_rooted"] == false);
  CHECK(j["contracts_hold"] == true);

  j = run(cmd_paper(0, opt));
  CHECK(j["real_rooted"] == true);
  j = run(cmd_paper(2, opt));
  CHECK(j["cubic_obstruction"] == true);
}

TEST_CASE("realize, region, growth, cdindex") {
  const Options opt;
  auto j = run(cmd_realize(7, 12, opt));
  CHECK(strings(j["h"]) == std::vector<std::string>{"1", "7", "12", "7", "1"});
  CHECK(j["flag"] == true);
  CHECK(j["eulerian"] == true);
  CHECK(j["complex"].contains("facets"));

  const auto csv = cmd_region(12, 30);
  CHECK(csv.code == kOk);
  CHECK(csv.out.find("\n4,6,0,0,ALL_REAL_NEGATIVE,false\n") != std::string::npos);

  j = run(cmd_growth(R"({"op":"cross","n":1})", 5, opt));
  CHECK(j.dump() ==
        R"({"numerator":["1","1"],"denominator":["1","-1"],"coefficients":["1","2","2","2","2","2"]})");

  j = run(cmd_cdindex(R"({"op":"polygon","m":5})", opt));
  CHECK(j["cd_index"] == "c^2 + 3d");
  CHECK(j["gamma_bridge"] == true);
  CHECK(j["babson"] == true);

  j = run(cmd_cdindex(R"({"elements":["0","x","y","1"],"covers":[["0","x"],["0","y"],["x","1"],["y","1"]]})", opt));
  CHECK(j["cd_index"] == "c");
}

TEST_CASE("output is deterministic") {
  const Options opt;
  CHECK(cmd_paper(1, opt).out == cmd_paper(1, opt).out);
  CHECK(cmd_realize(8, 16, opt).out == cmd_realize(8, 16, opt).out);
  CHECK(cmd_roots(R"({"op":"paper","m":2})", opt).out == cmd_roots(R"({"op":"paper","m":2})", opt).out);
  const auto seed = cmd_seed_complexes();
  CHECK(seed.code == kOk);
  const auto j = Json::parse(seed.out);
  CHECK(j["complexes"].size() >= 100);
  CHECK(seed.out == cmd_seed_complexes().out);
}
