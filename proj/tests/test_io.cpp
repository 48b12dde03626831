#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltak/errors.hpp"
#include "deltak/json_io.hpp"
#include "deltak/selftest.hpp"

using namespace deltak;

TEST_CASE("family format") {
  const auto in = parse_input(Json::parse(R"({"n": 3, "feasible": [[1,2,3],[1],[2],[3]]})"));
  CHECK(in.kind == InputKind::Family);
  CHECK(in.dm == three_singletons_family());
  // Signed spelling of the same family.
  const auto sig = parse_input(Json::parse(R"({"n": 3, "feasible": [[1,2,3],[1,-2,-3],[-1,2,-3],[-1,-2,3]]})"));
  CHECK(sig.dm == three_singletons_family());
  CHECK(parse_input(to_json(in.dm)).dm == in.dm);
}

TEST_CASE("matrix and graph formats") {
  const auto m = parse_input(Json::parse(R"({"field": "Q", "n": 1, "rows": [[0, 0, 1]]})"));
  CHECK(m.kind == InputKind::Matrix);
  CHECK(m.dm.feasible() == std::vector<Subset>{1});
  const auto half = parse_input(Json::parse(R"({"field": "Q", "n": 1, "rows": [["1/2", "1/2", "-1/2"]]})"));
  CHECK(half.dm.feasible() == std::vector<Subset>{0, 1});
  const auto g = parse_input(Json::parse(R"({"n": 2, "edges": [[1, 2]]})"));
  CHECK(g.kind == InputKind::Graph);
  CHECK(g.dm.feasible() == std::vector<Subset>{0, 3});
  REQUIRE(g.matrix.has_value());
  CHECK(g.matrix->field == Field::GF2);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_input(Json::parse(R"({"feasible": []})")), InvalidInputError);
  CHECK_THROWS_AS(parse_input(Json::parse(R"({"n": 2, "feasible": []})")), InvalidInputError);
  CHECK_THROWS_AS(parse_input(Json::parse(R"({"n": 2, "feasible": [[3]]})")), InvalidInputError);
  CHECK_THROWS_AS(parse_input(Json::parse(R"({"n": 2, "feasible": [[1,-1]]})")), InvalidInputError);
  CHECK_THROWS_AS(parse_input(Json::parse(R"({"n": 3, "feasible": [[], [1,2,3]]})")), InvalidInputError);
  CHECK_THROWS_AS(parse_input(Json::parse(R"({"n": 1, "rows": [[0, 1]]})")), InvalidInputError);
  CHECK_THROWS_AS(parse_input(Json::parse(R"({"n": 1})")), InvalidInputError);
  CHECK_THROWS_AS(read_input_file("/nonexistent/input.json"), InvalidInputError);
}

TEST_CASE("polynomial serialization") {
  const UniPoly p({Rational(4), Rational(0), Rational(-1, 2)});
  const Json j = poly_to_json(p);
  CHECK(j.dump() == R"({"0":"4","2":"-1/2"})");
  CHECK(poly_from_json(j) == p);
  CHECK(poly_to_json(UniPoly()).dump() == "{}");
}
