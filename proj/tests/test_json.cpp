#include <doctest.h>

#include "nesto/buildset.hpp"
#include "nesto/errors.hpp"
#include "nesto/json_io.hpp"
#include "nesto/nested.hpp"
#include "nesto/poset.hpp"

using namespace nesto;

TEST_CASE("polynomials") {
  CHECK(to_json(IntPolynomial{1, 3}).dump() == "[1,3]");
  CHECK(to_json(IntPolynomial{}).dump() == "[]");
  CHECK(polynomial_from_json(Json::parse("[1,6,6,1]")) == IntPolynomial{1, 6, 6, 1});
  CHECK_THROWS_AS(polynomial_from_json(Json::parse("{}")), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse("[1.5]")), ParseError);
}

TEST_CASE("building sets round trip") {
  const auto b = graphical_building_set(path_graph(3));
  const auto j = to_json(b);
  CHECK(j.dump() == R"({"ground":[1,2,3],"elements":[[1],[2],[3],[1,2],[2,3],[1,2,3]]})");
  CHECK(building_set_from_json(j) == b);
  CHECK_THROWS_AS(building_set_from_json(Json::parse(R"({"ground":[1,2],"elements":[[1]]})")), ParseError);
  CHECK_THROWS_AS(building_set_from_json(Json::parse(R"({"ground":[1,2],"elements":[[1],[2],[0]]})")), ParseError);
  CHECK_THROWS_AS(building_set_from_json(Json::parse(R"({"elements":[]})")), ParseError);
}

TEST_CASE("census and poset") {
  CHECK(to_json(enumerate_nested_sets(graphical_building_set(path_graph(3)))).dump() == "[1,5,5]");
  const auto a = to_json(build_poset(6)).dump();
  const auto b = to_json(build_poset(6)).dump();
  CHECK(a == b);
  const auto j = Json::parse(a);
  CHECK(j["nodes"].size() == 6);
}
