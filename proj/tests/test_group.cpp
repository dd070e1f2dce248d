#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsd/group.hpp"

using namespace fsd;

TEST_CASE("group basics") {
  Group g({2, 4, 8});
  CHECK(g.order() == 64);
  CHECK(g.exponent() == 8);
  CHECK(g.rank() == 3);

  long a = g.index_of({1, 2, 6});
  long b = g.index_of({1, 3, 5});
  CHECK(g.coords_of(a) == Coords{1, 2, 6});
  CHECK(g.add(a, b) == g.index_of({0, 1, 3}));
  CHECK(g.add(a, g.neg(a)) == 0);
  CHECK(g.sub(a, a) == 0);
  CHECK(g.scale(3, a) == g.index_of({1, 6, 2}));
}

TEST_CASE("coordinates are reduced on input") {
  Group g({4});
  CHECK(g.index_of({-1}) == 3);
  CHECK(g.index_of({7}) == 3);
}

TEST_CASE("element orders") {
  Group g({2, 4});
  CHECK(g.element_order(0) == 1);
  CHECK(g.element_order(g.index_of({1, 0})) == 2);
  CHECK(g.element_order(g.index_of({1, 1})) == 4);
  CHECK(g.element_order(g.index_of({0, 2})) == 2);
}

TEST_CASE("group literal round trip") {
  Group g = Group::parse("Z4xZ2^3");
  CHECK(g.moduli() == std::vector<long>{4, 2, 2, 2});
  CHECK(g.to_string() == "Z4xZ2^3");
  CHECK(Group::parse("Z9").order() == 9);
  CHECK_THROWS_AS(Group::parse("4xZ2"), std::invalid_argument);
  CHECK_THROWS_AS(Group::parse(""), std::invalid_argument);
}

TEST_CASE("element literal round trip") {
  Group g({2, 4, 8});
  long a = g.parse_element("(1,0,5)");
  CHECK(g.format_element(a) == "(1,0,5)");
  Group z4({4});
  CHECK(z4.parse_element("3") == 3);
  CHECK(z4.format_element(3) == "3");
  CHECK_THROWS_AS(g.parse_element("(1,0)"), std::invalid_argument);
}

TEST_CASE("trivial group") {
  Group g({1});
  CHECK(g.order() == 1);
  CHECK(g.is_trivial());
  CHECK(g.add(0, 0) == 0);
}
