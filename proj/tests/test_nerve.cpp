#include "doctest.h"

#include "hakit/nerve.hpp"

using namespace hakit;

TEST_CASE("nerve of Z/2 has 2^n strings and trivial rational homology") {
  NerveReport r = nerve_homology(cyclic_group(2), 3);
  CHECK(r.sizes == std::vector<int>{1, 2, 4, 8});
  CHECK(r.homology == std::vector<int>{1, 0, 0, 0});
  CHECK(r.report.all_pass());
}

TEST_CASE("pair groupoid is equivalent to a point") {
  NerveReport r = nerve_homology(pair_groupoid(3), 2);
  CHECK(r.sizes == std::vector<int>{3, 9, 27});
  CHECK(r.homology == std::vector<int>{1, 0, 0});
}

TEST_CASE("disjoint union adds components") {
  NerveReport r = nerve_homology(disjoint_union(cyclic_group(2), pair_groupoid(1)), 3);
  CHECK(r.homology == std::vector<int>{2, 0, 0, 0});
  CHECK(r.report.all_pass());
}

TEST_CASE("sign character of Z/2 has vanishing homology") {
  FiniteGroupoid G = cyclic_group(2);
  auto E = GroupoidRepresentation::character(G, {1, -1});
  NerveReport r = nerve_homology(G, 3, &E);
  CHECK(r.homology == std::vector<int>{0, 0, 0, 0});
  CHECK_THROWS_AS(GroupoidRepresentation::character(G, {1}), InputError);
}

TEST_CASE("closed strings of Z/2") {
  BurgheleaReport b = burghelea_compare(cyclic_group(2), 2);
  CHECK(b.closed_strings == std::vector<int>{2, 4, 8});
  CHECK(b.cyclic_morphism);
  CHECK(b.report.all_pass());
}

TEST_CASE("malformed groupoid files are rejected") {
  CHECK_THROWS(parse_groupoid("{\"objects\": 1}"));
  CHECK_THROWS(parse_groupoid("not json"));
}
