#include "doctest.h"

#include "hakit/lierinehart.hpp"

using namespace hakit;

namespace {
LieRinehartData ax_b(Scalar eps_x, Scalar eps_y) {
  return lie_algebra_data("ax+b", {"x", "y"}, {{0, 1, 1, 1}}, {eps_x, eps_y});
}
}  // namespace

TEST_CASE("PBW truncation of an abelian rank two algebra") {
  LieRinehartTruncation T(lie_algebra_data("abelian", {"x", "y"}, {}, {0, 0}), 2);
  CHECK(T.dim() == 6);
  CHECK(T.mul(T.generator(0), T.generator(1)) == T.mul(T.generator(1), T.generator(0)));
}

TEST_CASE("straightening yx = xy - y") {
  LieRinehartTruncation T(ax_b(0, 0), 3);
  Vec x = T.generator(0), y = T.generator(1);
  CHECK(T.mul(y, x) == T.mul(x, y) - y);
  CHECK_THROWS_AS(T.mul(T.mul(x, x), T.mul(y, y)), TruncationTooSmall);
}

TEST_CASE("Euler field on dual numbers: Xt = tX + t") {
  LieRinehartTruncation T(dual_numbers_rank_one(Vec::unit(1), Vec()), 3);
  Vec t = T.base_element(Vec::unit(1)), X = T.generator(0);
  CHECK(T.mul(X, t) == T.mul(t, X) + t);
}

TEST_CASE("anchor X(t) = 1 on dual numbers is not a derivation") {
  CHECK_THROWS_AS(dual_numbers_rank_one(Vec::unit(0), Vec()).validate(), InputError);
}

TEST_CASE("modular character is flat and gives an antihomomorphism") {
  FlatnessReport f = antipode_flatness_check(LieRinehartTruncation(ax_b(1, 0), 4));
  CHECK(f.flat);
  CHECK(f.antihomomorphism);
  CHECK(f.report.all_pass());
}

TEST_CASE("connection on y is curved and names witnesses") {
  FlatnessReport f = antipode_flatness_check(LieRinehartTruncation(ax_b(0, 1), 4));
  CHECK_FALSE(f.flat);
  CHECK_FALSE(f.antihomomorphism);
  const AxiomResult* c = f.report.find("Curvature");
  REQUIRE(c);
  CHECK(c->witness == "(x, y)");
  const AxiomResult* a = f.report.find("AntiHom");
  REQUIRE(a);
  CHECK(a->witness == "(y, x)");
}

TEST_CASE("translation map with reversed second factor") {
  LieRinehartTruncation T(ax_b(1, 0), 4);
  CHECK(translation_map_check(T, 3).all_pass());
  CHECK_FALSE(translation_map_check(T, 3, true).all_pass());
}

TEST_CASE("literal factor order is harmless for abelian algebras") {
  LieRinehartTruncation T(lie_algebra_data("abelian", {"x", "y"}, {}, {0, 0}), 3);
  CHECK(translation_map_check(T, 3, true).all_pass());
}

TEST_CASE("antisymmetrisation map on the truncation") {
  LieRinehartTruncation T(ax_b(1, 0), 4);
  AxiomReport r = antisymmetrisation_check(T, 2);
  CHECK(r.all_pass());
}
