#include "doctest.h"

#include "hakit/jets.hpp"

using namespace hakit;

namespace {
LieRinehartData ax_b() { return lie_algebra_data("ax+b", {"x", "y"}, {{0, 1, 1, 1}}, {0, 0}); }
}  // namespace

TEST_CASE("antipode of rank one jets alternates sign by degree") {
  JetTruncation J(lie_algebra_data("line", {"x"}, {}, {0}), 3);
  CHECK(J.antipode() == LinearMap::from_dense({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}));
}

TEST_CASE("jet axioms for [x,y] = y") {
  for (int p = 1; p <= 3; ++p) {
    JetTruncation J(ax_b(), p);
    CHECK(jet_axiom_check(J).all_pass());
    CHECK(J.antipode() * J.antipode() == LinearMap::identity(J.dim()));
  }
}

TEST_CASE("module coproduct legs") {
  JetTruncation J(ax_b(), 3);
  CHECK(jet_module_coproduct_check(J).all_pass());
  CHECK_FALSE(jet_module_coproduct_check(J, true).all_pass());
}

TEST_CASE("F map sign on a nonabelian algebra") {
  JetTruncation J(ax_b(), 3);
  AxiomReport signed_F = jets_F_map_check(J, 1);
  CHECK_FALSE(signed_F.all_pass());
  CHECK(jets_F_map_check(J, 1, false).all_pass());
  JetTruncation A(lie_algebra_data("abelian", {"x", "y"}, {}, {0, 0}), 3);
  CHECK(jets_F_map_check(A, 1).all_pass());
}

TEST_CASE("jet order is bounded") {
  CHECK_THROWS_AS(JetTruncation(ax_b(), 0), InputError);
}
