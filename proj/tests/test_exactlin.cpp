#include "doctest.h"

#include "hakit/exactlin.hpp"

using namespace hakit;

TEST_CASE("kernel of a rank one matrix") {
  auto f = LinearMap::from_dense({{1, 1}, {0, 0}});
  auto k = kernel_basis(f);
  REQUIRE(k.size() == 1);
  CHECK(f.apply(k[0]).empty());
  CHECK(kernel_basis_dense(f) == kernel_basis_sparse(f));
}

TEST_CASE("map not descending to a quotient reports its relation") {
  QuotientSpace Q = make_quotient(2, {Vec::from_dense({1, -1})});
  auto f = LinearMap::from_dense({{1, 0}, {0, 2}});
  try {
    induce_on_quotients(f, Q, Q);
    FAIL("expected NotWellDefined");
  } catch (const NotWellDefined& e) {
    CHECK(e.witness == Vec::from_dense({1, -1}));
  }
}

TEST_CASE("nilpotent differential has homology in both degrees") {
  // ℚ[x]/x² with d = multiplication by x from degree 1 to 0: homology ℚ, ℚ.
  auto d = LinearMap::from_dense({{0, 0}, {1, 0}});
  auto cx = ChainComplexData::homological({d});
  CHECK(homology_dims(cx) == std::vector<int>{1, 1});
}

TEST_CASE("scalars parse strictly") {
  CHECK(parse_scalar("-3/6") == Scalar(-1, 2));
  CHECK(parse_scalar("7") == 7);
  CHECK_THROWS_AS(parse_scalar("1.5"), InputError);
  CHECK_THROWS_AS(parse_scalar("1/0"), InputError);
  CHECK(format_scalar(parse_scalar("2/4")) == "1/2");
}
