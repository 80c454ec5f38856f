#include "doctest.h"

#include "hakit/algoracle.hpp"
#include "hakit/examples.hpp"

using namespace hakit;

TEST_CASE("cyclic homology of small algebras") {
  CHECK(algebra_cyclic_homology(algebra_field_Q(), 4).hc == std::vector<int>{1, 0, 1, 0, 1});
  CHECK(algebra_cyclic_homology(algebra_Q_power(2), 4).hc == std::vector<int>{2, 0, 2, 0, 2});
  AlgebraHomology d = algebra_cyclic_homology(algebra_dual_numbers(), 4);
  CHECK(d.hh == std::vector<int>{2, 1, 1, 1, 1});
  CHECK(d.hc == std::vector<int>{2, 0, 2, 0, 2});
}

TEST_CASE("matrices are Morita invariant to the ground field") {
  CHECK(algebra_cyclic_homology(algebra_matrices(2), 2).hc == algebra_cyclic_homology(algebra_field_Q(), 2).hc);
}

TEST_CASE("standard cyclic module identities") {
  CHECK(algebra_cyclic_identities(algebra_cyclic_module(algebra_dual_numbers(), 3)).all_pass());
}

TEST_CASE("comparison with the enveloping Hopf algebroid") {
  OracleComparison c = compare_with_enveloping(algebra_Q_power(2), 2);
  CHECK(c.report.all_pass());
  CHECK(c.hc == c.oracle.hc);
  const AxiomResult* r = c.report.find("identification-bijective");
  REQUIRE(r);
  CHECK(r->pass);
}
