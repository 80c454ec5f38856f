#include "doctest.h"

#include "hakit/axioms.hpp"
#include "hakit/examples.hpp"

using namespace hakit;

namespace {
std::string fails(const AxiomReport& r) {
  std::string s;
  for (const auto& x : r.results)
    if (!x.pass) s += x.name + " " + x.witness + " " + x.detail + "\n";
  return s;
}
}  // namespace

TEST_CASE("enveloping algebras satisfy every identity") {
  for (const auto& A : {algebra_field_Q(), algebra_Q_power(2), algebra_dual_numbers()}) {
    AxiomReport r = check_all(enveloping(A));
    INFO(fails(r));
    CHECK(r.all_pass());
    CHECK(r.involutive);
  }
}

TEST_CASE("groupoid algebras satisfy every identity") {
  for (const auto& G : {cyclic_group(2), cyclic_group(3), klein_four(), pair_groupoid(2), pair_groupoid(3)}) {
    AxiomReport r = check_all(groupoid_algebra(G));
    INFO(fails(r));
    CHECK(r.all_pass());
    CHECK(r.involutive);
    CHECK(r.cocommutative);
  }
}

TEST_CASE("Sweedler algebra is a Hopf algebroid with S^2 != id") {
  AxiomReport r = check_all(sweedler_h4());
  INFO(fails(r));
  CHECK(r.all_pass());
  CHECK_FALSE(r.involutive);
  CHECK_FALSE(r.commutative);
}

TEST_CASE("identity antipode breaks the antipode identities") {
  auto P = enveloping(algebra_Q_power(2));
  P.S = LinearMap::identity(P.H.dim);
  P.S_inv = P.S;
  AxiomReport r = check_all(P);
  CHECK_FALSE(r.all_pass());
  const AxiomResult* t = r.find("TwAp-left");
  REQUIRE(t);
  CHECK_FALSE(t->pass);
  CHECK_FALSE(t->witness.empty());
}

TEST_CASE("balanced square of A^e(Q^2) has dimension 8") {
  auto P = enveloping(algebra_Q_power(2));
  HopfOps ops(P);
  TensorSpace L2({ops.d, ops.d}, {ops.junction_left()});
  CHECK(L2.dim() == 8);
}
