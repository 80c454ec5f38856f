#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "hakit/cyclic.hpp"
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

TEST_CASE("cocyclic and cyclic identities on A^e(Q[x]/(x^2))") {
  auto P = enveloping(algebra_dual_numbers());
  CocyclicModule C = cocyclic_module(P, 3);
  CyclicModule D = cyclic_module(P, 3);
  AxiomReport rc = cocyclic_identities(C), rd = cyclic_identities(D);
  INFO(fails(rc), fails(rd));
  CHECK(rc.all_pass());
  CHECK(rd.all_pass());
  CHECK(cyclic_power_is_identity(C));
  CHECK(cyclic_power_is_identity(D));
}

TEST_CASE("Sweedler algebra is para-cocyclic only") {
  auto P = sweedler_h4();
  CocyclicModule C = cocyclic_module(P, 3);
  CHECK_FALSE(cyclic_power_is_identity(C));
  auto tw = s2_twist(P, C.space, false, true);
  AxiomReport r = cocyclic_identities(C, &tw);
  INFO(fails(r));
  CHECK(r.all_pass());
  MixedComplex M = mixed_complex(C);
  CHECK_FALSE(M.has_B);
  CHECK_THROWS_AS(cyclic_theory(M, 2), ParaCyclic);
}

TEST_CASE("mixed complex relations and Z/2 dual cyclic homology") {
  auto P = groupoid_algebra(cyclic_group(2));
  MixedComplex M = mixed_complex(cyclic_module(P, 5));
  INFO(fails(M.report));
  CHECK(M.report.all_pass());
  CyclicTable t = cyclic_theory(M, 4);
  CHECK(t.hh == std::vector<int>{1, 0, 0, 0, 0});
  CHECK(t.hc == std::vector<int>{1, 0, 1, 0, 1});
  CHECK(t.hc == periodic_sum(t.hh));
}

TEST_CASE("normalized complex has the same homology") {
  auto P = enveloping(algebra_Q_power(2));
  CyclicModule D = cyclic_module(P, 4);
  CHECK(hochschild_dims(mixed_complex(D), 3) == hochschild_dims(normalized_mixed_complex(D), 3));
}

TEST_CASE("homology is invariant under a permutation of the basis of H") {
  auto P = groupoid_algebra(pair_groupoid(2));
  std::vector<int> perm{2, 0, 3, 1};
  auto Q = permute_total_basis(P, perm);
  CHECK(check_all(Q).all_pass());
  auto a = cyclic_theory(mixed_complex(cocyclic_module(P, 4)), 3);
  auto b = cyclic_theory(mixed_complex(cocyclic_module(Q, 4)), 3);
  CHECK(a.hh == b.hh);
  CHECK(a.hc == b.hc);
}

TEST_CASE("cobar and bar resolutions are acyclic") {
  for (const auto& P : {enveloping(algebra_dual_numbers()), groupoid_algebra(cyclic_group(3))}) {
    ResolutionData co = cobar_resolution(P, 3), bar = bar_resolution(P, 3);
    INFO(fails(co.report), fails(bar.report));
    CHECK(co.report.all_pass());
    CHECK(bar.report.all_pass());
    CHECK(std::accumulate(co.augmented_homology.begin(), co.augmented_homology.end(), 0) == 0);
    CHECK(std::accumulate(bar.augmented_homology.begin(), bar.augmented_homology.end(), 0) == 0);
  }
}

TEST_CASE("Hopf-Galois maps are inverse isomorphisms") {
  auto P = groupoid_algebra(klein_four());
  HopfGalois G = hopf_galois(P, cocyclic_module(P, 3), cyclic_module(P, 3));
  INFO(fails(G.report));
  CHECK(G.report.all_pass());
  for (std::size_t n = 0; n < G.phi.size(); ++n)
    CHECK(G.phi[n] * G.psi[n] == LinearMap::identity(G.phi[n].rows()));
}

TEST_CASE("HH of A^e(A) is concentrated in degree zero") {
  auto P = enveloping(algebra_Q_power(2));
  CyclicTable t = cyclic_theory(mixed_complex(cocyclic_module(P, 4)), 3);
  CHECK(t.hh == std::vector<int>{1, 0, 0, 0});
  CHECK(t.hc == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("structure theorem rejects a non (co)commutative input") {
  CHECK_THROWS_AS(structure_theorem_check(sweedler_h4(), 2), NotApplicable);
}

TEST_CASE("axioms and homology survive random relabellings of H") {
  std::mt19937 rng(20261015);
  for (const auto& P : {enveloping(algebra_dual_numbers()), groupoid_algebra(cyclic_group(3)),
                        groupoid_algebra(pair_groupoid(2))}) {
    const auto base = cyclic_theory(mixed_complex(cyclic_module(P, 4)), 3);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<int> perm(P.H.dim);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto Q = permute_total_basis(P, perm);
      AxiomReport r = check_all(Q);
      INFO(fails(r));
      CHECK(r.all_pass());
      const auto t = cyclic_theory(mixed_complex(cyclic_module(Q, 4)), 3);
      CHECK(t.hh == base.hh);
      CHECK(t.hc == base.hc);
    }
  }
}
