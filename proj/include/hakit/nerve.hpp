#pragma once

#include <map>
#include <vector>

#include "hakit/axioms.hpp"
#include "hakit/cyclic.hpp"
#include "hakit/examples.hpp"

namespace hakit {

// Representation of a groupoid: a vector space per object and rho(g): E_{s(g)} -> E_{t(g)}.
struct GroupoidRepresentation {
  std::vector<int> fiber;
  std::vector<LinearMap> arrow;

  static GroupoidRepresentation trivial(const FiniteGroupoid& G);
  // One object, one-dimensional; the group element acts by the given scalar.
  static GroupoidRepresentation character(const FiniteGroupoid& G, const std::vector<Scalar>& values);
  void validate(const FiniteGroupoid& G) const;
};

// Composable strings (g_1, …, g_n), s(g_i) = t(g_{i+1}); level 0 lists objects.
struct NerveData {
  const FiniteGroupoid* G = nullptr;
  std::vector<std::vector<std::vector<int>>> level;
  std::vector<std::map<std::vector<int>, int>> index;

  int top() const { return static_cast<int>(level.size()) - 1; }
  int size(int n) const { return static_cast<int>(level[n].size()); }
  int face(int n, int i, int k) const;
  int degeneracy(int n, int i, int k) const;
  int cyclic(int n, int k) const;
  int target(int n, int k) const;  // t(g_1), or the object itself
};

NerveData nerve(const FiniteGroupoid& G, int top);

struct NerveReport {
  std::vector<int> homology;  // H^d_n(G, E), n <= N
  std::vector<int> sizes;     // |G_n|
  AxiomReport report;         // simplicial/cyclic identities, comparison with C_•(C(G)), Hopf–Galois push-forward
};

// With E == nullptr the trivial representation is used and the comparison with the
// Hopf-cyclic module of the groupoid algebra is made.
NerveReport nerve_homology(const FiniteGroupoid& G, int N, const GroupoidRepresentation* E = nullptr);

// Γ(M, E) as a right module over the groupoid algebra, φ·g := ρ(g)^{-1} φ(t(g)) at s(g).
ModuleData representation_module(const FiniteGroupoid& G, const GroupoidRepresentation& E);

struct BurgheleaReport {
  std::vector<int> closed_strings;    // |B_n|
  std::vector<int> invariant_dims;    // dim B_n(C(G))
  bool cyclic_morphism = false;       // the invariant map is a morphism of cyclic modules
  AxiomReport report;
};
BurgheleaReport burghelea_compare(const FiniteGroupoid& G, int N);

}  // namespace hakit
