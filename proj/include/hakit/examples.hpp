#pragma once

#include <string>
#include <vector>

#include "hakit/presentation.hpp"

namespace hakit {

// Small algebras used as inputs.
AlgebraPresentation algebra_field_Q();
AlgebraPresentation algebra_Q_power(int n);        // ℚ^n, idempotent basis
AlgebraPresentation algebra_dual_numbers();        // ℚ[x]/(x²), basis 1, x
AlgebraPresentation algebra_matrices(int n);       // M_n(ℚ), basis E_ij at i*n + j

struct FiniteGroupoid {
  int objects = 0;
  std::vector<int> src, tgt;     // per arrow
  std::vector<int> comp;         // comp[g*arrows + h] = gh, or -1 when s(g) != t(h)
  std::vector<int> inv;          // per arrow
  std::vector<int> unit;         // per object
  std::vector<std::string> labels;

  int arrows() const { return static_cast<int>(src.size()); }
  int compose(int g, int h) const { return comp[g * arrows() + h]; }
  void validate() const;  // throws InputError on any groupoid axiom violation
};

FiniteGroupoid group_as_groupoid(int order, const std::vector<int>& mult_table);
FiniteGroupoid cyclic_group(int n);
FiniteGroupoid klein_four();
FiniteGroupoid pair_groupoid(int points);
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);
FiniteGroupoid parse_groupoid(const std::string& text);
FiniteGroupoid load_groupoid(const std::string& path);

// A^e = A ⊗ A^op over A; basis (i, j) at i*dim + j.
HopfAlgebroidPresentation enveloping(const AlgebraPresentation& A, const std::string& name = "enveloping");
HopfAlgebroidPresentation groupoid_algebra(const FiniteGroupoid& G, const std::string& name = "groupoid");
// Sweedler's four-dimensional Hopf algebra over ℚ; basis 1, g, x, gx; S² ≠ id.
HopfAlgebroidPresentation sweedler_h4();

void check_associative_unital(const AlgebraPresentation& A, const std::string& what);

}  // namespace hakit
