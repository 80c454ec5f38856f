#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hakit/axioms.hpp"
#include "hakit/lierinehart.hpp"

namespace hakit {

// p-jets of a Lie algebra g over ℚ: the dual of U(g)_{≤p}, basis φ_α dual to the PBW monomials.
// Everything is graded by |α|; identities are compared on components of total degree ≤ p.
class JetTruncation {
 public:
  JetTruncation(const LieRinehartData& g, int p);

  int order() const { return p_; }
  int dim() const { return U_.dim(); }
  int degree(int a) const { return U_.degree(a); }
  std::string label(int a) const { return "φ(" + U_.mono_label(a) + ")"; }
  const LieRinehartTruncation& enveloping() const { return U_; }

  // φ_b φ_c; zero past degree p.
  const Vec& product(int b, int c) const { return prod_[b * dim() + c]; }
  Vec mul(const Vec& x, const Vec& y) const;
  // Δφ_a = Σ φ_a(X^β X^γ) φ_β ⊗ φ_γ over |β| + |γ| ≤ p.
  const Tensor& coproduct(int a) const { return cop_[a]; }
  Scalar counit(const Vec& x) const { return x.at(0); }
  // (Sφ)(D) = D_+(φ(D_-)).
  const LinearMap& antipode() const { return S_; }
  // (D·₁φ)(E) = φ(ED), (D·₂φ)(E) = D_+(φ(D_- E)), on components of degree ≤ p - |D|.
  Vec act1(int D, int phi) const;
  Vec act2(int D, int phi) const;
  // φ(D), D a PBW basis element.
  Scalar pair(const Vec& phi, const Vec& D) const;

 private:
  int p_;
  LieRinehartTruncation U_;
  std::vector<Vec> prod_;
  std::vector<Tensor> cop_;
  LinearMap S_;
};

// Commutative algebra, coalgebra and Hopf algebroid identities, S² = id, antipode formula,
// and the coproduct behaviour of the two module structures.
AxiomReport jet_axiom_check(const JetTruncation& J);

// Δ(D·₁φ) = φ_(1) ⊗ D·₁φ_(2) and Δ(D·₂φ) = D·₂φ_(1) ⊗ φ_(2), the legs dual to Δφ(D⊗E) = φ(DE).
// literal_legs tests the swapped placement D·₁φ_(1) ⊗ φ_(2) and φ_(1) ⊗ D·₂φ_(2) instead.
AxiomReport jet_module_coproduct_check(const JetTruncation& J, bool literal_legs = false);

// F: C_•(J) -> Λ^• g*, F(φ¹⊗…⊗φⁿ)(X_1..X_n) = (-1)^n (1/n!) det[(Sφ^i)(X_j)];
// F∘b = 0 and F∘B = d∘F for n ≤ n_max, d the Chevalley–Eilenberg differential
// dω(X_0..X_n) = Σ_{i<j} (-1)^{i+j} ω([X_i,X_j], ...). Needs p ≥ n_max + 1.
// With the (-1)^n prefactor F∘B = -d∘F on nonabelian g; alternating_sign = false drops it.
AxiomReport jets_F_map_check(const JetTruncation& J, int n_max, bool alternating_sign = true);

}  // namespace hakit
