#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hakit/axioms.hpp"
#include "hakit/presentation.hpp"
#include "hakit/tensor.hpp"

namespace hakit {

struct ParaCyclic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degrees 0..top of a para-cocyclic module.
struct CocyclicModule {
  std::string label;
  std::vector<TensorSpace> space;
  std::vector<std::vector<LinearMap>> delta;  // delta[n][i]: n -> n+1, 0 <= i <= n+1, n < top
  std::vector<std::vector<LinearMap>> sigma;  // sigma[n][i]: n -> n-1, 0 <= i <= n-1
  std::vector<LinearMap> tau;
  std::vector<LinearMap> tau_inv;             // empty when S is not invertible

  int top() const { return static_cast<int>(space.size()) - 1; }
  int dim(int n) const { return space[n].dim(); }
};

// Degrees 0..top of a para-cyclic module.
struct CyclicModule {
  std::string label;
  std::vector<TensorSpace> space;
  std::vector<std::vector<LinearMap>> face;   // face[n][i]: n -> n-1, 0 <= i <= n, n >= 1
  std::vector<std::vector<LinearMap>> degen;  // degen[n][i]: n -> n+1, 0 <= i <= n, n < top
  std::vector<LinearMap> t;
  std::vector<LinearMap> t_inv;

  int top() const { return static_cast<int>(space.size()) - 1; }
  int dim(int n) const { return space[n].dim(); }
};

// C^n(H) = H ⊗_{A_l} ··· ⊗_{A_l} H (n factors), C^0 = A_l.
TensorSpace cochain_space(const HopfAlgebroidPresentation& P, int n);
// C_n(H) = H ⊗_{A_r} ··· ⊗_{A_r} H (n factors), C_0 = A_r.
TensorSpace chain_space(const HopfAlgebroidPresentation& P, int n);

CocyclicModule cocyclic_module(const HopfAlgebroidPresentation& P, int top);
// B^n(H) = C^{n+1}(H) / I^n with the coalgebra operators.
CocyclicModule coalgebra_cocyclic_module(const HopfAlgebroidPresentation& P, int top);
CyclicModule cyclic_module(const HopfAlgebroidPresentation& P, int top);

// Induced S^{2} (resp. S^{-2}) on every slot past skip_first_slots; the expected value of
// tau^{n+1} (resp. t^{n+1}). With base_in_degree0 the degree-0 space is a base algebra (identity).
std::vector<LinearMap> s2_twist(const HopfAlgebroidPresentation& P, const std::vector<TensorSpace>& spaces,
                                bool inverse, bool base_in_degree0, int skip_first_slots = 0);

// Cosimplicial and cyclic identities as exact matrix identities. twist[n] is the
// expected tau_n^{n+1}; nullptr means identity.
AxiomReport cocyclic_identities(const CocyclicModule& M, const std::vector<LinearMap>* twist = nullptr);
AxiomReport cyclic_identities(const CyclicModule& M, const std::vector<LinearMap>* twist = nullptr);
bool cyclic_power_is_identity(const CocyclicModule& M);
bool cyclic_power_is_identity(const CyclicModule& M);

struct CoinvariantMaps {
  std::vector<LinearMap> Phi;     // C^n -> B^n, h ↦ 1 ⊗ h
  std::vector<LinearMap> PsiBar;  // B^n -> C^n, h^0 ⊗ h ↦ S(h^0)·h
  AxiomReport report;
};
CoinvariantMaps coinvariant_maps(const HopfAlgebroidPresentation& P, const CocyclicModule& C,
                                 const CocyclicModule& B);

struct HopfGalois {
  std::vector<LinearMap> phi;  // C_n -> C^n
  std::vector<LinearMap> psi;  // C^n -> C_n
  AxiomReport report;
};
HopfGalois hopf_galois(const HopfAlgebroidPresentation& P, const CocyclicModule& C, const CyclicModule& D);

struct MixedComplex {
  bool cohomological = false;
  std::vector<int> dims;
  std::vector<LinearMap> b;  // cohomological: b[n]: n -> n+1 (n < top); homological: b[n]: n -> n-1 (b[0] = 0)
  std::vector<LinearMap> B;  // cohomological: B[n]: n+1 -> n; homological: B[n]: n -> n+1 (n < top)
  bool has_B = false;        // false for para-cyclic input
  AxiomReport report;        // b² = 0, B² = 0, bB + Bb = 0

  int top() const { return static_cast<int>(dims.size()) - 1; }
};
MixedComplex mixed_complex(const CocyclicModule& M);
MixedComplex mixed_complex(const CyclicModule& M);
// Quotient by the degenerate subcomplex (images of s_0..s_{n-1}); homology agrees.
MixedComplex normalized_mixed_complex(const CyclicModule& M);

struct CyclicTable {
  std::vector<int> hh, hc;
  std::vector<int> s_rank;       // rank of the periodicity map out of degree n (-1 where undefined)
  std::vector<int> s_iso;        // 1 if that map is an isomorphism, 0 if not, -1 where undefined
  int hp_stable_at = -1;         // first degree from which S is iso for two consecutive degrees
  int hp_even = -1, hp_odd = -1; // dims at the stabilized degree, -1 when not stabilized
};

// Valid for degrees 0..top-1 of the mixed complex.
std::vector<int> hochschild_dims(const MixedComplex& M, int n_max);
// Throws ParaCyclic when M has no B.
CyclicTable cyclic_theory(const MixedComplex& M, int n_max);

struct ResolutionData {
  bool cohomological = false;
  std::vector<TensorSpace> space;      // Cobar^n or Bar_n, n = 0..top
  std::vector<LinearMap> diff;         // cobar: diff[n]: n -> n+1; bar: diff[n]: n -> n-1 (diff[0] = 0)
  std::vector<LinearMap> homotopy;     // cobar: s^{n}: n+1 -> n; bar: s_n: n -> n+1
  LinearMap augmentation;              // cobar: s_l: A_l -> Cobar^0; bar: eps_l: Bar_0 -> A_l
  LinearMap extra_homotopy;            // cobar: s^{-1} = eps_l; bar: s_{-1} = t_l
  std::vector<int> augmented_homology; // all zero for a resolution
  AxiomReport report;
};
ResolutionData cobar_resolution(const HopfAlgebroidPresentation& P, int top);
ResolutionData bar_resolution(const HopfAlgebroidPresentation& P, int top);

struct CrosscheckReport {
  std::vector<int> hh_co, cotor;
  std::vector<int> hh, tor;
  AxiomReport report;
};
CrosscheckReport derived_functor_crosscheck(const HopfAlgebroidPresentation& P, int n_max);

// Right H_l-comodule M: right A_l-action plus coaction M -> M ⊗_{A_l} H
// (columns indexed m*dim H + h).
struct ComoduleData {
  int dim = 0;
  std::vector<LinearMap> right_action;  // per basis element of A_l
  LinearMap coaction;
};
// Right H-module N: action matrices per basis element of H, x ↦ x·e_h.
struct ModuleData {
  int dim = 0;
  std::vector<LinearMap> action;
};
std::vector<int> cohomology_with_coefficients(const HopfAlgebroidPresentation& P, const ComoduleData& M, int n_max);
std::vector<int> homology_with_coefficients(const HopfAlgebroidPresentation& P, const ModuleData& N, int n_max);

struct InvariantsEmbedding {
  CyclicModule B;                 // B_n(H) = C_{n+1}(H) / I_n with the algebra operators
  std::vector<LinearMap> Psi;     // C_n -> C_{n+1}
  std::vector<LinearMap> PsiBar;  // C_n -> B_n
  bool intertwines_faces = false, intertwines_degeneracies = false, intertwines_cyclic = false;
  AxiomReport report;             // Phi∘Psi = id, B cyclic identities
};
InvariantsEmbedding invariants_embedding(const HopfAlgebroidPresentation& P, const CyclicModule& C);

struct StructureReport {
  bool commutative_case = false, cocommutative_case = false;
  std::vector<int> hh_co, hc_co, hh, hc;
  AxiomReport report;
};
struct NotApplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Theorem on (co)commutative Hopf algebroids; prop_degree bounds the τ'/t' checks.
StructureReport structure_theorem_check(const HopfAlgebroidPresentation& P, int n_max, int prop_degree = 2);

// Sum over i of v[n - 2i].
std::vector<int> periodic_sum(const std::vector<int>& v);

}  // namespace hakit
