#pragma once

#include <map>
#include <string>
#include <vector>

#include "hakit/axioms.hpp"
#include "hakit/presentation.hpp"
#include "hakit/tensor.hpp"

namespace hakit {

struct TruncationTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lie–Rinehart algebra (A, L) with L free on generators X_1..X_r over a commutative A,
// plus a right connection on A given by eps_r(X_i) = ∇^r_{X_i} 1.
struct LieRinehartData {
  std::string name = "lie-rinehart";
  AlgebraPresentation base;
  std::vector<std::string> base_labels, labels;
  std::vector<std::vector<Vec>> anchor;                // anchor[i][b] = X_i(e_b)
  std::vector<std::vector<std::vector<Vec>>> bracket;  // bracket[i][j][l]: coefficient of X_l in [X_i, X_j]
  std::vector<Vec> eps_r;

  int rank() const { return static_cast<int>(labels.size()); }
  // Commutativity of A, derivation property of the anchor, anchor is a Lie map,
  // antisymmetry and Jacobi. Throws InputError naming the failed identity.
  void validate() const;
};

// A = ℚ; brackets lists [X_i, X_j] += c X_k for i < j.
LieRinehartData lie_algebra_data(const std::string& name, const std::vector<std::string>& labels,
                                 const std::vector<std::tuple<int, int, int, Scalar>>& brackets,
                                 const std::vector<Scalar>& eps_r);
// ℚ[t]/(t²), basis (1, t), with L free of rank 1; x_of_t = X(t) and eps = eps_r(X) in that basis.
LieRinehartData dual_numbers_rank_one(const Vec& x_of_t, const Vec& eps);

using Mono = std::vector<int>;  // nondecreasing generator indices: X_{i_1} ··· X_{i_k}

// VL_{≤N}: PBW basis e_b X^m, flat index mono * dim A + b (left A-coefficients).
class LieRinehartTruncation {
 public:
  LieRinehartTruncation(LieRinehartData data, int N);

  const LieRinehartData& data() const { return data_; }
  int N() const { return N_; }
  int base_dim() const { return m_; }
  int dim() const { return static_cast<int>(monos_.size()) * m_; }
  const std::vector<Mono>& monomials() const { return monos_; }
  int mono_index(const Mono& w) const;
  int degree(int flat) const { return static_cast<int>(monos_[flat / m_].size()); }
  int flat(int mono, int b) const { return mono * m_ + b; }
  std::string label(int flat) const;
  std::string mono_label(int mono) const;

  Vec generator(int i) const;         // X_i
  Vec base_element(const Vec& a) const;
  Vec mul(const Vec& x, const Vec& y) const;  // throws TruncationTooSmall past degree N
  Vec mul(int x, int y) const;

  Vec eps_l(const Vec& x) const;  // projection onto A
  Vec eps_r(const Vec& x) const;  // 1_A · x for the right action from the connection
  Vec antipode(int x) const;      // anti-multiplicative extension of S(a) = a, S(X) = -X + eps_r(X)
  Vec antipode(const Vec& x) const;

  // Coproducts as k-tensors (letters are flat indices).
  Tensor delta_l(int x) const;  // a X_S ⊗ X_{S^c}
  Tensor delta_r(int x) const;  // (a ⊗ 1) Π (1 ⊗ X + X ⊗ 1 - eps_r(X) ⊗ 1), factorwise

  // D_+ ⊗ D_- from the PBW formula; reversed second factor unless literal_order.
  Tensor translation(int x, bool literal_order = false) const;

  enum class Junction { LL, RL, RR };  // b x ⊗ y ~ x ⊗ b y; x b ⊗ y ~ x ⊗ b y; x b ⊗ y ~ x ⊗ y b
  // Normal form in the iterated balanced product: slot 0 a flat index, later slots mono indices.
  Tensor normalize(const Tensor& raw, const std::vector<Junction>& kinds) const;
  Tensor raw_of_normal(const Tensor& nf) const;

  // Elements of A and L.
  Vec anchor_apply(int i, const Vec& a) const;
  Vec eps_r_of(const std::vector<Vec>& l) const;  // eps_r on Σ a_i X_i
  std::vector<Vec> lie_bracket(const std::vector<Vec>& x, const std::vector<Vec>& y) const;
  // [∇_{X_i}, ∇_{X_j}] - ∇_{[X_j, X_i]} evaluated on 1_A.
  Vec curvature(int i, int j) const;
  // ∇^r_D a := eps_r(a D) for D in VL.
  Vec nabla(const Vec& D, const Vec& a) const;
  Vec mul_base(const Vec& a, const Vec& b) const { return data_.base.mul(a, b); }

 private:
  using Elem = std::map<Mono, Vec>;
  Elem rmul_gen(const Mono& w, int j) const;
  Elem rmul_base(const Mono& w, int b) const;
  Elem rmul_base(const Mono& w, const Vec& a) const;
  Elem right_form(Elem left) const;
  Vec to_flat(const Elem& e) const;
  Elem of_flat(const Vec& v) const;
  void add_scaled(Elem& acc, const Elem& e, const Vec& a) const;

  LieRinehartData data_;
  int N_ = 0, m_ = 0;
  std::vector<Mono> monos_;
  std::map<Mono, int> index_;
  mutable std::map<std::pair<Mono, int>, Elem> gen_memo_, base_memo_;
  mutable std::map<std::pair<int, int>, Vec> mul_memo_;
  std::vector<Vec> antipode_;
};

struct FlatnessReport {
  bool flat = false;             // curvature vanishes on generators
  bool antihomomorphism = false; // S(DE) = S(E)S(D) on all products of degree ≤ N
  AxiomReport report;            // with the Hopf algebroid axioms when flat
};
FlatnessReport antipode_flatness_check(const LieRinehartTruncation& T);

// Identities of the translation map on all basis elements of degree ≤ max_degree
// (default N), and comparison with D^(1) ⊗ S(D^(2)) for the given connection and for
// eps_r = 0 when that connection is flat.
AxiomReport translation_map_check(const LieRinehartTruncation& T, int max_degree = -1, bool literal_order = false);

// Alt: Λ^n_A L -> C^n(VL_{≤N}) for n ≤ n_max: b∘Alt = 0, B∘Alt = Alt∘∂,
// σ_{n-1}τ_n∘Alt = (1/n) Alt∘∂. Needs N ≥ n_max + 2.
AxiomReport antisymmetrisation_check(const LieRinehartTruncation& T, int n_max);

}  // namespace hakit
