#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hakit/exactlin.hpp"
#include "hakit/tensor.hpp"

namespace hakit {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingInverse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlgebraPresentation {
  int dim = 0;
  std::vector<Vec> prod;  // prod[i*dim + j] = e_i e_j
  Vec unit;

  static AlgebraPresentation from_entries(int dim,
                                          const std::vector<std::tuple<int, int, int, Scalar>>& mul,
                                          Vec unit);
  const Vec& mul(int i, int j) const { return prod[i * dim + j]; }
  Vec mul(const Vec& x, const Vec& y) const;
  LinearMap left_mult(const Vec& x) const;
  LinearMap right_mult(const Vec& x) const;
  AlgebraPresentation opposite() const;
  bool is_commutative() const;
};

AlgebraPresentation tensor_algebra(const AlgebraPresentation& A, const AlgebraPresentation& B);

struct HopfAlgebroidPresentation {
  std::string name;
  AlgebraPresentation A_l, A_r, H;
  LinearMap s_l, t_l;  // A_l -> H
  LinearMap s_r, t_r;  // A_r -> H
  LinearMap Delta_l, Delta_r;  // H -> H⊗_k H, index i*dim + j
  LinearMap eps_l;             // H -> A_l
  LinearMap eps_r;             // H -> A_r
  LinearMap S;
  std::optional<LinearMap> S_inv;

  void validate_shapes() const;
  // S_inv if present, otherwise the inverse of S when S is bijective.
  LinearMap antipode_inverse() const;
  bool has_invertible_antipode() const;
};

HopfAlgebroidPresentation load_presentation(const std::string& path);
HopfAlgebroidPresentation parse_presentation(const std::string& text);
std::string emit_presentation(const HopfAlgebroidPresentation& P);
void save_presentation(const HopfAlgebroidPresentation& P, const std::string& path);

std::optional<LinearMap> invert(const LinearMap& f);

// Same Hopf algebroid with the basis of H relabelled: new basis element perm[i] is old e_i.
HopfAlgebroidPresentation permute_total_basis(const HopfAlgebroidPresentation& P, const std::vector<int>& perm);

// Element-level operations on H, its base algebras and tensor words over them.
class HopfOps {
 public:
  explicit HopfOps(const HopfAlgebroidPresentation& P);

  const HopfAlgebroidPresentation& P;
  int d, dl, dr;
  LinearMap Sinv, S2, Sinv2;

  Vec mul(const Vec& x, const Vec& y) const { return P.H.mul(x, y); }
  const Vec& mul(int i, int j) const { return P.H.mul(i, j); }
  Vec unit() const { return P.H.unit; }

  // Coproduct column as a two-slot tensor.
  Tensor coproduct(const LinearMap& Delta, int h) const;
  Tensor coproduct_l(int h) const { return coproduct(P.Delta_l, h); }
  Tensor coproduct_r(int h) const { return coproduct(P.Delta_r, h); }
  // k-fold iterated left coproduct of h, expanding the last slot each time (k >= 1 slots).
  Tensor iterated(const LinearMap& Delta, const Vec& h, int k) const;

  Tensor map_slot(const Tensor& t, int slot, const LinearMap& f) const;
  Tensor expand_slot(const Tensor& t, int slot, const LinearMap& Delta) const;
  Tensor merge_slots(const Tensor& t, int slot) const;  // multiply slot and slot+1
  Tensor insert_slot(const Tensor& t, int pos, const Vec& x) const;
  Tensor drop_slot_into(const Tensor& t, int slot, const std::function<Tensor(int, const Word&)>& f) const;
  // Slotwise products f_k t_k (left) or t_k f_k (right) for equal slot counts.
  Tensor slotwise(const Tensor& f, const Tensor& t) const;
  Tensor slotwise_right(const Tensor& t, const Tensor& f) const;

  // Junctions for H ⊗_{A} H under the different bimodule structures.
  Junction junction_left() const;        // t_l(a)x ⊗ y ~ x ⊗ s_l(a)y
  Junction junction_right_coprod() const;  // x s_r(a) ⊗ y ~ x ⊗ y t_r(a)
  Junction junction_right_comod() const;   // x s_r(a) ⊗ y ~ x ⊗ s_r(a)y
};

}  // namespace hakit
