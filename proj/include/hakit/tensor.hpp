#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hakit/exactlin.hpp"

namespace hakit {

// One byte per tensor slot; slot bases are limited to 255 elements.
using Word = std::string;
using Tensor = std::map<Word, Scalar>;

inline Word word_of(std::initializer_list<int> letters) {
  Word w;
  for (int x : letters) w.push_back(static_cast<char>(x));
  return w;
}
inline int letter(const Word& w, std::size_t i) { return static_cast<unsigned char>(w[i]); }
inline char to_letter(int x) { return static_cast<char>(x); }

Tensor single(const Word& w, const Scalar& c = 1);
void add_to(Tensor& acc, const Tensor& t, const Scalar& c = 1);
void add_word(Tensor& acc, const Word& w, const Scalar& c);
Tensor scaled(Tensor t, const Scalar& c);
// Concatenation u ⊗ v.
Tensor tensor_product(const Tensor& u, const Tensor& v);
// Tensor over a single slot from a vector in that slot's basis.
Tensor from_vec(const Vec& v);
std::string tensor_str(const Tensor& t);

// Balanced-tensor junction between slot k-1 and slot k: x·a ⊗ y ~ x ⊗ a·y.
struct Junction {
  int base_dim = 0;
  std::vector<LinearMap> right_on_prev;  // x ↦ x·e_a on the slot before
  std::vector<LinearMap> left_on_next;   // y ↦ e_a·y on the slot after
};

// slot_1 ⊗_{A} slot_2 ⊗_{A'} ··· built stage by stage, optionally followed by a
// final quotient by extra relation tensors.
class TensorSpace {
 public:
  TensorSpace() = default;
  TensorSpace(std::vector<int> slot_dims, std::vector<Junction> junctions);
  static TensorSpace free_slots(std::vector<int> slot_dims);

  // New space: this space further divided by span(extra).
  TensorSpace with_relations(const std::vector<Tensor>& extra) const;

  int dim() const { return final_.dim(); }
  int slots() const { return static_cast<int>(slot_dims_.size()); }
  const std::vector<int>& slot_dims() const { return slot_dims_; }
  const Word& basis_word(int k) const { return basis_words_[k]; }
  long long ambient_dim() const;
  long long ambient_index(const Word& w) const;

  Vec project_word(const Word& w) const;
  Vec project(const Tensor& t) const;
  Tensor lift(const Vec& v) const;
  bool is_zero(const Tensor& t) const { return project(t).empty(); }

  // Spanning set of the kernel of ambient -> this space; stops when f returns false.
  void for_each_relation(const std::function<bool(const Tensor&)>& f) const;
  long long relation_count_estimate() const;

 private:
  Vec project_stage(const Word& w, int upto) const;

  std::vector<int> slot_dims_;
  std::vector<Junction> junctions_;
  std::vector<QuotientSpace> stages_;             // stages_[k]: after slot k+1 (k >= 1)
  std::vector<std::vector<Word>> stage_words_;    // coset representative words per stage
  QuotientSpace final_;
  std::vector<Word> basis_words_;
  std::vector<Tensor> extra_;
};

using WordOp = std::function<Tensor(const Word&)>;

// Matrix of op descended to src -> tgt; with verify, checks op(relations) ⊆ relations and
// throws NotWellDefined carrying the offending relation (ambient coordinates of src).
LinearMap induce(const WordOp& op, const TensorSpace& src, const TensorSpace& tgt, bool verify = true);

// Apply op to an arbitrary tensor, linearly.
Tensor apply_op(const WordOp& op, const Tensor& t);

// First src relation tensor mapped outside tgt's relations, if any.
bool find_ill_defined(const WordOp& op, const TensorSpace& src, const TensorSpace& tgt,
                      Tensor* witness);

Vec ambient_vec(const TensorSpace& s, const Tensor& t);

}  // namespace hakit
