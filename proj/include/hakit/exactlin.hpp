#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace hakit {

using Scalar = mpq_class;

Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& q);

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sparse vector: entries sorted by index, no stored zeros.
class Vec {
 public:
  using Entry = std::pair<int, Scalar>;

  Vec() = default;
  static Vec unit(int i, const Scalar& c = 1);
  static Vec from_dense(const std::vector<Scalar>& xs);
  static Vec from_map(const std::map<int, Scalar>& m);

  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  int leading() const { return e_.empty() ? -1 : e_.front().first; }
  int max_index() const { return e_.empty() ? -1 : e_.back().first; }
  Scalar at(int i) const;

  // Appends without checks; caller keeps indices strictly increasing.
  void push_back(int i, Scalar c) { e_.emplace_back(i, std::move(c)); }

  void axpy(const Scalar& c, const Vec& x);  // this += c*x
  Vec& operator+=(const Vec& o) { axpy(1, o); return *this; }
  Vec& operator-=(const Vec& o) { axpy(-1, o); return *this; }
  Vec& operator*=(const Scalar& c);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& c, Vec a) { return a *= c; }
  friend bool operator==(const Vec& a, const Vec& b) { return a.e_ == b.e_; }

  std::vector<Scalar> dense(int dim) const;
  std::string str() const;

 private:
  std::vector<Entry> e_;
};

class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(int rows, int cols);
  static LinearMap identity(int n);
  static LinearMap from_columns(int rows, std::vector<Vec> cols);
  static LinearMap from_triplets(int rows, int cols,
                                 const std::vector<std::tuple<int, int, Scalar>>& t);
  static LinearMap from_dense(const std::vector<std::vector<Scalar>>& rows_major);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Vec& col(int j) const { return cols_v_[j]; }
  Scalar at(int r, int c) const { return cols_v_[c].at(r); }
  void set_col(int j, Vec v);

  Vec apply(const Vec& x) const;
  // Row-major ordered (row, col, value) triplets.
  std::vector<std::tuple<int, int, Scalar>> triplets() const;
  std::vector<std::vector<Scalar>> dense() const;
  LinearMap transpose() const;
  bool is_zero() const;
  std::size_t nnz() const;

  LinearMap operator*(const LinearMap& o) const;  // composition this∘o
  LinearMap& operator+=(const LinearMap& o);
  LinearMap& operator-=(const LinearMap& o);
  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  friend LinearMap operator*(const Scalar& c, LinearMap a);
  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cols_v_ == b.cols_v_;
  }

  LinearMap pow(int k) const;
  // First standard basis vector (as column index) where this and o differ, or -1.
  int first_difference(const LinearMap& o) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Vec> cols_v_;
};

LinearMap direct_sum(const std::vector<LinearMap>& blocks);

// Incremental row echelon form over ℚ, keyed by pivot column.
class Echelon {
 public:
  explicit Echelon(int dim = 0) : dim_(dim) {}
  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool insert(const Vec& v);  // true iff v was independent of the current span
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return reduce(v).empty(); }
  // Back-substitution to reduced row echelon form.
  void canonicalize();
  std::vector<int> pivots() const;
  std::vector<int> free_columns() const;
  const std::map<int, Vec>& rows() const { return rows_; }

 private:
  int dim_;
  std::map<int, Vec> rows_;
  bool canonical_ = true;
};

int rank(const LinearMap& f);
std::vector<Vec> kernel_basis(const LinearMap& f);
// Same result via dense elimination; used automatically for small maps.
std::vector<Vec> kernel_basis_dense(const LinearMap& f);
std::vector<Vec> kernel_basis_sparse(const LinearMap& f);
// Basis of im(f) in reduced echelon form.
std::vector<Vec> image_basis(const LinearMap& f);

struct NotWellDefined : std::runtime_error {
  Vec witness;
  explicit NotWellDefined(Vec w, const std::string& what = "map does not preserve relations")
      : std::runtime_error(what + ": " + w.str()), witness(std::move(w)) {}
};

struct QuotientSpace {
  int ambient_dim = 0;
  std::vector<Vec> relation_basis;  // RREF rows
  std::vector<int> coset_basis;     // ambient indices of free columns
  LinearMap project;                // V -> V/W
  LinearMap section;                // V/W -> V
  std::shared_ptr<const Echelon> echelon;

  int dim() const { return static_cast<int>(coset_basis.size()); }
  Vec project_vec(const Vec& v) const { return project.apply(v); }
  bool in_relations(const Vec& v) const { return echelon->contains(v); }
};

QuotientSpace make_quotient(int ambient_dim, const std::vector<Vec>& relations);
QuotientSpace trivial_quotient(int dim);
LinearMap induce_on_quotients(const LinearMap& f, const QuotientSpace& src,
                              const QuotientSpace& tgt);

struct NotAComplex : std::runtime_error {
  int degree;
  explicit NotAComplex(int d)
      : std::runtime_error("consecutive differentials do not compose to zero at degree " +
                           std::to_string(d)),
        degree(d) {}
};

// Homological: d[n]: C_n -> C_{n-1} (d[0] has 0 rows).
// Cohomological: d[n]: C^n -> C^{n+1} (d[top] has 0 rows).
struct ChainComplexData {
  std::vector<int> dims;
  std::vector<LinearMap> d;
  bool cohomological = false;

  static ChainComplexData homological(std::vector<LinearMap> maps_from_degree_1);
  static ChainComplexData cochain(std::vector<LinearMap> maps_from_degree_0, int top_dim);
  const LinearMap& outgoing(int n) const { return d[n]; }
  // Map landing in degree n, or nullptr at the boundary.
  const LinearMap* incoming(int n) const;
  void validate() const;
};

struct HomologyGroup {
  int degree = 0;
  int dim = 0;
  std::vector<Vec> reps;
};

std::vector<HomologyGroup> complex_homology(const ChainComplexData& cx);
std::vector<int> homology_dims(const ChainComplexData& cx);

// Right A-action on V: act[a] is v ↦ v·e_a. Left action on W: act[a] is w ↦ e_a·w.
struct BaseAction {
  int dim = 0;
  std::vector<LinearMap> act;
};

QuotientSpace tensor_over_base(const BaseAction& left_right_acted, const BaseAction& right_left_acted);

int thread_budget();
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace hakit
