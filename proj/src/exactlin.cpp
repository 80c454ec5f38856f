#include "hakit/exactlin.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace hakit {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool digits = false, slash = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digits = true;
    } else if (c == '/' && !slash && digits && i + 1 < s.size()) {
      slash = true;
    } else {
      throw InputError("malformed rational literal '" + s + "'");
    }
  }
  if (!digits) throw InputError("malformed rational literal '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Scalar q;
  try {
    q.set_str(s, 10);
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational literal '" + s + "'");
  }
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& q) { return q.get_str(10); }

// ---- Vec ----

Vec Vec::unit(int i, const Scalar& c) {
  Vec v;
  if (c != 0) v.e_.emplace_back(i, c);
  return v;
}

Vec Vec::from_dense(const std::vector<Scalar>& xs) {
  Vec v;
  for (int i = 0; i < static_cast<int>(xs.size()); ++i)
    if (xs[i] != 0) v.e_.emplace_back(i, xs[i]);
  return v;
}

Vec Vec::from_map(const std::map<int, Scalar>& m) {
  Vec v;
  v.e_.reserve(m.size());
  for (const auto& [i, c] : m)
    if (c != 0) v.e_.emplace_back(i, c);
  return v;
}

Scalar Vec::at(int i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& e, int k) { return e.first < k; });
  if (it != e_.end() && it->first == i) return it->second;
  return 0;
}

void Vec::axpy(const Scalar& c, const Vec& x) {
  if (c == 0 || x.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + x.e_.size());
  auto a = e_.begin();
  auto b = x.e_.begin();
  while (a != e_.end() || b != x.e_.end()) {
    if (b == x.e_.end() || (a != e_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == e_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  e_ = std::move(out);
}

Vec& Vec::operator*=(const Scalar& c) {
  if (c == 0) {
    e_.clear();
  } else {
    for (auto& [i, x] : e_) x *= c;
  }
  return *this;
}

std::vector<Scalar> Vec::dense(int dim) const {
  std::vector<Scalar> out(dim);
  for (const auto& [i, c] : e_) out.at(i) = c;
  return out;
}

std::string Vec::str() const {
  if (e_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : e_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << format_scalar(c) << "*";
    os << "e" << i;
  }
  return os.str();
}

// ---- LinearMap ----

LinearMap::LinearMap(int rows, int cols) : rows_(rows), cols_(cols), cols_v_(cols) {}

LinearMap LinearMap::identity(int n) {
  LinearMap m(n, n);
  for (int i = 0; i < n; ++i) m.cols_v_[i] = Vec::unit(i);
  return m;
}

LinearMap LinearMap::from_columns(int rows, std::vector<Vec> cols) {
  LinearMap m(rows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(static_cast<int>(j), std::move(cols[j]));
  return m;
}

LinearMap LinearMap::from_triplets(int rows, int cols,
                                   const std::vector<std::tuple<int, int, Scalar>>& t) {
  std::vector<std::map<int, Scalar>> acc(cols);
  for (const auto& [r, c, x] : t) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw InputError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                       ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    acc[c][r] += x;
  }
  LinearMap m(rows, cols);
  for (int j = 0; j < cols; ++j) m.cols_v_[j] = Vec::from_map(acc[j]);
  return m;
}

LinearMap LinearMap::from_dense(const std::vector<std::vector<Scalar>>& rm) {
  int r = static_cast<int>(rm.size());
  int c = r ? static_cast<int>(rm[0].size()) : 0;
  LinearMap m(r, c);
  for (int j = 0; j < c; ++j) {
    Vec v;
    for (int i = 0; i < r; ++i)
      if (rm[i][j] != 0) v.push_back(i, rm[i][j]);
    m.cols_v_[j] = std::move(v);
  }
  return m;
}

void LinearMap::set_col(int j, Vec v) {
  if (v.max_index() >= rows_)
    throw InputError("column entry index " + std::to_string(v.max_index()) +
                     " exceeds row count " + std::to_string(rows_));
  cols_v_.at(j) = std::move(v);
}

Vec LinearMap::apply(const Vec& x) const {
  if (x.max_index() >= cols_)
    throw InputError("vector index exceeds map domain dimension " + std::to_string(cols_));
  if (x.nnz() == 1) {
    Vec out = cols_v_[x.leading()];
    out *= x.entries().front().second;
    return out;
  }
  std::map<int, Scalar> acc;
  for (const auto& [k, c] : x.entries())
    for (const auto& [i, y] : cols_v_[k].entries()) acc[i] += c * y;
  return Vec::from_map(acc);
}

std::vector<std::tuple<int, int, Scalar>> LinearMap::triplets() const {
  std::vector<std::tuple<int, int, Scalar>> t;
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, x] : cols_v_[j].entries()) t.emplace_back(i, j, x);
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  return t;
}

std::vector<std::vector<Scalar>> LinearMap::dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_));
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, x] : cols_v_[j].entries()) d[i][j] = x;
  return d;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(cols_, rows_);
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, x] : cols_v_[j].entries()) t.cols_v_[i].push_back(j, x);
  return t;
}

bool LinearMap::is_zero() const {
  return std::all_of(cols_v_.begin(), cols_v_.end(), [](const Vec& v) { return v.empty(); });
}

std::size_t LinearMap::nnz() const {
  std::size_t n = 0;
  for (const auto& v : cols_v_) n += v.nnz();
  return n;
}

LinearMap LinearMap::operator*(const LinearMap& o) const {
  if (cols_ != o.rows_)
    throw InputError("composition dimension mismatch: " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " after " + std::to_string(o.rows_) + "x" +
                     std::to_string(o.cols_));
  LinearMap m(rows_, o.cols_);
  for (int j = 0; j < o.cols_; ++j) m.cols_v_[j] = apply(o.cols_v_[j]);
  return m;
}

LinearMap& LinearMap::operator+=(const LinearMap& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("sum of maps with different shapes");
  for (int j = 0; j < cols_; ++j) cols_v_[j] += o.cols_v_[j];
  return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("difference of maps with different shapes");
  for (int j = 0; j < cols_; ++j) cols_v_[j] -= o.cols_v_[j];
  return *this;
}

LinearMap operator*(const Scalar& c, LinearMap a) {
  for (auto& v : a.cols_v_) v *= c;
  return a;
}

LinearMap LinearMap::pow(int k) const {
  LinearMap r = identity(rows_);
  for (int i = 0; i < k; ++i) r = (*this) * r;
  return r;
}

int LinearMap::first_difference(const LinearMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return 0;
  for (int j = 0; j < cols_; ++j)
    if (!(cols_v_[j] == o.cols_v_[j])) return j;
  return -1;
}

LinearMap direct_sum(const std::vector<LinearMap>& blocks) {
  int r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  LinearMap m(r, c);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (int j = 0; j < b.cols(); ++j) {
      Vec v;
      for (const auto& [i, x] : b.col(j).entries()) v.push_back(ro + i, x);
      m.set_col(co + j, std::move(v));
    }
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

// ---- Echelon ----

Vec Echelon::reduce(const Vec& v) const {
  if (rows_.empty() || v.empty()) return v;
  if (canonical_) {
    Vec out = v;
    for (const auto& [j, c] : v.entries()) {
      auto it = rows_.find(j);
      if (it != rows_.end()) out.axpy(-c, it->second);
    }
    return out;
  }
  std::map<int, Scalar> acc;
  for (const auto& [i, c] : v.entries()) acc.emplace(i, c);
  auto it = acc.begin();
  while (it != acc.end()) {
    int p = it->first;
    auto row = rows_.find(p);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    Scalar c = it->second;
    for (const auto& [j, x] : row->second.entries()) {
      auto& slot = acc[j];
      slot -= c * x;
      if (slot == 0) acc.erase(j);
    }
    it = acc.upper_bound(p);
  }
  return Vec::from_map(acc);
}

bool Echelon::insert(const Vec& v) {
  if (v.max_index() >= dim_)
    throw InputError("vector index " + std::to_string(v.max_index()) + " outside dimension " +
                     std::to_string(dim_));
  Vec r = reduce(v);
  if (r.empty()) return false;
  Scalar lead = r.entries().front().second;
  r *= Scalar(1) / lead;
  int p = r.leading();
  if (canonical_) {
    for (auto& [q, row] : rows_) {
      Scalar c = row.at(p);
      if (c != 0) row.axpy(-c, r);
    }
  }
  rows_.emplace(p, std::move(r));
  return true;
}

void Echelon::canonicalize() {
  if (canonical_) return;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    Vec row = it->second;
    for (const auto& [j, c] : it->second.entries()) {
      if (j == it->first) continue;
      auto piv = rows_.find(j);
      if (piv != rows_.end()) row.axpy(-c, piv->second);
    }
    it->second = std::move(row);
  }
  canonical_ = true;
}

std::vector<int> Echelon::pivots() const {
  std::vector<int> p;
  for (const auto& [k, r] : rows_) p.push_back(k);
  return p;
}

std::vector<int> Echelon::free_columns() const {
  std::vector<int> f;
  for (int j = 0; j < dim_; ++j)
    if (!rows_.count(j)) f.push_back(j);
  return f;
}

// ---- kernels, ranks ----

namespace {

constexpr int kDenseLimit = 64;

// Dense RREF; returns pivot columns.
std::vector<int> dense_rref(std::vector<std::vector<Scalar>>& a, int cols) {
  int rows = static_cast<int>(a.size());
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    Scalar inv = Scalar(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Scalar f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::vector<Vec> kernel_from_rref(int cols, const std::vector<int>& piv,
                                  const std::function<Scalar(int, int)>& entry) {
  std::vector<char> is_piv(cols, 0);
  for (int p : piv) is_piv[p] = 1;
  std::vector<Vec> out;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::map<int, Scalar> m;
    m[f] = 1;
    for (int k = 0; k < static_cast<int>(piv.size()); ++k) {
      Scalar x = entry(k, f);
      if (x != 0) m[piv[k]] = -x;
    }
    out.push_back(Vec::from_map(m));
  }
  return out;
}

}  // namespace

std::vector<Vec> kernel_basis_dense(const LinearMap& f) {
  auto a = f.dense();
  auto piv = dense_rref(a, f.cols());
  return kernel_from_rref(f.cols(), piv, [&](int k, int j) { return a[k][j]; });
}

std::vector<Vec> kernel_basis_sparse(const LinearMap& f) {
  LinearMap t = f.transpose();
  Echelon e(f.cols());
  for (int i = 0; i < t.cols(); ++i) e.insert(t.col(i));
  e.canonicalize();
  std::vector<int> piv = e.pivots();
  std::vector<const Vec*> rows;
  for (int p : piv) rows.push_back(&e.rows().at(p));
  return kernel_from_rref(f.cols(), piv, [&](int k, int j) { return rows[k]->at(j); });
}

std::vector<Vec> kernel_basis(const LinearMap& f) {
  if (f.rows() <= kDenseLimit && f.cols() <= kDenseLimit) return kernel_basis_dense(f);
  return kernel_basis_sparse(f);
}

int rank(const LinearMap& f) {
  if (f.rows() <= kDenseLimit && f.cols() <= kDenseLimit) {
    auto a = f.dense();
    return static_cast<int>(dense_rref(a, f.cols()).size());
  }
  Echelon e(f.rows());
  for (int j = 0; j < f.cols(); ++j) e.insert(f.col(j));
  return e.rank();
}

std::vector<Vec> image_basis(const LinearMap& f) {
  Echelon e(f.rows());
  for (int j = 0; j < f.cols(); ++j) e.insert(f.col(j));
  e.canonicalize();
  std::vector<Vec> out;
  for (const auto& [p, r] : e.rows()) out.push_back(r);
  return out;
}

// ---- quotients ----

QuotientSpace make_quotient(int ambient_dim, const std::vector<Vec>& relations) {
  auto e = std::make_shared<Echelon>(ambient_dim);
  for (const auto& r : relations) {
    if (r.max_index() >= ambient_dim)
      throw InputError("relation vector has index " + std::to_string(r.max_index()) +
                       " but ambient dimension is " + std::to_string(ambient_dim));
    e->insert(r);
  }
  e->canonicalize();
  QuotientSpace q;
  q.ambient_dim = ambient_dim;
  for (const auto& [p, r] : e->rows()) q.relation_basis.push_back(r);
  q.coset_basis = e->free_columns();
  std::vector<int> pos(ambient_dim, -1);
  for (int k = 0; k < q.dim(); ++k) pos[q.coset_basis[k]] = k;
  q.project = LinearMap(q.dim(), ambient_dim);
  q.section = LinearMap(ambient_dim, q.dim());
  for (int k = 0; k < q.dim(); ++k) {
    q.project.set_col(q.coset_basis[k], Vec::unit(k));
    q.section.set_col(k, Vec::unit(q.coset_basis[k]));
  }
  for (const auto& [p, r] : e->rows()) {
    Vec col;
    for (const auto& [j, c] : r.entries())
      if (j != p) col.push_back(pos[j], -c);
    q.project.set_col(p, std::move(col));
  }
  q.echelon = std::move(e);
  return q;
}

QuotientSpace trivial_quotient(int dim) { return make_quotient(dim, {}); }

LinearMap induce_on_quotients(const LinearMap& f, const QuotientSpace& src,
                              const QuotientSpace& tgt) {
  if (f.cols() != src.ambient_dim || f.rows() != tgt.ambient_dim)
    throw InputError("induce_on_quotients: map is " + std::to_string(f.rows()) + "x" +
                     std::to_string(f.cols()) + " but ambients are " +
                     std::to_string(src.ambient_dim) + " -> " + std::to_string(tgt.ambient_dim));
  for (const auto& r : src.relation_basis)
    if (!tgt.in_relations(f.apply(r))) throw NotWellDefined(r);
  return tgt.project * (f * src.section);
}

// ---- complexes ----

ChainComplexData ChainComplexData::homological(std::vector<LinearMap> maps) {
  ChainComplexData cx;
  if (maps.empty()) throw InputError("homological complex needs at least one map");
  cx.dims.push_back(maps.front().rows());
  for (const auto& m : maps) cx.dims.push_back(m.cols());
  cx.d.push_back(LinearMap(0, cx.dims[0]));
  for (auto& m : maps) cx.d.push_back(std::move(m));
  cx.validate();
  return cx;
}

ChainComplexData ChainComplexData::cochain(std::vector<LinearMap> maps, int top_dim) {
  ChainComplexData cx;
  cx.cohomological = true;
  for (const auto& m : maps) cx.dims.push_back(m.cols());
  cx.dims.push_back(top_dim);
  for (auto& m : maps) cx.d.push_back(std::move(m));
  cx.d.push_back(LinearMap(0, top_dim));
  cx.validate();
  return cx;
}

const LinearMap* ChainComplexData::incoming(int n) const {
  if (!cohomological) return n + 1 < static_cast<int>(d.size()) ? &d[n + 1] : nullptr;
  return n >= 1 ? &d[n - 1] : nullptr;
}

void ChainComplexData::validate() const {
  int N = static_cast<int>(dims.size());
  if (static_cast<int>(d.size()) != N) throw InputError("complex: one map per degree expected");
  for (int n = 0; n < N; ++n) {
    if (d[n].cols() != dims[n]) throw InputError("complex: map source dimension mismatch at " + std::to_string(n));
    int expect = cohomological ? (n + 1 < N ? dims[n + 1] : 0) : (n >= 1 ? dims[n - 1] : 0);
    if (d[n].rows() != expect && d[n].rows() != 0)
      throw InputError("complex: map target dimension mismatch at " + std::to_string(n));
  }
}

std::vector<HomologyGroup> complex_homology(const ChainComplexData& cx) {
  cx.validate();
  int N = static_cast<int>(cx.dims.size());
  for (int n = 0; n < N; ++n) {
    const LinearMap* in = cx.incoming(n);
    const LinearMap& out = cx.outgoing(n);
    if (in && out.rows() > 0 && in->rows() > 0 && !(out * *in).is_zero()) throw NotAComplex(n);
  }
  std::vector<HomologyGroup> res(N);
  parallel_for(N, [&](int n) {
    const LinearMap& out = cx.outgoing(n);
    std::vector<Vec> ker;
    if (out.rows() == 0) {
      for (int i = 0; i < cx.dims[n]; ++i) ker.push_back(Vec::unit(i));
    } else {
      ker = kernel_basis(out);
    }
    Echelon e(cx.dims[n]);
    if (const LinearMap* in = cx.incoming(n); in && in->rows() > 0)
      for (int j = 0; j < in->cols(); ++j) e.insert(in->col(j));
    HomologyGroup g;
    g.degree = n;
    for (auto& k : ker)
      if (e.insert(k)) g.reps.push_back(std::move(k));
    g.dim = static_cast<int>(g.reps.size());
    res[n] = std::move(g);
  });
  return res;
}

std::vector<int> homology_dims(const ChainComplexData& cx) {
  std::vector<int> out;
  for (const auto& g : complex_homology(cx)) out.push_back(g.dim);
  return out;
}

QuotientSpace tensor_over_base(const BaseAction& v, const BaseAction& w) {
  if (v.act.size() != w.act.size())
    throw InputError("tensor_over_base: base algebra dimensions differ (" +
                     std::to_string(v.act.size()) + " vs " + std::to_string(w.act.size()) + ")");
  for (const auto& m : v.act)
    if (m.rows() != v.dim || m.cols() != v.dim) throw InputError("tensor_over_base: left factor action has wrong shape");
  for (const auto& m : w.act)
    if (m.rows() != w.dim || m.cols() != w.dim) throw InputError("tensor_over_base: right factor action has wrong shape");
  std::vector<Vec> rel;
  for (std::size_t a = 0; a < v.act.size(); ++a)
    for (int i = 0; i < v.dim; ++i)
      for (int j = 0; j < w.dim; ++j) {
        std::map<int, Scalar> m;
        for (const auto& [k, c] : v.act[a].col(i).entries()) m[k * w.dim + j] += c;
        for (const auto& [k, c] : w.act[a].col(j).entries()) m[i * w.dim + k] -= c;
        Vec r = Vec::from_map(m);
        if (!r.empty()) rel.push_back(std::move(r));
      }
  return make_quotient(v.dim * w.dim, rel);
}

// ---- threading ----

int thread_budget() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("HAKIT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, std::max(hw, 1) * 4);
  }
  return hw;
}

void parallel_for(int n, const std::function<void(int)>& body) {
  int t = std::min(thread_budget(), n);
  if (t <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int k = 0; k < t; ++k)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace hakit
