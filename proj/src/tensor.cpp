#include "hakit/tensor.hpp"

#include <sstream>
#include <unordered_map>

namespace hakit {

Tensor single(const Word& w, const Scalar& c) {
  Tensor t;
  if (c != 0) t.emplace(w, c);
  return t;
}

void add_word(Tensor& acc, const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = acc.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

void add_to(Tensor& acc, const Tensor& t, const Scalar& c) {
  for (const auto& [w, x] : t) add_word(acc, w, c * x);
}

Tensor scaled(Tensor t, const Scalar& c) {
  if (c == 0) return {};
  for (auto& [w, x] : t) x *= c;
  return t;
}

Tensor tensor_product(const Tensor& u, const Tensor& v) {
  Tensor out;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : v) add_word(out, a + b, x * y);
  return out;
}

Tensor from_vec(const Vec& v) {
  Tensor t;
  for (const auto& [i, c] : v.entries()) t.emplace(Word(1, to_letter(i)), c);
  return t;
}

std::string tensor_str(const Tensor& t) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << format_scalar(c) << "*";
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << letter(w, i);
    os << ")";
  }
  return os.str();
}

TensorSpace::TensorSpace(std::vector<int> slot_dims, std::vector<Junction> junctions)
    : slot_dims_(std::move(slot_dims)), junctions_(std::move(junctions)) {
  const int n = slots();
  if (n == 0) throw InputError("tensor space needs at least one slot");
  if (static_cast<int>(junctions_.size()) != n - 1)
    throw InputError("tensor space: expected " + std::to_string(n - 1) + " junctions");
  for (int d : slot_dims_)
    if (d < 0 || d > 255) throw InputError("tensor slot dimension must be in [0, 255]");
  for (int k = 1; k < n; ++k) {
    const Junction& J = junctions_[k - 1];
    if (static_cast<int>(J.right_on_prev.size()) != J.base_dim ||
        static_cast<int>(J.left_on_next.size()) != J.base_dim)
      throw InputError("junction action count differs from base dimension");
    for (const auto& m : J.right_on_prev)
      if (m.rows() != slot_dims_[k - 1] || m.cols() != slot_dims_[k - 1])
        throw InputError("junction right action has wrong shape");
    for (const auto& m : J.left_on_next)
      if (m.rows() != slot_dims_[k] || m.cols() != slot_dims_[k])
        throw InputError("junction left action has wrong shape");
  }

  stages_.push_back(trivial_quotient(slot_dims_[0]));
  std::vector<Word> w0;
  for (int i = 0; i < slot_dims_[0]; ++i) w0.emplace_back(1, to_letter(i));
  stage_words_.push_back(std::move(w0));

  for (int k = 1; k < n; ++k) {
    const QuotientSpace& prev = stages_[k - 1];
    const auto& prev_words = stage_words_[k - 1];
    const int dk = slot_dims_[k];
    const Junction& J = junctions_[k - 1];
    std::vector<Vec> rel;
    for (int p = 0; p < prev.dim(); ++p) {
      const Word& w = prev_words[p];
      Word prefix = w.substr(0, k - 1);
      int x = letter(w, k - 1);
      for (int a = 0; a < J.base_dim; ++a) {
        std::map<int, Scalar> xa;
        for (const auto& [z, c] : J.right_on_prev[a].col(x).entries()) {
          Vec pz = project_stage(prefix + to_letter(z), k - 1);
          for (const auto& [q, e] : pz.entries()) xa[q] += c * e;
        }
        for (int y = 0; y < dk; ++y) {
          std::map<int, Scalar> m;
          for (const auto& [q, c] : xa)
            if (c != 0) m[q * dk + y] += c;
          for (const auto& [z, c] : J.left_on_next[a].col(y).entries()) m[p * dk + z] -= c;
          Vec r = Vec::from_map(m);
          if (!r.empty()) rel.push_back(std::move(r));
        }
      }
    }
    stages_.push_back(make_quotient(prev.dim() * dk, rel));
    std::vector<Word> words;
    for (int c : stages_.back().coset_basis) words.push_back(prev_words[c / dk] + to_letter(c % dk));
    stage_words_.push_back(std::move(words));
  }
  final_ = trivial_quotient(stages_.back().dim());
  basis_words_ = stage_words_.back();
}

TensorSpace TensorSpace::free_slots(std::vector<int> slot_dims) {
  std::vector<Junction> js(slot_dims.empty() ? 0 : slot_dims.size() - 1);
  return TensorSpace(std::move(slot_dims), std::move(js));
}

TensorSpace TensorSpace::with_relations(const std::vector<Tensor>& extra) const {
  TensorSpace s = *this;
  for (const auto& t : extra) s.extra_.push_back(t);
  std::vector<Vec> rel;
  for (const auto& t : s.extra_) {
    std::map<int, Scalar> m;
    for (const auto& [w, c] : t) {
      if (static_cast<int>(w.size()) != slots()) throw InputError("relation tensor has wrong number of slots");
      Vec pw = project_stage(w, slots() - 1);
      for (const auto& [q, e] : pw.entries()) m[q] += c * e;
    }
    rel.push_back(Vec::from_map(m));
  }
  s.final_ = make_quotient(stages_.back().dim(), rel);
  s.basis_words_.clear();
  for (int c : s.final_.coset_basis) s.basis_words_.push_back(stage_words_.back()[c]);
  return s;
}

long long TensorSpace::ambient_dim() const {
  long long d = 1;
  for (int x : slot_dims_) d *= x;
  return d;
}

long long TensorSpace::ambient_index(const Word& w) const {
  long long idx = 0;
  for (int i = 0; i < slots(); ++i) idx = idx * slot_dims_[i] + letter(w, i);
  return idx;
}

Vec TensorSpace::project_stage(const Word& w, int upto) const {
  Vec v = Vec::unit(letter(w, 0));
  for (int k = 1; k <= upto; ++k) {
    const int dk = slot_dims_[k];
    const int y = letter(w, k);
    Vec amb;
    for (const auto& [q, c] : v.entries()) amb.push_back(q * dk + y, c);
    v = stages_[k].project.apply(amb);
    if (v.empty()) break;
  }
  return v;
}

Vec TensorSpace::project_word(const Word& w) const {
  if (static_cast<int>(w.size()) != slots())
    throw InputError("word with " + std::to_string(w.size()) + " slots projected into a " +
                     std::to_string(slots()) + "-slot space");
  for (int i = 0; i < slots(); ++i)
    if (letter(w, i) >= slot_dims_[i]) throw InputError("word letter outside slot basis");
  return final_.project.apply(project_stage(w, slots() - 1));
}

Vec TensorSpace::project(const Tensor& t) const {
  std::map<int, Scalar> m;
  for (const auto& [w, c] : t) {
    Vec pw = project_word(w);
    for (const auto& [q, e] : pw.entries()) m[q] += c * e;
  }
  return Vec::from_map(m);
}

Tensor TensorSpace::lift(const Vec& v) const {
  Tensor t;
  for (const auto& [i, c] : v.entries()) add_word(t, basis_words_[i], c);
  return t;
}

namespace {

bool for_each_suffix(const std::vector<int>& dims, int from, Word& buf,
                     const std::function<bool(const Word&)>& f) {
  if (from == static_cast<int>(dims.size())) return f(buf);
  for (int x = 0; x < dims[from]; ++x) {
    buf.push_back(to_letter(x));
    bool go = for_each_suffix(dims, from + 1, buf, f);
    buf.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace

void TensorSpace::for_each_relation(const std::function<bool(const Tensor&)>& f) const {
  const int n = slots();
  for (int k = 1; k < n; ++k) {
    const int dk = slot_dims_[k];
    for (const auto& row : stages_[k].relation_basis) {
      Tensor base;
      for (const auto& [idx, c] : row.entries())
        add_word(base, stage_words_[k - 1][idx / dk] + to_letter(idx % dk), c);
      Word suffix;
      bool go = for_each_suffix(slot_dims_, k + 1, suffix, [&](const Word& s) {
        if (s.empty()) return f(base);
        Tensor t;
        for (const auto& [w, c] : base) t.emplace(w + s, c);
        return f(t);
      });
      if (!go) return;
    }
  }
  for (const auto& t : extra_)
    if (!f(t)) return;
}

long long TensorSpace::relation_count_estimate() const {
  long long total = 0;
  for (int k = 1; k < slots(); ++k) {
    long long suffix = 1;
    for (int j = k + 1; j < slots(); ++j) suffix *= slot_dims_[j];
    total += static_cast<long long>(stages_[k].relation_basis.size()) * suffix;
  }
  return total + static_cast<long long>(extra_.size());
}

Tensor apply_op(const WordOp& op, const Tensor& t) {
  Tensor out;
  for (const auto& [w, c] : t) add_to(out, op(w), c);
  return out;
}

Vec ambient_vec(const TensorSpace& s, const Tensor& t) {
  std::map<int, Scalar> m;
  for (const auto& [w, c] : t) m[static_cast<int>(s.ambient_index(w))] += c;
  return Vec::from_map(m);
}

namespace {

struct ProjectedOp {
  const WordOp& op;
  const TensorSpace& tgt;
  std::unordered_map<Word, Vec> memo;

  const Vec& operator()(const Word& w) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    return memo.emplace(w, tgt.project(op(w))).first->second;
  }
};

}  // namespace

bool find_ill_defined(const WordOp& op, const TensorSpace& src, const TensorSpace& tgt,
                      Tensor* witness) {
  ProjectedOp pop{op, tgt, {}};
  bool bad = false;
  src.for_each_relation([&](const Tensor& r) {
    std::map<int, Scalar> acc;
    for (const auto& [w, c] : r)
      for (const auto& [q, e] : pop(w).entries()) acc[q] += c * e;
    for (const auto& [q, e] : acc)
      if (e != 0) {
        bad = true;
        if (witness) *witness = r;
        return false;
      }
    return true;
  });
  return bad;
}

LinearMap induce(const WordOp& op, const TensorSpace& src, const TensorSpace& tgt, bool verify) {
  LinearMap m(tgt.dim(), src.dim());
  std::vector<Vec> cols(src.dim());
  parallel_for(src.dim(), [&](int j) { cols[j] = tgt.project(op(src.basis_word(j))); });
  for (int j = 0; j < src.dim(); ++j) m.set_col(j, std::move(cols[j]));
  if (verify) {
    Tensor w;
    if (find_ill_defined(op, src, tgt, &w)) throw NotWellDefined(ambient_vec(src, w), "operator not well defined on " + tensor_str(w));
  }
  return m;
}

}  // namespace hakit
