#include "hakit/lierinehart.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include "hakit/examples.hpp"

namespace hakit {

// ---- data ----

void LieRinehartData::validate() const {
  const int m = base.dim, r = rank();
  if (m <= 0) throw InputError("Lie-Rinehart: empty base algebra");
  check_associative_unital(base, "Lie-Rinehart base");
  if (!base.is_commutative()) throw InputError("Lie-Rinehart: base algebra is not commutative");
  if (static_cast<int>(anchor.size()) != r || static_cast<int>(eps_r.size()) != r ||
      static_cast<int>(bracket.size()) != r)
    throw InputError("Lie-Rinehart: anchor, bracket and eps_r must have one entry per generator");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(anchor[i].size()) != m)
      throw InputError("Lie-Rinehart: anchor of " + labels[i] + " needs one value per base element");
    if (static_cast<int>(bracket[i].size()) != r)
      throw InputError("Lie-Rinehart: bracket table has wrong shape");
    for (int j = 0; j < r; ++j)
      if (static_cast<int>(bracket[i][j].size()) != r) throw InputError("Lie-Rinehart: bracket table has wrong shape");
  }
  auto in_range = [&](const Vec& v, int dim) { return v.empty() || (v.leading() >= 0 && v.max_index() < dim); };
  for (int i = 0; i < r; ++i) {
    if (!in_range(eps_r[i], m)) throw InputError("Lie-Rinehart: eps_r value out of range");
    for (int b = 0; b < m; ++b)
      if (!in_range(anchor[i][b], m)) throw InputError("Lie-Rinehart: anchor value out of range");
    for (int j = 0; j < r; ++j)
      for (int l = 0; l < r; ++l)
        if (!in_range(bracket[i][j][l], m)) throw InputError("Lie-Rinehart: bracket coefficient out of range");
  }
  auto X = [&](int i, const Vec& a) {
    Vec out;
    for (const auto& [b, c] : a.entries()) out.axpy(c, anchor[i][b]);
    return out;
  };
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        Vec lhs = X(i, base.mul(a, b));
        Vec rhs = base.mul(X(i, Vec::unit(a)), Vec::unit(b)) + base.mul(Vec::unit(a), X(i, Vec::unit(b)));
        if (!(lhs == rhs))
          throw InputError("Lie-Rinehart: anchor of " + labels[i] + " is not a derivation (Leibniz fails on " +
                           base_labels[a] + ", " + base_labels[b] + ")");
      }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int l = 0; l < r; ++l)
        if (!(bracket[i][j][l] + bracket[j][i][l]).empty())
          throw InputError("Lie-Rinehart: bracket is not antisymmetric on " + labels[i] + ", " + labels[j]);
  // [X_i, X_j](a) = X_i X_j a - X_j X_i a
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int a = 0; a < m; ++a) {
        Vec lhs;
        for (int l = 0; l < r; ++l) lhs += base.mul(bracket[i][j][l], X(l, Vec::unit(a)));
        Vec rhs = X(i, X(j, Vec::unit(a))) - X(j, X(i, Vec::unit(a)));
        if (!(lhs == rhs))
          throw InputError("Lie-Rinehart: anchor is not a Lie map on " + labels[i] + ", " + labels[j]);
      }
  using L = std::vector<Vec>;
  auto br = [&](const L& x, const L& y) {
    L out(r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (x[i].empty() || y[j].empty()) continue;
        Vec ab = base.mul(x[i], y[j]);
        for (int l = 0; l < r; ++l) out[l] += base.mul(ab, bracket[i][j][l]);
        out[j] += base.mul(x[i], X(i, y[j]));
        out[i] -= base.mul(y[j], X(j, x[i]));
      }
    return out;
  };
  auto gen = [&](int i) {
    L v(r);
    v[i] = base.unit;
    return v;
  };
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        L s1 = br(gen(i), br(gen(j), gen(k)));
        L s2 = br(gen(j), br(gen(k), gen(i)));
        L s3 = br(gen(k), br(gen(i), gen(j)));
        for (int l = 0; l < r; ++l)
          if (!(s1[l] + s2[l] + s3[l]).empty())
            throw InputError("Lie-Rinehart: Jacobi identity fails on " + labels[i] + ", " + labels[j] + ", " +
                             labels[k]);
      }
}

LieRinehartData lie_algebra_data(const std::string& name, const std::vector<std::string>& labels,
                                 const std::vector<std::tuple<int, int, int, Scalar>>& brackets,
                                 const std::vector<Scalar>& eps_r) {
  const int r = static_cast<int>(labels.size());
  if (static_cast<int>(eps_r.size()) != r) throw InputError("eps_r needs one value per generator");
  LieRinehartData d;
  d.name = name;
  d.base = algebra_field_Q();
  d.base_labels = {"1"};
  d.labels = labels;
  d.anchor.assign(r, std::vector<Vec>(1));
  d.bracket.assign(r, std::vector<std::vector<Vec>>(r, std::vector<Vec>(r)));
  for (const auto& [i, j, k, c] : brackets) {
    if (i < 0 || j < 0 || k < 0 || i >= r || j >= r || k >= r) throw InputError("bracket index out of range");
    d.bracket[i][j][k] += Vec::unit(0, c);
    d.bracket[j][i][k] -= Vec::unit(0, c);
  }
  for (int i = 0; i < r; ++i)
    if (eps_r[i] != 0) d.eps_r.push_back(Vec::unit(0, eps_r[i]));
    else d.eps_r.emplace_back();
  return d;
}

LieRinehartData dual_numbers_rank_one(const Vec& x_of_t, const Vec& eps) {
  LieRinehartData d;
  d.name = "dual-numbers-rank-one";
  d.base = algebra_dual_numbers();
  d.base_labels = {"1", "t"};
  d.labels = {"X"};
  d.anchor = {{Vec(), x_of_t}};
  d.bracket = {{{Vec()}}};
  d.eps_r = {eps};
  return d;
}

// ---- truncation ----

namespace {

void enumerate_monos(int r, int len, Mono& cur, std::vector<Mono>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int i = lo; i < r; ++i) {
    cur.push_back(i);
    enumerate_monos(r, len, cur, out);
    cur.pop_back();
  }
}

Mono pick(const Mono& w, unsigned mask, bool in) {
  Mono out;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (static_cast<bool>(mask >> k & 1U) == in) out.push_back(w[k]);
  return out;
}

void prune(std::map<Mono, Vec>& e) {
  for (auto it = e.begin(); it != e.end();) it = it->second.empty() ? e.erase(it) : std::next(it);
}

}  // namespace

LieRinehartTruncation::LieRinehartTruncation(LieRinehartData data, int N) : data_(std::move(data)), N_(N) {
  data_.validate();
  if (N_ < 1) throw InputError("Lie-Rinehart truncation degree must be at least 1");
  m_ = data_.base.dim;
  const int r = data_.rank();
  for (int len = 0; len <= N_; ++len) {
    Mono cur;
    enumerate_monos(r, len, cur, monos_);
  }
  if (dim() > 255 || static_cast<int>(monos_.size()) > 255)
    throw InputError("Lie-Rinehart truncation of dimension " + std::to_string(dim()) + " exceeds 255");
  for (int k = 0; k < static_cast<int>(monos_.size()); ++k) index_[monos_[k]] = k;
  antipode_.resize(dim());
  for (int x = 0; x < dim(); ++x) {
    const Mono& w = monos_[x / m_];
    Vec v = base_element(Vec::unit(x % m_));
    for (int i : w) {
      Vec s = base_element(data_.eps_r[i]) - generator(i);
      v = mul(s, v);
    }
    antipode_[x] = v;
  }
}

int LieRinehartTruncation::mono_index(const Mono& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw TruncationTooSmall("monomial of degree " + std::to_string(w.size()) +
                                                   " exceeds truncation degree " + std::to_string(N_));
  return it->second;
}

std::string LieRinehartTruncation::mono_label(int mono) const {
  const Mono& w = monos_[mono];
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t e = k;
    while (e < w.size() && w[e] == w[k]) ++e;
    if (!s.empty()) s += " ";
    s += data_.labels[w[k]];
    if (e - k > 1) s += "^" + std::to_string(e - k);
    k = e;
  }
  return s;
}

std::string LieRinehartTruncation::label(int flat) const {
  int mono = flat / m_, b = flat % m_;
  if (m_ == 1) return mono_label(mono);
  if (mono == 0) return data_.base_labels[b];
  if (data_.base_labels[b] == "1") return mono_label(mono);
  return data_.base_labels[b] + " " + mono_label(mono);
}

Vec LieRinehartTruncation::generator(int i) const {
  if (N_ < 1) throw TruncationTooSmall("generators need degree 1");
  return to_flat({{Mono{i}, data_.base.unit}});
}

Vec LieRinehartTruncation::base_element(const Vec& a) const {
  Vec v;
  for (const auto& [b, c] : a.entries()) v.push_back(b, c);
  return v;
}

Vec LieRinehartTruncation::anchor_apply(int i, const Vec& a) const {
  Vec out;
  for (const auto& [b, c] : a.entries()) out.axpy(c, data_.anchor[i][b]);
  return out;
}

Vec LieRinehartTruncation::eps_r_of(const std::vector<Vec>& l) const {
  Vec out;
  for (int i = 0; i < data_.rank(); ++i) {
    if (l[i].empty()) continue;
    out += mul_base(l[i], data_.eps_r[i]);
    out -= anchor_apply(i, l[i]);
  }
  return out;
}

std::vector<Vec> LieRinehartTruncation::lie_bracket(const std::vector<Vec>& x, const std::vector<Vec>& y) const {
  const int r = data_.rank();
  std::vector<Vec> out(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (x[i].empty() || y[j].empty()) continue;
      Vec ab = mul_base(x[i], y[j]);
      for (int l = 0; l < r; ++l) out[l] += mul_base(ab, data_.bracket[i][j][l]);
      out[j] += mul_base(x[i], anchor_apply(i, y[j]));
      out[i] -= mul_base(y[j], anchor_apply(j, x[i]));
    }
  return out;
}

Vec LieRinehartTruncation::curvature(int i, int j) const {
  std::vector<Vec> xi(data_.rank()), xj(data_.rank());
  xi[i] = data_.base.unit;
  xj[j] = data_.base.unit;
  return anchor_apply(j, data_.eps_r[i]) - anchor_apply(i, data_.eps_r[j]) - eps_r_of(lie_bracket(xj, xi));
}

Vec LieRinehartTruncation::nabla(const Vec& D, const Vec& a) const { return eps_r(mul(base_element(a), D)); }

void LieRinehartTruncation::add_scaled(Elem& acc, const Elem& e, const Vec& a) const {
  for (const auto& [w, c] : e) acc[w] += mul_base(a, c);
}

Vec LieRinehartTruncation::to_flat(const Elem& e) const {
  std::map<int, Scalar> out;
  for (const auto& [w, a] : e) {
    int k = mono_index(w);
    for (const auto& [b, c] : a.entries()) out[flat(k, b)] += c;
  }
  return Vec::from_map(out);
}

LieRinehartTruncation::Elem LieRinehartTruncation::of_flat(const Vec& v) const {
  Elem e;
  for (const auto& [x, c] : v.entries()) e[monos_[x / m_]] += Vec::unit(x % m_, c);
  prune(e);
  return e;
}

LieRinehartTruncation::Elem LieRinehartTruncation::rmul_gen(const Mono& w, int j) const {
  if (static_cast<int>(w.size()) + 1 > N_)
    throw TruncationTooSmall("product of degree " + std::to_string(w.size() + 1) + " exceeds truncation degree " +
                             std::to_string(N_));
  auto key = std::make_pair(w, j);
  if (auto it = gen_memo_.find(key); it != gen_memo_.end()) return it->second;
  Elem out;
  if (w.empty() || j >= w.back()) {
    Mono u = w;
    u.push_back(j);
    out[u] = data_.base.unit;
  } else {
    // X^{w'} X_i X_j = (X^{w'} X_j) X_i + X^{w'} [X_i, X_j]
    int i = w.back();
    Mono wp(w.begin(), w.end() - 1);
    Elem first = rmul_gen(wp, j);
    for (const auto& [m1, c1] : first) add_scaled(out, rmul_gen(m1, i), c1);
    for (int l = 0; l < data_.rank(); ++l) {
      const Vec& c = data_.bracket[i][j][l];
      if (c.empty()) continue;
      Elem wc = rmul_base(wp, c);
      for (const auto& [m2, c2] : wc) add_scaled(out, rmul_gen(m2, l), c2);
    }
  }
  prune(out);
  gen_memo_[key] = out;
  return out;
}

LieRinehartTruncation::Elem LieRinehartTruncation::rmul_base(const Mono& w, int b) const {
  auto key = std::make_pair(w, b);
  if (auto it = base_memo_.find(key); it != base_memo_.end()) return it->second;
  Elem out;
  if (w.empty()) {
    out[w] = Vec::unit(b);
  } else {
    // X^{w'} X_i b = (X^{w'} b) X_i + X^{w'} X_i(b)
    int i = w.back();
    Mono wp(w.begin(), w.end() - 1);
    Elem first = rmul_base(wp, b);
    for (const auto& [m1, c1] : first) add_scaled(out, rmul_gen(m1, i), c1);
    Vec xb = data_.anchor[i][b];
    if (!xb.empty())
      for (const auto& [m2, c2] : rmul_base(wp, xb)) out[m2] += c2;
  }
  prune(out);
  base_memo_[key] = out;
  return out;
}

LieRinehartTruncation::Elem LieRinehartTruncation::rmul_base(const Mono& w, const Vec& a) const {
  Elem out;
  for (const auto& [b, c] : a.entries())
    for (const auto& [m, v] : rmul_base(w, b)) out[m].axpy(c, v);
  prune(out);
  return out;
}

// Σ a_m X^m  ->  Σ X^m c_m (coefficients on the right).
LieRinehartTruncation::Elem LieRinehartTruncation::right_form(Elem left) const {
  Elem R;
  prune(left);
  while (!left.empty()) {
    auto top = left.begin();
    for (auto it = left.begin(); it != left.end(); ++it)
      if (it->first.size() > top->first.size()) top = it;
    Mono m = top->first;
    Vec a = top->second;
    R[m] += a;
    for (const auto& [w, c] : rmul_base(m, a)) left[w] -= c;
    prune(left);
  }
  prune(R);
  return R;
}

Vec LieRinehartTruncation::mul(int x, int y) const {
  if (degree(x) + degree(y) > N_)
    throw TruncationTooSmall("product " + label(x) + " * " + label(y) + " exceeds truncation degree " +
                             std::to_string(N_));
  auto key = std::make_pair(x, y);
  if (auto it = mul_memo_.find(key); it != mul_memo_.end()) return it->second;
  Elem cur = rmul_base(monos_[x / m_], y % m_);
  for (int j : monos_[y / m_]) {
    Elem next;
    for (const auto& [w, c] : cur) add_scaled(next, rmul_gen(w, j), c);
    prune(next);
    cur = std::move(next);
  }
  Elem out;
  add_scaled(out, cur, Vec::unit(x % m_));
  prune(out);
  Vec v = to_flat(out);
  mul_memo_[key] = v;
  return v;
}

Vec LieRinehartTruncation::mul(const Vec& x, const Vec& y) const {
  std::map<int, Scalar> acc;
  for (const auto& [i, a] : x.entries())
    for (const auto& [j, b] : y.entries()) {
      const Vec p = mul(i, j);
      for (const auto& [k, c] : p.entries()) acc[k] += a * b * c;
    }
  return Vec::from_map(acc);
}

Vec LieRinehartTruncation::eps_l(const Vec& x) const {
  Vec out;
  for (const auto& [f, c] : x.entries())
    if (f < m_) out.push_back(f, c);
  return out;
}

Vec LieRinehartTruncation::eps_r(const Vec& x) const {
  Vec out;
  for (const auto& [f, c] : x.entries()) {
    Vec v = Vec::unit(f % m_);
    for (int i : monos_[f / m_]) v = mul_base(v, data_.eps_r[i]) - anchor_apply(i, v);
    out.axpy(c, v);
  }
  return out;
}

Vec LieRinehartTruncation::antipode(int x) const { return antipode_[x]; }

Vec LieRinehartTruncation::antipode(const Vec& x) const {
  Vec out;
  for (const auto& [f, c] : x.entries()) out.axpy(c, antipode_[f]);
  return out;
}

Tensor LieRinehartTruncation::delta_l(int x) const {
  const Mono& w = monos_[x / m_];
  const int b = x % m_;
  Tensor out;
  for (unsigned mask = 0; mask < (1U << w.size()); ++mask) {
    int s = flat(mono_index(pick(w, mask, true)), b);
    int mc = mono_index(pick(w, mask, false));
    for (const auto& [u, c] : data_.base.unit.entries()) add_word(out, word_of({s, flat(mc, u)}), c);
  }
  return out;
}

Tensor LieRinehartTruncation::delta_r(int x) const {
  const Vec one = base_element(data_.base.unit);
  Tensor cur;
  for (const auto& [u, c] : one.entries()) add_word(cur, word_of({x % m_, u}), c);
  for (int i : monos_[x / m_]) {
    Vec X = generator(i), e = base_element(data_.eps_r[i]);
    std::vector<std::tuple<Vec, Vec, Scalar>> factor = {{one, X, 1}, {X, one, 1}, {e, one, -1}};
    Tensor next;
    for (const auto& [wd, c] : cur) {
      Vec p = Vec::unit(letter(wd, 0)), q = Vec::unit(letter(wd, 1));
      for (const auto& [f1, f2, s] : factor) {
        if (f1.empty() || f2.empty()) continue;
        Vec l = mul(p, f1), r = mul(q, f2);
        for (const auto& [a, ca] : l.entries())
          for (const auto& [bb, cb] : r.entries()) add_word(next, word_of({a, bb}), c * s * ca * cb);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Tensor LieRinehartTruncation::translation(int x, bool literal_order) const {
  const Mono& w = monos_[x / m_];
  const int b = x % m_;
  const int n = static_cast<int>(w.size());
  Tensor out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    Mono in = pick(w, mask, true), rest = pick(w, mask, false);
    if (!literal_order) std::reverse(rest.begin(), rest.end());
    Vec q = base_element(data_.base.unit);
    for (int i : rest) q = mul(q, generator(i));
    Scalar sign = (n - static_cast<int>(in.size())) % 2 ? -1 : 1;
    int p = flat(mono_index(in), b);
    for (const auto& [k, c] : q.entries()) add_word(out, word_of({p, k}), sign * c);
  }
  return out;
}

namespace {

struct Item {
  std::vector<int> mono;
  std::vector<Vec> coef;
  Scalar s;
};

}  // namespace

Tensor LieRinehartTruncation::normalize(const Tensor& raw, const std::vector<Junction>& kinds) const {
  Tensor out;
  std::function<void(Item&, int)> step = [&](Item& it, int k) {
    if (k == 0) {
      for (const auto& [b, c] : it.coef[0].entries()) {
        Word w;
        w.push_back(to_letter(flat(it.mono[0], b)));
        for (std::size_t j = 1; j < it.mono.size(); ++j) w.push_back(to_letter(it.mono[j]));
        add_word(out, w, it.s * c);
      }
      return;
    }
    switch (kinds[k - 1]) {
      case Junction::LL: {
        it.coef[k - 1] = mul_base(it.coef[k - 1], it.coef[k]);
        step(it, k - 1);
        break;
      }
      case Junction::RL: {
        Elem e = rmul_base(monos_[it.mono[k - 1]], it.coef[k]);
        for (const auto& [w, a] : e) {
          Item j = it;
          j.mono[k - 1] = mono_index(w);
          j.coef[k - 1] = mul_base(it.coef[k - 1], a);
          step(j, k - 1);
        }
        break;
      }
      case Junction::RR: {
        Elem R = right_form({{monos_[it.mono[k]], it.coef[k]}});
        for (const auto& [w, c] : R) {
          Elem e = rmul_base(monos_[it.mono[k - 1]], c);
          for (const auto& [w2, a] : e) {
            Item j = it;
            j.mono[k] = mono_index(w);
            j.mono[k - 1] = mono_index(w2);
            j.coef[k - 1] = mul_base(it.coef[k - 1], a);
            step(j, k - 1);
          }
        }
        break;
      }
    }
  };
  for (const auto& [w, c] : raw) {
    if (w.size() != kinds.size() + 1) throw std::logic_error("normalize: junction count does not match word length");
    Item it;
    it.s = c;
    for (std::size_t k = 0; k < w.size(); ++k) {
      int f = letter(w, k);
      it.mono.push_back(f / m_);
      it.coef.push_back(Vec::unit(f % m_));
    }
    step(it, static_cast<int>(w.size()) - 1);
  }
  return out;
}

Tensor LieRinehartTruncation::raw_of_normal(const Tensor& nf) const {
  Tensor out;
  for (const auto& [w, c] : nf) {
    Tensor acc = single(w.substr(0, 1), c);
    for (std::size_t k = 1; k < w.size(); ++k) {
      Tensor slot;
      for (const auto& [u, cu] : data_.base.unit.entries()) add_word(slot, word_of({flat(letter(w, k), u)}), cu);
      acc = tensor_product(acc, slot);
    }
    add_to(out, acc);
  }
  return out;
}

// ---- checks ----

namespace {

using J = LieRinehartTruncation::Junction;

Tensor expand_slot(const Tensor& t, std::size_t pos, const std::function<Tensor(int)>& f) {
  Tensor out;
  for (const auto& [w, c] : t) {
    Tensor mid = f(letter(w, pos));
    for (const auto& [m, cm] : mid) add_word(out, w.substr(0, pos) + m + w.substr(pos + 1), c * cm);
  }
  return out;
}

Tensor vec_tensor(const Vec& v) { return from_vec(v); }

// Factorwise product of two raw tensors with the same number of slots.
Tensor slotwise(const LieRinehartTruncation& T, const Tensor& u, const Tensor& v) {
  Tensor out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) {
      Tensor acc = single(Word(), ca * cb);
      for (std::size_t k = 0; k < a.size(); ++k)
        acc = tensor_product(acc, vec_tensor(T.mul(letter(a, k), letter(b, k))));
      add_to(out, acc);
    }
  return out;
}

std::string nf_str(const LieRinehartTruncation& T, const Tensor& t) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t) {
    if (!first) os << " + ";
    first = false;
    os << format_scalar(c) << "*(" << T.label(letter(w, 0));
    for (std::size_t k = 1; k < w.size(); ++k) os << " | " << T.mono_label(letter(w, k));
    os << ")";
  }
  return os.str();
}

std::string raw_str(const LieRinehartTruncation& T, const Tensor& t) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t) {
    if (!first) os << " + ";
    first = false;
    os << format_scalar(c) << "*(";
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " | " : "") << T.label(letter(w, k));
    os << ")";
  }
  return os.str();
}

std::string vec_str(const LieRinehartTruncation& T, const Vec& v) { return raw_str(T, from_vec(v)); }

Tensor diff(Tensor a, const Tensor& b) {
  add_to(a, b, -1);
  return a;
}

void note_eq_vec(AxiomReport& rep, const LieRinehartTruncation& T, const std::string& name, const std::string& witness,
                 const Vec& lhs, const Vec& rhs) {
  bool ok = lhs == rhs;
  rep.note(name, ok, witness, ok ? "" : vec_str(T, lhs - rhs));
}

void note_eq_nf(AxiomReport& rep, const LieRinehartTruncation& T, const std::string& name, const std::string& witness,
                const Tensor& lhs, const Tensor& rhs) {
  Tensor d = diff(lhs, rhs);
  rep.note(name, d.empty(), witness, d.empty() ? "" : nf_str(T, d));
}

bool is_flat(const LieRinehartTruncation& T) {
  for (int i = 0; i < T.data().rank(); ++i)
    for (int j = i + 1; j < T.data().rank(); ++j)
      if (!T.curvature(i, j).empty()) return false;
  return true;
}

}  // namespace

FlatnessReport antipode_flatness_check(const LieRinehartTruncation& T) {
  FlatnessReport out;
  AxiomReport& rep = out.report;
  const auto& D = T.data();
  const int r = D.rank(), m = T.base_dim(), N = T.N(), dim = T.dim();
  auto L = [&](int x) { return T.label(x); };

  out.flat = true;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      Vec c = T.curvature(i, j);
      if (!c.empty()) out.flat = false;
      rep.note("Curvature", c.empty(), "(" + D.labels[i] + ", " + D.labels[j] + ")",
               c.empty() ? "" : "curvature on 1 = " + vec_str(T, T.base_element(c)));
    }
  if (r < 2) rep.note("Curvature", true);

  // Connection rules on generators: ∇_X(ab) = a∇_X b - X(a)b and ∇_{aX}b = a∇_X b - X(a)b.
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        Vec X = T.generator(i);
        Vec rhs = T.mul_base(Vec::unit(a), T.nabla(X, Vec::unit(b))) -
                  T.mul_base(T.anchor_apply(i, Vec::unit(a)), Vec::unit(b));
        std::string w = "(" + D.labels[i] + ", " + D.base_labels[a] + ", " + D.base_labels[b] + ")";
        note_eq_vec(rep, T, "RightConnection-1", w, T.base_element(T.nabla(X, D.base.mul(a, b))), T.base_element(rhs));
        Vec aX = T.mul(T.base_element(Vec::unit(a)), X);
        note_eq_vec(rep, T, "RightConnection-2", w, T.base_element(T.nabla(aX, Vec::unit(b))), T.base_element(rhs));
      }

  out.antihomomorphism = true;
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      if (T.degree(x) + T.degree(y) > N) continue;
      Vec lhs = T.antipode(T.mul(x, y));
      Vec rhs = T.mul(T.antipode(y), T.antipode(x));
      if (!(lhs == rhs)) out.antihomomorphism = false;
      note_eq_vec(rep, T, "AntiHom", "(" + L(x) + ", " + L(y) + ")", lhs, rhs);
    }

  if (!out.flat) return out;

  const std::vector<J> LL1{J::LL}, RR1{J::RR};
  for (int x = 0; x < dim; ++x) {
    const std::string w = L(x);
    note_eq_vec(rep, T, "SInvolutive", w, T.antipode(T.antipode(Vec::unit(x))), Vec::unit(x));
    for (int a = 0; a < m; ++a) {
      Vec ea = T.base_element(Vec::unit(a));
      std::string wa = "(" + D.base_labels[a] + ", " + w + ")";
      note_eq_vec(rep, T, "AntipodeTwist", wa, T.antipode(T.mul(ea, Vec::unit(x))), T.mul(T.antipode(x), ea));
      if (T.degree(x) < N || N == 0)
        note_eq_vec(rep, T, "AntipodeTwist", wa, T.antipode(T.mul(Vec::unit(x), ea)), T.mul(ea, T.antipode(x)));
    }
    if (T.degree(x) > N - 1) continue;

    Tensor dl = T.delta_l(x), dr = T.delta_r(x);
    Tensor xr = single(word_of({x}));

    // left bialgebroid
    note_eq_nf(rep, T, "CoAssoc_l", w,
               T.normalize(expand_slot(dl, 0, [&](int h) { return T.delta_l(h); }), {J::LL, J::LL}),
               T.normalize(expand_slot(dl, 1, [&](int h) { return T.delta_l(h); }), {J::LL, J::LL}));
    Vec cl, cr;
    for (const auto& [wd, c] : dl) {
      cl.axpy(c, T.mul(T.base_element(T.eps_l(Vec::unit(letter(wd, 0)))), Vec::unit(letter(wd, 1))));
      cr.axpy(c, T.mul(T.base_element(T.eps_l(Vec::unit(letter(wd, 1)))), Vec::unit(letter(wd, 0))));
    }
    note_eq_vec(rep, T, "CoUnitLeft_l", w, cl, Vec::unit(x));
    note_eq_vec(rep, T, "CoUnitRight_l", w, cr, Vec::unit(x));

    // right bialgebroid
    note_eq_nf(rep, T, "CoAssoc_r", w,
               T.normalize(expand_slot(dr, 0, [&](int h) { return T.delta_r(h); }), {J::RR, J::RR}),
               T.normalize(expand_slot(dr, 1, [&](int h) { return T.delta_r(h); }), {J::RR, J::RR}));
    Vec ul, ur;
    for (const auto& [wd, c] : dr) {
      ul.axpy(c, T.mul(Vec::unit(letter(wd, 1)), T.base_element(T.eps_r(Vec::unit(letter(wd, 0))))));
      ur.axpy(c, T.mul(Vec::unit(letter(wd, 0)), T.base_element(T.eps_r(Vec::unit(letter(wd, 1))))));
    }
    note_eq_vec(rep, T, "CoUnitLeft_r", w, ul, Vec::unit(x));
    note_eq_vec(rep, T, "CoUnitRight_r", w, ur, Vec::unit(x));

    // twisted coassociativity
    note_eq_nf(rep, T, "TwCoAssoc-1", w,
               T.normalize(expand_slot(dr, 0, [&](int h) { return T.delta_l(h); }), {J::LL, J::RR}),
               T.normalize(expand_slot(dl, 1, [&](int h) { return T.delta_r(h); }), {J::LL, J::RR}));
    note_eq_nf(rep, T, "TwCoAssoc-2", w,
               T.normalize(expand_slot(dl, 0, [&](int h) { return T.delta_r(h); }), {J::RR, J::LL}),
               T.normalize(expand_slot(dr, 1, [&](int h) { return T.delta_l(h); }), {J::RR, J::LL}));

    // antipode axioms
    Vec apl, apr;
    for (const auto& [wd, c] : dl) apl.axpy(c, T.mul(T.antipode(letter(wd, 0)), Vec::unit(letter(wd, 1))));
    for (const auto& [wd, c] : dr) apr.axpy(c, T.mul(Vec::unit(letter(wd, 0)), T.antipode(letter(wd, 1))));
    note_eq_vec(rep, T, "TwAp-left", w, apl, T.base_element(T.eps_r(Vec::unit(x))));
    note_eq_vec(rep, T, "TwAp-right", w, apr, T.base_element(T.eps_l(Vec::unit(x))));

    for (int y = 0; y < dim; ++y) {
      if (T.degree(x) + T.degree(y) > N - 1) continue;
      const std::string wy = "(" + w + ", " + L(y) + ")";
      Vec xy = T.mul(x, y);
      Tensor lhs_l, lhs_r;
      for (const auto& [k, c] : xy.entries()) {
        add_to(lhs_l, T.delta_l(k), c);
        add_to(lhs_r, T.delta_r(k), c);
      }
      note_eq_nf(rep, T, "MultDelta_l", wy, T.normalize(lhs_l, LL1), T.normalize(slotwise(T, dl, T.delta_l(y)), LL1));
      note_eq_nf(rep, T, "MultDelta_r", wy, T.normalize(lhs_r, RR1), T.normalize(slotwise(T, dr, T.delta_r(y)), RR1));
      Vec ex = T.eps_l(T.mul(Vec::unit(x), T.base_element(T.eps_l(Vec::unit(y)))));
      note_eq_vec(rep, T, "CounitMult_l", wy, T.base_element(T.eps_l(xy)), T.base_element(ex));
      Vec ey = T.eps_r(T.mul(T.base_element(T.eps_r(Vec::unit(x))), Vec::unit(y)));
      note_eq_vec(rep, T, "CounitMult_r", wy, T.base_element(T.eps_r(xy)), T.base_element(ey));
    }
  }
  return out;
}

AxiomReport translation_map_check(const LieRinehartTruncation& T, int max_degree, bool literal_order) {
  AxiomReport rep;
  const int top = max_degree < 0 ? T.N() : std::min(max_degree, T.N());
  const Vec one = T.base_element(T.data().base.unit);
  const bool flat = is_flat(T);
  std::unique_ptr<LieRinehartTruncation> T0;
  {
    LieRinehartData d0 = T.data();
    for (auto& e : d0.eps_r) e = Vec();
    T0 = std::make_unique<LieRinehartTruncation>(d0, T.N());
    if (!is_flat(*T0)) T0.reset();
  }
  for (int x = 0; x < T.dim(); ++x) {
    if (T.degree(x) > top) continue;
    const std::string w = T.label(x);
    Tensor tr = T.translation(x, literal_order);

    // D_+(1) ⊗ D_+(2) D_- = D ⊗ 1
    Tensor lhs;
    for (const auto& [wd, c] : tr) {
      Tensor dp = T.delta_l(letter(wd, 0));
      for (const auto& [pw, pc] : dp) {
        Vec q = T.mul(Vec::unit(letter(pw, 1)), Vec::unit(letter(wd, 1)));
        for (const auto& [k, ck] : q.entries()) add_word(lhs, word_of({letter(pw, 0), k}), c * pc * ck);
      }
    }
    Tensor rhs;
    for (const auto& [k, ck] : one.entries()) add_word(rhs, word_of({x, k}), ck);
    note_eq_nf(rep, T, "Translation-GaloisInverse", w, T.normalize(lhs, {J::LL}), T.normalize(rhs, {J::LL}));

    // D_+(1) ⊗ D_+(2) ⊗ D_- = D_(1) ⊗ D_(2)+ ⊗ D_(2)-
    Tensor l3 = expand_slot(tr, 0, [&](int h) { return T.delta_l(h); });
    Tensor r3 = expand_slot(T.delta_l(x), 1, [&](int h) { return T.translation(h, literal_order); });
    note_eq_nf(rep, T, "Translation-Coproduct", w, T.normalize(l3, {J::LL, J::RL}), T.normalize(r3, {J::LL, J::RL}));

    // D_+ D_- = eps_l(D)
    Vec prod;
    for (const auto& [wd, c] : tr) prod.axpy(c, T.mul(letter(wd, 0), letter(wd, 1)));
    note_eq_vec(rep, T, "Translation-Counit", w, prod, T.base_element(T.eps_l(Vec::unit(x))));

    // D^(1) ⊗ S(D^(2)) through a flat right connection
    auto via = [&](const LieRinehartTruncation& U) {
      return U.normalize(expand_slot(U.delta_r(x), 1, [&](int h) { return from_vec(U.antipode(h)); }), {J::RL});
    };
    Tensor ntr = T.normalize(tr, {J::RL});
    if (flat) note_eq_nf(rep, T, "TranslationIndependence", w + " [given connection]", ntr, via(T));
    if (T0) note_eq_nf(rep, T, "TranslationIndependence", w + " [zero connection]", ntr, via(*T0));
  }
  return rep;
}

namespace {

using Wedge = std::map<std::vector<int>, Vec>;  // strictly increasing generator indices -> coefficient in A

int perm_sign(std::vector<int> v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) s = -s;
      else if (v[i] == v[j]) return 0;
  return s;
}

void add_wedge(Wedge& acc, std::vector<int> I, const Vec& a) {
  int s = perm_sign(I);
  if (s == 0 || a.empty()) return;
  std::sort(I.begin(), I.end());
  acc[I].axpy(s, a);
  if (acc[I].empty()) acc.erase(I);
}

struct CochainOps {
  const LieRinehartTruncation& T;
  Vec one;

  Tensor canon(int n, const Tensor& raw) const {
    if (n == 0) return raw;
    return T.normalize(raw, std::vector<J>(n - 1, J::LL));
  }
  Tensor raw(int n, const Tensor& nf) const { return n == 0 ? nf : T.raw_of_normal(nf); }

  Tensor iterated(int x, int k) const {
    Tensor cur = single(word_of({x}));
    for (int s = 1; s < k; ++s)
      cur = expand_slot(cur, s - 1, [&](int h) { return T.delta_l(h); });
    return cur;
  }

  Tensor coface(int n, int i, const Tensor& t) const {
    if (n == 0) {
      Tensor out;
      for (const auto& [w, c] : t) add_word(out, word_of({letter(w, 0)}), c);
      return out;
    }
    Tensor u = from_vec(one);
    if (i == 0) return tensor_product(u, t);
    if (i == n + 1) return tensor_product(t, u);
    return expand_slot(t, i - 1, [&](int h) { return T.delta_l(h); });
  }

  Tensor codegeneracy(int n, int i, const Tensor& t) const {
    Tensor out;
    for (const auto& [w, c] : t) {
      if (n == 1) {
        add_to(out, from_vec(T.eps_l(Vec::unit(letter(w, 0)))), c);
        continue;
      }
      int src = i < n - 1 ? i : n - 1, dst = i < n - 1 ? i + 1 : n - 2;
      Vec v = T.mul(T.base_element(T.eps_l(Vec::unit(letter(w, src)))), Vec::unit(letter(w, dst)));
      Word head = w.substr(0, std::min(src, dst)), tail = w.substr(std::max(src, dst) + 1);
      for (const auto& [k, ck] : v.entries()) add_word(out, head + to_letter(k) + tail, c * ck);
    }
    return out;
  }

  Tensor tau(int n, const Tensor& t) const {
    if (n == 0) return t;
    Tensor out;
    for (const auto& [w, c] : t) {
      Tensor rest = single(w.substr(1));
      rest = tensor_product(rest, from_vec(one));
      Vec s = T.antipode(letter(w, 0));
      for (const auto& [h, ch] : s.entries()) add_to(out, slotwise(T, iterated(h, n), rest), c * ch);
    }
    return out;
  }

  Tensor b(int n, const Tensor& nf) const {
    Tensor r = raw(n, nf), out;
    for (int i = 0; i <= n + 1; ++i) add_to(out, coface(n, i, r), i % 2 ? -1 : 1);
    return canon(n + 1, out);
  }
  Tensor lambda(int n, const Tensor& nf) const { return scaled(canon(n, tau(n, raw(n, nf))), n % 2 ? -1 : 1); }
  Tensor extra(int n, const Tensor& nf) const {  // σ_{n-1} τ_n : C^n -> C^{n-1}
    return canon(n - 1, codegeneracy(n, n - 1, tau(n, raw(n, nf))));
  }
  Tensor B(int n, const Tensor& nf) const {  // C^n -> C^{n-1}
    Tensor y = diff(nf, lambda(n, nf));
    Tensor z = extra(n, y), out, cur = z;
    for (int i = 0; i < n; ++i) {
      add_to(out, cur);
      cur = lambda(n - 1, cur);
    }
    return out;
  }

  Tensor alt(const Wedge& e, int n) const {
    Tensor out;
    for (const auto& [I, a] : e) {
      if (n == 0) {
        add_to(out, from_vec(a));
        continue;
      }
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      Scalar fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      do {
        std::vector<int> perm(n);
        for (int k = 0; k < n; ++k) perm[k] = I[p[k]];
        Scalar s = Scalar(perm_sign(p)) / fact;
        Tensor acc = from_vec(T.mul(T.base_element(a), T.generator(perm[0])));
        for (int k = 1; k < n; ++k) acc = tensor_product(acc, from_vec(T.generator(perm[k])));
        add_to(out, acc, s);
      } while (std::next_permutation(p.begin(), p.end()));
    }
    return canon(n, out);
  }

  Wedge boundary(const Wedge& e) const {
    Wedge out;
    const int r = T.data().rank();
    for (const auto& [I, a] : e) {
      const int n = static_cast<int>(I.size());
      for (int i = 0; i < n; ++i) {
        std::vector<Vec> l(r);
        l[I[i]] = a;
        std::vector<int> rest;
        for (int k = 0; k < n; ++k)
          if (k != i) rest.push_back(I[k]);
        add_wedge(out, rest, i % 2 ? -1 * T.eps_r_of(l) : T.eps_r_of(l));
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<Vec> xi(r), xj(r);
          xi[I[i]] = T.data().base.unit;
          xj[I[j]] = T.data().base.unit;
          std::vector<Vec> br = T.lie_bracket(xi, xj);
          Scalar sign = (i + j) % 2 ? -1 : 1;
          for (int l = 0; l < r; ++l) {
            std::vector<int> J2{l};
            for (int k = 0; k < n; ++k)
              if (k != i && k != j) J2.push_back(I[k]);
            add_wedge(out, J2, sign * T.mul_base(a, br[l]));
          }
        }
    }
    return out;
  }
};

}  // namespace

AxiomReport antisymmetrisation_check(const LieRinehartTruncation& T, int n_max) {
  if (T.N() < n_max + 2)
    throw TruncationTooSmall("antisymmetrisation check to degree " + std::to_string(n_max) + " needs N >= " +
                             std::to_string(n_max + 2));
  AxiomReport rep;
  rep.note("Flat", is_flat(T), "", "right connection has nonzero curvature");
  CochainOps ops{T, T.base_element(T.data().base.unit)};
  const int r = T.data().rank(), m = T.base_dim();
  for (int n = 0; n <= n_max && n <= r; ++n) {
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1U << r); ++mask)
      if (std::popcount(mask) == n) {
        std::vector<int> I;
        for (int i = 0; i < r; ++i)
          if (mask >> i & 1U) I.push_back(i);
        subsets.push_back(I);
      }
    for (const auto& I : subsets)
      for (int b = 0; b < m; ++b) {
        Wedge e{{I, Vec::unit(b)}};
        std::string w = T.data().base_labels[b];
        for (int i : I) w += " " + T.data().labels[i];
        w += " [n=" + std::to_string(n) + "]";
        Tensor a = ops.alt(e, n);
        note_eq_nf(rep, T, "b∘Alt=0", w, ops.b(n, a), {});
        if (n == 0) continue;
        Tensor rhs = ops.alt(ops.boundary(e), n - 1);
        note_eq_nf(rep, T, "B∘Alt=Alt∘∂", w, ops.B(n, a), rhs);
        note_eq_nf(rep, T, "σ_{n-1}τ_n∘Alt=(1/n)Alt∘∂", w, ops.extra(n, a), scaled(rhs, Scalar(1, n)));
      }
  }
  return rep;
}

}  // namespace hakit
