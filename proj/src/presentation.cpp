#include "hakit/presentation.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "json_fields.hpp"

namespace hakit {

using json = nlohmann::json;

AlgebraPresentation AlgebraPresentation::from_entries(
    int dim, const std::vector<std::tuple<int, int, int, Scalar>>& mul, Vec unit) {
  AlgebraPresentation A;
  A.dim = dim;
  std::vector<std::map<int, Scalar>> acc(static_cast<std::size_t>(dim) * dim);
  for (const auto& [i, j, k, c] : mul) {
    if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
      throw InputError("structure constant index outside dimension " + std::to_string(dim));
    acc[i * dim + j][k] += c;
  }
  for (const auto& m : acc) A.prod.push_back(Vec::from_map(m));
  if (unit.max_index() >= dim) throw InputError("unit vector index outside dimension");
  A.unit = std::move(unit);
  return A;
}

Vec AlgebraPresentation::mul(const Vec& x, const Vec& y) const {
  std::map<int, Scalar> acc;
  for (const auto& [i, a] : x.entries())
    for (const auto& [j, b] : y.entries())
      for (const auto& [k, c] : prod[i * dim + j].entries()) acc[k] += a * b * c;
  return Vec::from_map(acc);
}

LinearMap AlgebraPresentation::left_mult(const Vec& x) const {
  LinearMap m(dim, dim);
  for (int j = 0; j < dim; ++j) m.set_col(j, mul(x, Vec::unit(j)));
  return m;
}

LinearMap AlgebraPresentation::right_mult(const Vec& x) const {
  LinearMap m(dim, dim);
  for (int j = 0; j < dim; ++j) m.set_col(j, mul(Vec::unit(j), x));
  return m;
}

AlgebraPresentation AlgebraPresentation::opposite() const {
  AlgebraPresentation B = *this;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) B.prod[i * dim + j] = prod[j * dim + i];
  return B;
}

bool AlgebraPresentation::is_commutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (!(prod[i * dim + j] == prod[j * dim + i])) return false;
  return true;
}

AlgebraPresentation tensor_algebra(const AlgebraPresentation& A, const AlgebraPresentation& B) {
  AlgebraPresentation T;
  T.dim = A.dim * B.dim;
  T.prod.resize(static_cast<std::size_t>(T.dim) * T.dim);
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < B.dim; ++b)
      for (int c = 0; c < A.dim; ++c)
        for (int e = 0; e < B.dim; ++e) {
          std::map<int, Scalar> m;
          for (const auto& [x, u] : A.mul(a, c).entries())
            for (const auto& [y, v] : B.mul(b, e).entries()) m[x * B.dim + y] += u * v;
          T.prod[(a * B.dim + b) * T.dim + c * B.dim + e] = Vec::from_map(m);
        }
  std::map<int, Scalar> u;
  for (const auto& [x, p] : A.unit.entries())
    for (const auto& [y, q] : B.unit.entries()) u[x * B.dim + y] += p * q;
  T.unit = Vec::from_map(u);
  return T;
}

void HopfAlgebroidPresentation::validate_shapes() const {
  const int d = H.dim, dl = A_l.dim, dr = A_r.dim;
  auto need = [](const LinearMap& m, int r, int c, const char* what) {
    if (m.rows() != r || m.cols() != c)
      throw ParseError(std::string("dimension mismatch in ") + what + ": expected " +
                       std::to_string(r) + "x" + std::to_string(c) + ", got " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  };
  need(s_l, d, dl, "s_l");
  need(t_l, d, dl, "t_l");
  need(s_r, d, dr, "s_r");
  need(t_r, d, dr, "t_r");
  need(eps_l, dl, d, "eps_l");
  need(eps_r, dr, d, "eps_r");
  need(S, d, d, "S");
  need(Delta_l, d * d, d, "Delta_l");
  need(Delta_r, d * d, d, "Delta_r");
  if (S_inv) need(*S_inv, d, d, "S_inv");
  if (d > 255 || dl > 255 || dr > 255) throw ParseError("dimensions above 255 are not supported");
}

std::optional<LinearMap> invert(const LinearMap& f) {
  if (f.rows() != f.cols()) return std::nullopt;
  const int n = f.rows();
  auto a = f.dense();
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Scalar s = Scalar(1) / a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Scalar m = a[i][c];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= m * a[c][j];
        inv[i][j] -= m * inv[c][j];
      }
    }
  }
  return LinearMap::from_dense(inv);
}

LinearMap HopfAlgebroidPresentation::antipode_inverse() const {
  if (S_inv) return *S_inv;
  auto inv = invert(S);
  if (!inv) throw MissingInverse("antipode is not invertible and no S_inv was supplied");
  return *inv;
}

bool HopfAlgebroidPresentation::has_invertible_antipode() const {
  return S_inv.has_value() || invert(S).has_value();
}

// ---- parsing ----

using namespace jsonio;


HopfAlgebroidPresentation parse_presentation(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
  static const std::set<std::string> keys = {"name", "A_l", "A_r", "H", "s_l", "t_l", "s_r", "t_r",
                                             "Delta_l", "Delta_r", "eps_l", "eps_r", "S", "S_inv"};
  only_keys(j, keys, "");
  for (const auto& k : keys)
    if (k != "S_inv" && k != "name" && !j.contains(k)) throw ParseError(at_field(k, "missing"));
  HopfAlgebroidPresentation P;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError(at_field("name", "expected a string"));
    P.name = j["name"].get<std::string>();
  }
  P.A_l = algebra_field(j["A_l"], "A_l");
  P.A_r = algebra_field(j["A_r"], "A_r");
  P.H = algebra_field(j["H"], "H");
  const int d = P.H.dim, dl = P.A_l.dim, dr = P.A_r.dim;
  P.s_l = matrix_field(j["s_l"], d, dl, "s_l");
  P.t_l = matrix_field(j["t_l"], d, dl, "t_l");
  P.s_r = matrix_field(j["s_r"], d, dr, "s_r");
  P.t_r = matrix_field(j["t_r"], d, dr, "t_r");
  P.eps_l = matrix_field(j["eps_l"], dl, d, "eps_l");
  P.eps_r = matrix_field(j["eps_r"], dr, d, "eps_r");
  P.S = matrix_field(j["S"], d, d, "S");
  if (j.contains("S_inv")) P.S_inv = matrix_field(j["S_inv"], d, d, "S_inv");
  P.Delta_l = coproduct_field(j["Delta_l"], d, "Delta_l");
  P.Delta_r = coproduct_field(j["Delta_r"], d, "Delta_r");
  P.validate_shapes();
  return P;
}

HopfAlgebroidPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

namespace {

std::string q(const Scalar& c) { return "\"" + format_scalar(c) + "\""; }

void emit_list(std::ostringstream& os, const std::vector<std::string>& rows, const std::string& indent) {
  if (rows.empty()) {
    os << "[]";
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    os << indent << "  " << rows[i] << (i + 1 < rows.size() ? ",\n" : "\n");
  os << indent << "]";
}

void emit_algebra(std::ostringstream& os, const AlgebraPresentation& A) {
  os << "{\n    \"dim\": " << A.dim << ",\n    \"unit\": ";
  std::vector<std::string> u;
  for (const auto& [i, c] : A.unit.entries()) u.push_back("[" + std::to_string(i) + ", " + q(c) + "]");
  emit_list(os, u, "    ");
  os << ",\n    \"mul\": ";
  std::vector<std::string> m;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      for (const auto& [k, c] : A.mul(i, j).entries())
        m.push_back("[" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ", " + q(c) + "]");
  emit_list(os, m, "    ");
  os << "\n  }";
}

void emit_matrix(std::ostringstream& os, const LinearMap& f) {
  std::vector<std::string> rows;
  for (const auto& [r, c, x] : f.triplets())
    rows.push_back("[" + std::to_string(r) + ", " + std::to_string(c) + ", " + q(x) + "]");
  emit_list(os, rows, "  ");
}

void emit_coproduct(std::ostringstream& os, const LinearMap& D, int d) {
  std::vector<std::string> rows;
  for (int h = 0; h < d; ++h)
    for (const auto& [idx, x] : D.col(h).entries())
      rows.push_back("[" + std::to_string(h) + ", " + std::to_string(idx / d) + ", " +
                     std::to_string(idx % d) + ", " + q(x) + "]");
  emit_list(os, rows, "  ");
}

}  // namespace

std::string emit_presentation(const HopfAlgebroidPresentation& P) {
  std::ostringstream os;
  os << "{\n  \"name\": " << json(P.name).dump() << ",\n";
  os << "  \"A_l\": ";
  emit_algebra(os, P.A_l);
  os << ",\n  \"A_r\": ";
  emit_algebra(os, P.A_r);
  os << ",\n  \"H\": ";
  emit_algebra(os, P.H);
  const std::pair<const char*, const LinearMap*> maps[] = {
      {"s_l", &P.s_l}, {"t_l", &P.t_l}, {"s_r", &P.s_r}, {"t_r", &P.t_r},
      {"eps_l", &P.eps_l}, {"eps_r", &P.eps_r}, {"S", &P.S}};
  for (const auto& [k, m] : maps) {
    os << ",\n  \"" << k << "\": ";
    emit_matrix(os, *m);
  }
  if (P.S_inv) {
    os << ",\n  \"S_inv\": ";
    emit_matrix(os, *P.S_inv);
  }
  os << ",\n  \"Delta_l\": ";
  emit_coproduct(os, P.Delta_l, P.H.dim);
  os << ",\n  \"Delta_r\": ";
  emit_coproduct(os, P.Delta_r, P.H.dim);
  os << "\n}\n";
  return os.str();
}

void save_presentation(const HopfAlgebroidPresentation& P, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << emit_presentation(P);
}

// ---- HopfOps ----

HopfOps::HopfOps(const HopfAlgebroidPresentation& p)
    : P(p), d(p.H.dim), dl(p.A_l.dim), dr(p.A_r.dim) {
  if (p.has_invertible_antipode()) {
    Sinv = p.antipode_inverse();
    Sinv2 = Sinv * Sinv;
  }
  S2 = p.S * p.S;
}

Tensor HopfOps::coproduct(const LinearMap& Delta, int h) const {
  Tensor t;
  for (const auto& [idx, c] : Delta.col(h).entries())
    t.emplace(word_of({idx / d, idx % d}), c);
  return t;
}

Tensor HopfOps::iterated(const LinearMap& Delta, const Vec& h, int k) const {
  Tensor t = from_vec(h);
  for (int i = 1; i < k; ++i) t = expand_slot(t, i - 1, Delta);
  return t;
}

Tensor HopfOps::map_slot(const Tensor& t, int slot, const LinearMap& f) const {
  Tensor out;
  for (const auto& [w, c] : t)
    for (const auto& [z, e] : f.col(letter(w, slot)).entries()) {
      Word u = w;
      u[slot] = to_letter(z);
      add_word(out, u, c * e);
    }
  return out;
}

Tensor HopfOps::expand_slot(const Tensor& t, int slot, const LinearMap& Delta) const {
  Tensor out;
  for (const auto& [w, c] : t)
    for (const auto& [idx, e] : Delta.col(letter(w, slot)).entries()) {
      Word u = w.substr(0, slot);
      u += to_letter(idx / d);
      u += to_letter(idx % d);
      u += w.substr(slot + 1);
      add_word(out, u, c * e);
    }
  return out;
}

Tensor HopfOps::merge_slots(const Tensor& t, int slot) const {
  Tensor out;
  for (const auto& [w, c] : t)
    for (const auto& [z, e] : mul(letter(w, slot), letter(w, slot + 1)).entries()) {
      Word u = w.substr(0, slot);
      u += to_letter(z);
      u += w.substr(slot + 2);
      add_word(out, u, c * e);
    }
  return out;
}

Tensor HopfOps::insert_slot(const Tensor& t, int pos, const Vec& x) const {
  Tensor out;
  for (const auto& [w, c] : t)
    for (const auto& [z, e] : x.entries()) {
      Word u = w;
      u.insert(u.begin() + pos, to_letter(z));
      add_word(out, u, c * e);
    }
  return out;
}

Tensor HopfOps::drop_slot_into(const Tensor& t, int slot,
                               const std::function<Tensor(int, const Word&)>& f) const {
  Tensor out;
  for (const auto& [w, c] : t) {
    Word rest = w.substr(0, slot) + w.substr(slot + 1);
    add_to(out, f(letter(w, slot), rest), c);
  }
  return out;
}

namespace {

Tensor slotwise_impl(const HopfOps& ops, const Tensor& left, const Tensor& right) {
  Tensor out;
  for (const auto& [u, a] : left)
    for (const auto& [w, b] : right) {
      if (u.size() != w.size()) throw InputError("slotwise product of tensors with different slot counts");
      Tensor acc = single(Word(), a * b);
      for (std::size_t i = 0; i < u.size(); ++i) {
        const Vec& p = ops.mul(letter(u, i), letter(w, i));
        Tensor next;
        for (const auto& [pre, c] : acc)
          for (const auto& [z, e] : p.entries()) add_word(next, pre + to_letter(z), c * e);
        acc = std::move(next);
        if (acc.empty()) break;
      }
      add_to(out, acc);
    }
  return out;
}

}  // namespace

Tensor HopfOps::slotwise(const Tensor& f, const Tensor& t) const { return slotwise_impl(*this, f, t); }
Tensor HopfOps::slotwise_right(const Tensor& t, const Tensor& f) const { return slotwise_impl(*this, t, f); }

Junction HopfOps::junction_left() const {
  Junction J;
  J.base_dim = dl;
  for (int a = 0; a < dl; ++a) {
    J.right_on_prev.push_back(P.H.left_mult(P.t_l.col(a)));
    J.left_on_next.push_back(P.H.left_mult(P.s_l.col(a)));
  }
  return J;
}

Junction HopfOps::junction_right_coprod() const {
  Junction J;
  J.base_dim = dr;
  for (int a = 0; a < dr; ++a) {
    J.right_on_prev.push_back(P.H.right_mult(P.s_r.col(a)));
    J.left_on_next.push_back(P.H.right_mult(P.t_r.col(a)));
  }
  return J;
}

Junction HopfOps::junction_right_comod() const {
  Junction J;
  J.base_dim = dr;
  for (int a = 0; a < dr; ++a) {
    J.right_on_prev.push_back(P.H.right_mult(P.s_r.col(a)));
    J.left_on_next.push_back(P.H.left_mult(P.s_r.col(a)));
  }
  return J;
}

}  // namespace hakit

namespace hakit {

HopfAlgebroidPresentation permute_total_basis(const HopfAlgebroidPresentation& P, const std::vector<int>& perm) {
  const int d = P.H.dim;
  if (static_cast<int>(perm.size()) != d) throw InputError("basis permutation has wrong length");
  std::vector<int> inv(d, -1);
  for (int i = 0; i < d; ++i) {
    if (perm[i] < 0 || perm[i] >= d || inv[perm[i]] >= 0) throw InputError("not a permutation");
    inv[perm[i]] = i;
  }
  auto mv = [&](const Vec& v) {
    std::map<int, Scalar> m;
    for (const auto& [i, c] : v.entries()) m[perm[i]] = c;
    return Vec::from_map(m);
  };
  auto mv2 = [&](const Vec& v) {
    std::map<int, Scalar> m;
    for (const auto& [i, c] : v.entries()) m[perm[i / d] * d + perm[i % d]] = c;
    return Vec::from_map(m);
  };
  auto into = [&](const LinearMap& f) {  // maps landing in H
    std::vector<Vec> cols;
    for (int j = 0; j < f.cols(); ++j) cols.push_back(mv(f.col(j)));
    return LinearMap::from_columns(d, std::move(cols));
  };
  auto out_of = [&](const LinearMap& f) {  // maps leaving H
    std::vector<Vec> cols(d);
    for (int j = 0; j < d; ++j) cols[perm[j]] = f.col(j);
    return LinearMap::from_columns(f.rows(), std::move(cols));
  };

  HopfAlgebroidPresentation Q = P;
  Q.H.prod.assign(static_cast<std::size_t>(d) * d, Vec());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) Q.H.prod[perm[i] * d + perm[j]] = mv(P.H.mul(i, j));
  Q.H.unit = mv(P.H.unit);
  Q.s_l = into(P.s_l);
  Q.t_l = into(P.t_l);
  Q.s_r = into(P.s_r);
  Q.t_r = into(P.t_r);
  Q.eps_l = out_of(P.eps_l);
  Q.eps_r = out_of(P.eps_r);
  Q.S = out_of(into(P.S));
  if (P.S_inv) Q.S_inv = out_of(into(*P.S_inv));
  for (LinearMap* D : {&Q.Delta_l, &Q.Delta_r}) {
    const LinearMap& src = D == &Q.Delta_l ? P.Delta_l : P.Delta_r;
    std::vector<Vec> cols(d);
    for (int j = 0; j < d; ++j) cols[perm[j]] = mv2(src.col(j));
    *D = LinearMap::from_columns(d * d, std::move(cols));
  }
  return Q;
}

}  // namespace hakit
