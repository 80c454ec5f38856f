#include "hakit/examples.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hakit {

AlgebraPresentation algebra_field_Q() {
  return AlgebraPresentation::from_entries(1, {{0, 0, 0, 1}}, Vec::unit(0));
}

AlgebraPresentation algebra_Q_power(int n) {
  std::vector<std::tuple<int, int, int, Scalar>> m;
  std::vector<Scalar> u(n, 1);
  for (int i = 0; i < n; ++i) m.emplace_back(i, i, i, 1);
  return AlgebraPresentation::from_entries(n, m, Vec::from_dense(u));
}

AlgebraPresentation algebra_dual_numbers() {
  return AlgebraPresentation::from_entries(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}},
                                           Vec::unit(0));
}

AlgebraPresentation algebra_matrices(int n) {
  std::vector<std::tuple<int, int, int, Scalar>> m;
  std::vector<Scalar> u(n * n);
  for (int i = 0; i < n; ++i) {
    u[i * n + i] = 1;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m.emplace_back(i * n + j, j * n + k, i * n + k, 1);
  }
  return AlgebraPresentation::from_entries(n * n, m, Vec::from_dense(u));
}

void check_associative_unital(const AlgebraPresentation& A, const std::string& what) {
  for (int i = 0; i < A.dim; ++i) {
    if (!(A.mul(A.unit, Vec::unit(i)) == Vec::unit(i)) || !(A.mul(Vec::unit(i), A.unit) == Vec::unit(i)))
      throw InputError(what + ": unit fails on basis element " + std::to_string(i));
    for (int j = 0; j < A.dim; ++j)
      for (int k = 0; k < A.dim; ++k)
        if (!(A.mul(A.mul(i, j), Vec::unit(k)) == A.mul(Vec::unit(i), A.mul(j, k))))
          throw InputError(what + ": not associative on (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) + ")");
  }
}

// ---- groupoids ----

void FiniteGroupoid::validate() const {
  const int n = arrows();
  auto fail = [](const std::string& m) { throw InputError("groupoid: " + m); };
  if (static_cast<int>(tgt.size()) != n || static_cast<int>(inv.size()) != n ||
      static_cast<int>(comp.size()) != n * n || static_cast<int>(unit.size()) != objects)
    fail("table sizes inconsistent with arrow/object counts");
  for (int g = 0; g < n; ++g)
    if (src[g] < 0 || src[g] >= objects || tgt[g] < 0 || tgt[g] >= objects) fail("arrow endpoint outside objects");
  for (int x = 0; x < objects; ++x) {
    int u = unit[x];
    if (u < 0 || u >= n || src[u] != x || tgt[u] != x) fail("unit of object " + std::to_string(x) + " is not a loop at it");
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int gh = compose(g, h);
      bool composable = src[g] == tgt[h];
      if (composable != (gh >= 0))
        fail("composition defined on (" + std::to_string(g) + "," + std::to_string(h) +
             ") iff source of first equals target of second");
      if (gh >= n) fail("composition result outside arrows");
      if (gh >= 0 && (tgt[gh] != tgt[g] || src[gh] != src[h])) fail("composite has wrong endpoints");
    }
  for (int g = 0; g < n; ++g) {
    if (compose(unit[tgt[g]], g) != g || compose(g, unit[src[g]]) != g) fail("units are not identities");
    int i = inv[g];
    if (i < 0 || i >= n || compose(g, i) != unit[tgt[g]] || compose(i, g) != unit[src[g]])
      fail("inverse table wrong at arrow " + std::to_string(g));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = compose(a, b);
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        int bc = compose(b, c);
        if (bc < 0) continue;
        if (compose(ab, c) != compose(a, bc)) fail("composition not associative");
      }
    }
}

FiniteGroupoid group_as_groupoid(int order, const std::vector<int>& mult) {
  FiniteGroupoid G;
  G.objects = 1;
  G.src.assign(order, 0);
  G.tgt.assign(order, 0);
  G.comp = mult;
  G.unit = {0};
  G.inv.assign(order, -1);
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      if (mult[g * order + h] == 0) G.inv[g] = h;
  for (int g = 0; g < order; ++g) G.labels.push_back("g" + std::to_string(g));
  G.validate();
  return G;
}

FiniteGroupoid cyclic_group(int n) {
  std::vector<int> m(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m[a * n + b] = (a + b) % n;
  return group_as_groupoid(n, m);
}

FiniteGroupoid klein_four() {
  std::vector<int> m(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m[a * 4 + b] = a ^ b;
  return group_as_groupoid(4, m);
}

FiniteGroupoid pair_groupoid(int p) {
  FiniteGroupoid G;
  G.objects = p;
  const int n = p * p;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {  // arrow (i, j): j -> i
      G.tgt.push_back(i);
      G.src.push_back(j);
      G.inv.push_back(j * p + i);
      G.labels.push_back("(" + std::to_string(i) + "<-" + std::to_string(j) + ")");
    }
  G.comp.assign(n * n, -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (G.src[g] == G.tgt[h]) G.comp[g * n + h] = G.tgt[g] * p + G.src[h];
  for (int i = 0; i < p; ++i) G.unit.push_back(i * p + i);
  G.validate();
  return G;
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  FiniteGroupoid G;
  const int na = a.arrows(), nb = b.arrows(), n = na + nb;
  G.objects = a.objects + b.objects;
  G.src = a.src;
  G.tgt = a.tgt;
  for (int g = 0; g < nb; ++g) {
    G.src.push_back(b.src[g] + a.objects);
    G.tgt.push_back(b.tgt[g] + a.objects);
  }
  G.comp.assign(n * n, -1);
  for (int g = 0; g < na; ++g)
    for (int h = 0; h < na; ++h) G.comp[g * n + h] = a.compose(g, h);
  for (int g = 0; g < nb; ++g)
    for (int h = 0; h < nb; ++h) {
      int c = b.compose(g, h);
      G.comp[(na + g) * n + na + h] = c < 0 ? -1 : na + c;
    }
  G.inv = a.inv;
  for (int g : b.inv) G.inv.push_back(na + g);
  G.unit = a.unit;
  for (int u : b.unit) G.unit.push_back(na + u);
  G.labels = a.labels;
  for (const auto& l : b.labels) G.labels.push_back(l + "'");
  G.validate();
  return G;
}

FiniteGroupoid parse_groupoid(const std::string& text) {
  using json = nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("groupoid file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("groupoid file: expected an object");
  static const std::set<std::string> keys = {"objects", "arrows", "comp", "inv", "unit"};
  for (const auto& [k, v] : j.items())
    if (!keys.count(k)) throw ParseError("groupoid file: unknown field " + k);
  for (const auto& k : keys)
    if (!j.contains(k)) throw ParseError("groupoid file: missing field " + k);
  FiniteGroupoid G;
  try {
    G.objects = j["objects"].get<int>();
    for (const auto& a : j["arrows"]) {
      if (!a.is_array() || a.size() != 2) throw ParseError("groupoid file: arrows entries are [src, tgt]");
      G.src.push_back(a[0].get<int>());
      G.tgt.push_back(a[1].get<int>());
    }
    const int n = G.arrows();
    G.comp.assign(n * n, -1);
    for (const auto& c : j["comp"]) {
      if (!c.is_array() || c.size() != 3) throw ParseError("groupoid file: comp entries are [g, h, gh]");
      int g = c[0].get<int>(), h = c[1].get<int>(), gh = c[2].get<int>();
      if (g < 0 || h < 0 || g >= n || h >= n) throw ParseError("groupoid file: comp index outside arrows");
      G.comp[g * n + h] = gh;
    }
    G.inv = j["inv"].get<std::vector<int>>();
    G.unit = j["unit"].get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("groupoid file: ") + e.what());
  }
  for (int g = 0; g < G.arrows(); ++g) G.labels.push_back("g" + std::to_string(g));
  try {
    G.validate();
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
  return G;
}

FiniteGroupoid load_groupoid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_groupoid(ss.str());
}

// ---- Hopf algebroid generators ----

HopfAlgebroidPresentation enveloping(const AlgebraPresentation& A, const std::string& name) {
  check_associative_unital(A, "enveloping input");
  const int m = A.dim, d = m * m;
  HopfAlgebroidPresentation P;
  P.name = name;
  P.A_l = A;
  P.A_r = A.opposite();
  P.H = tensor_algebra(A, A.opposite());
  auto pair_vec = [&](const Vec& left, const Vec& right) {
    std::map<int, Scalar> acc;
    for (const auto& [i, a] : left.entries())
      for (const auto& [j, b] : right.entries()) acc[i * m + j] += a * b;
    return Vec::from_map(acc);
  };
  P.s_l = LinearMap(d, m);
  P.t_l = LinearMap(d, m);
  for (int a = 0; a < m; ++a) {
    P.s_l.set_col(a, pair_vec(Vec::unit(a), A.unit));
    P.t_l.set_col(a, pair_vec(A.unit, Vec::unit(a)));
  }
  P.s_r = P.t_l;  // s_r(b) = 1 ⊗ b
  P.t_r = P.s_l;  // t_r(a) = a ⊗ 1
  P.eps_l = LinearMap(m, d);
  P.eps_r = LinearMap(m, d);
  P.Delta_l = LinearMap(d * d, d);
  P.S = LinearMap(d, d);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int h = a * m + b;
      P.eps_l.set_col(h, A.mul(a, b));
      P.eps_r.set_col(h, A.mul(b, a));
      P.S.set_col(h, Vec::unit(b * m + a));
      Vec left = pair_vec(Vec::unit(a), A.unit), right = pair_vec(A.unit, Vec::unit(b));
      std::map<int, Scalar> acc;
      for (const auto& [x, u] : left.entries())
        for (const auto& [y, v] : right.entries()) acc[x * d + y] += u * v;
      P.Delta_l.set_col(h, Vec::from_map(acc));
    }
  P.Delta_r = P.Delta_l;
  P.S_inv = P.S;
  P.validate_shapes();
  return P;
}

HopfAlgebroidPresentation groupoid_algebra(const FiniteGroupoid& G, const std::string& name) {
  G.validate();
  const int n = G.arrows(), o = G.objects;
  if (n > 255) throw InputError("groupoid too large for tensor words");
  HopfAlgebroidPresentation P;
  P.name = name;
  std::vector<std::tuple<int, int, int, Scalar>> mul, base;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (int gh = G.compose(g, h); gh >= 0) mul.emplace_back(g, h, gh, 1);
  std::map<int, Scalar> u;
  for (int x = 0; x < o; ++x) {
    u[G.unit[x]] = 1;
    base.emplace_back(x, x, x, 1);
  }
  P.H = AlgebraPresentation::from_entries(n, mul, Vec::from_map(u));
  P.A_l = AlgebraPresentation::from_entries(o, base, Vec::from_dense(std::vector<Scalar>(o, 1)));
  P.A_r = P.A_l;
  P.s_l = LinearMap(n, o);
  for (int x = 0; x < o; ++x) P.s_l.set_col(x, Vec::unit(G.unit[x]));
  P.t_l = P.s_r = P.t_r = P.s_l;
  P.eps_l = LinearMap(o, n);
  P.eps_r = LinearMap(o, n);
  P.Delta_l = LinearMap(n * n, n);
  P.S = LinearMap(n, n);
  for (int g = 0; g < n; ++g) {
    P.eps_l.set_col(g, Vec::unit(G.tgt[g]));
    P.eps_r.set_col(g, Vec::unit(G.src[g]));
    P.Delta_l.set_col(g, Vec::unit(g * n + g));
    P.S.set_col(g, Vec::unit(G.inv[g]));
  }
  P.Delta_r = P.Delta_l;
  P.S_inv = P.S;
  P.validate_shapes();
  return P;
}

HopfAlgebroidPresentation sweedler_h4() {
  // basis: 0 = 1, 1 = g, 2 = x, 3 = gx
  HopfAlgebroidPresentation P;
  P.name = "sweedler-h4";
  P.H = AlgebraPresentation::from_entries(
      4,
      {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {0, 3, 3, 1},
       {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 2, 3, 1}, {1, 3, 2, 1},
       {2, 0, 2, 1}, {2, 1, 3, -1},
       {3, 0, 3, 1}, {3, 1, 2, -1}},
      Vec::unit(0));
  P.A_l = P.A_r = algebra_field_Q();
  P.s_l = LinearMap::from_triplets(4, 1, {{0, 0, 1}});
  P.t_l = P.s_r = P.t_r = P.s_l;
  P.eps_l = LinearMap::from_triplets(1, 4, {{0, 0, 1}, {0, 1, 1}});
  P.eps_r = P.eps_l;
  auto w = [](int a, int b) { return a * 4 + b; };
  P.Delta_l = LinearMap::from_triplets(
      16, 4,
      {{w(0, 0), 0, 1}, {w(1, 1), 1, 1}, {w(2, 0), 2, 1}, {w(1, 2), 2, 1},
       {w(3, 1), 3, 1}, {w(0, 3), 3, 1}});
  P.Delta_r = P.Delta_l;
  P.S = LinearMap::from_triplets(4, 4, {{0, 0, 1}, {1, 1, 1}, {3, 2, -1}, {2, 3, 1}});
  P.S_inv = LinearMap::from_triplets(4, 4, {{0, 0, 1}, {1, 1, 1}, {3, 2, 1}, {2, 3, -1}});
  P.validate_shapes();
  return P;
}

}  // namespace hakit
