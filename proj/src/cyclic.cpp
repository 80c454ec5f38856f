#include "hakit/cyclic.hpp"

#include <sstream>

namespace hakit {

namespace {

Vec e(int i) { return Vec::unit(i); }

Tensor splice(const Word& w, int pos, int count, const Tensor& mid) {
  Tensor out;
  Word pre = w.substr(0, pos), post = w.substr(pos + count);
  for (const auto& [m, c] : mid) add_word(out, pre + m + post, c);
  return out;
}

Tensor splice_vec(const Word& w, int pos, int count, const Vec& v) { return splice(w, pos, count, from_vec(v)); }

struct Check {
  AxiomReport& rep;

  void eq(const std::string& name, const LinearMap& lhs, const LinearMap& rhs, const TensorSpace* src = nullptr) {
    AxiomResult r;
    r.name = name;
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
      r.pass = false;
      r.detail = "shape " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
                 std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
    } else if (int j = lhs.first_difference(rhs); j >= 0) {
      r.pass = false;
      r.witness = src ? tensor_str(single(src->basis_word(j))) : "basis " + std::to_string(j);
      r.detail = "lhs - rhs = " + (lhs.col(j) - rhs.col(j)).str();
    }
    merge(std::move(r));
  }
  void zero(const std::string& name, const LinearMap& f, const TensorSpace* src = nullptr) {
    eq(name, f, LinearMap(f.rows(), f.cols()), src);
  }
  void truth(const std::string& name, bool ok, const std::string& detail = "") {
    AxiomResult r;
    r.name = name;
    r.pass = ok;
    if (!ok) r.detail = detail;
    merge(std::move(r));
  }
  // Families (same name) keep the first failure.
  void merge(AxiomResult r) {
    for (auto& x : rep.results)
      if (x.name == r.name) {
        if (x.pass && !r.pass) x = std::move(r);
        return;
      }
    rep.results.push_back(std::move(r));
  }
};

std::string deg(const std::string& family, int n) { return family + "/" + std::to_string(n); }

struct Ctx {
  const HopfAlgebroidPresentation& P;
  HopfOps ops;
  int d, dl, dr;
  Vec one;

  explicit Ctx(const HopfAlgebroidPresentation& p) : P(p), ops(p), d(p.H.dim), dl(p.A_l.dim), dr(p.A_r.dim), one(p.H.unit) {}

  Vec mul(const Vec& x, const Vec& y) const { return P.H.mul(x, y); }
  Vec mul(const Vec& x, int h) const { return P.H.mul(x, e(h)); }
  Vec mul(int h, const Vec& x) const { return P.H.mul(e(h), x); }

  const LinearMap& Sinv() const {
    if (!P.has_invertible_antipode()) throw MissingInverse("antipode is not invertible");
    return ops.Sinv;
  }

  // h·T on an n-slot tensor, n >= 1, through the iterated left coproduct.
  Tensor act(const Vec& h, const Tensor& T) const {
    if (T.empty()) return {};
    int k = static_cast<int>(T.begin()->first.size());
    return ops.slotwise(ops.iterated(P.Delta_l, h, k), T);
  }
};

// ---- operators on C^n ----

Tensor cochain_coface(const Ctx& c, int n, int i, const Word& w) {
  if (n == 0) return from_vec((i == 0 ? c.P.t_l : c.P.s_l).col(letter(w, 0)));
  if (i == 0) return c.ops.insert_slot(single(w), 0, c.one);
  if (i == n + 1) return c.ops.insert_slot(single(w), n, c.one);
  return c.ops.expand_slot(single(w), i - 1, c.P.Delta_l);
}

Tensor cochain_codegeneracy(const Ctx& c, int n, int i, const Word& w) {
  if (n == 1) return from_vec(c.P.eps_l.col(letter(w, 0)));
  if (i < n - 1) {
    Vec a = c.P.s_l.apply(c.P.eps_l.col(letter(w, i)));
    return splice_vec(w, i, 2, c.mul(a, letter(w, i + 1)));
  }
  Vec a = c.P.t_l.apply(c.P.eps_l.col(letter(w, n - 1)));
  return splice_vec(w, n - 2, 2, c.mul(a, letter(w, n - 2)));
}

Tensor cochain_tau(const Ctx& c, int n, const Word& w) {
  Tensor T = c.ops.insert_slot(single(w.substr(1)), n - 1, c.one);
  return c.act(c.P.S.col(letter(w, 0)), T);
}

Tensor cochain_tau_inv(const Ctx& c, int n, const Word& w) {
  Tensor T = c.ops.insert_slot(single(w.substr(0, n - 1)), 0, c.one);
  return c.act(c.Sinv().col(letter(w, n - 1)), T);
}

// ---- operators on C_n ----

Tensor chain_face(const Ctx& c, int n, int i, const Word& w) {
  if (n == 1) {
    const LinearMap& f = c.P.eps_r;
    Vec h = i == 0 ? e(letter(w, 0)) : c.Sinv().col(letter(w, 0));
    return from_vec(f.apply(h));
  }
  if (i == 0) {
    Vec a = c.P.s_r.apply(c.P.eps_r.col(letter(w, 0)));
    return splice_vec(w, 0, 2, c.mul(a, letter(w, 1)));
  }
  if (i < n) return c.ops.merge_slots(single(w), i - 1);
  Vec a = c.P.s_r.apply(c.P.eps_r.apply(c.Sinv().col(letter(w, n - 1))));
  return splice_vec(w, n - 2, 2, c.mul(letter(w, n - 2), a));
}

Tensor chain_degeneracy(const Ctx& c, int n, int i, const Word& w) {
  if (n == 0) return from_vec(c.P.s_r.col(letter(w, 0)));
  return c.ops.insert_slot(single(w), i, c.one);
}

Tensor chain_t(const Ctx& c, int n, const Word& w) {
  // first legs of h^1..h^{n-1} under Δ_l, product of second legs, then h^n
  std::map<Word, Vec> acc{{Word(), c.one}};
  for (int k = 0; k < n - 1; ++k) {
    std::map<Word, Vec> next;
    for (const auto& [pre, v] : acc)
      for (const auto& [idx, x] : c.P.Delta_l.col(letter(w, k)).entries()) {
        Vec p = x * c.mul(v, idx % c.d);
        if (!p.empty()) next[pre + to_letter(idx / c.d)] += p;
      }
    acc = std::move(next);
  }
  Tensor out;
  for (const auto& [pre, v] : acc) {
    Vec head = c.Sinv().apply(c.mul(v, letter(w, n - 1)));
    for (const auto& [z, x] : head.entries()) add_word(out, to_letter(z) + pre, x);
  }
  return out;
}

Tensor chain_t_inv(const Ctx& c, int n, const Word& w) {
  std::map<Word, Vec> acc{{Word(), e(letter(w, 0))}};
  for (int k = 1; k < n; ++k) {
    std::map<Word, Vec> next;
    for (const auto& [pre, v] : acc)
      for (const auto& [idx, x] : c.P.Delta_r.col(letter(w, k)).entries()) {
        Vec p = x * c.mul(v, idx % c.d);
        if (!p.empty()) next[pre + to_letter(idx / c.d)] += p;
      }
    acc = std::move(next);
  }
  Tensor out;
  for (const auto& [pre, v] : acc) {
    Vec tail = c.P.S.apply(v);
    for (const auto& [z, x] : tail.entries()) add_word(out, pre + to_letter(z), x);
  }
  return out;
}

LinearMap identity_of(const TensorSpace& s) { return LinearMap::identity(s.dim()); }

}  // namespace

// ---- spaces ----

TensorSpace cochain_space(const HopfAlgebroidPresentation& P, int n) {
  if (n < 0) throw InputError("negative degree");
  if (n == 0) return TensorSpace::free_slots({P.A_l.dim});
  HopfOps ops(P);
  return TensorSpace(std::vector<int>(n, P.H.dim), std::vector<Junction>(n - 1, ops.junction_left()));
}

TensorSpace chain_space(const HopfAlgebroidPresentation& P, int n) {
  if (n < 0) throw InputError("negative degree");
  if (n == 0) return TensorSpace::free_slots({P.A_r.dim});
  HopfOps ops(P);
  return TensorSpace(std::vector<int>(n, P.H.dim), std::vector<Junction>(n - 1, ops.junction_right_comod()));
}

// ---- C^• ----

CocyclicModule cocyclic_module(const HopfAlgebroidPresentation& P, int top) {
  Ctx c(P);
  CocyclicModule M;
  M.label = "C^*";
  for (int n = 0; n <= top; ++n) M.space.push_back(cochain_space(P, n));
  M.delta.resize(top + 1);
  M.sigma.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    const TensorSpace& S = M.space[n];
    if (n < top)
      for (int i = 0; i <= n + 1; ++i)
        M.delta[n].push_back(induce([&, n, i](const Word& w) { return cochain_coface(c, n, i, w); }, S, M.space[n + 1]));
    for (int i = 0; i < n; ++i)
      M.sigma[n].push_back(induce([&, n, i](const Word& w) { return cochain_codegeneracy(c, n, i, w); }, S, M.space[n - 1]));
    if (n == 0) {
      M.tau.push_back(identity_of(S));
      M.tau_inv.push_back(identity_of(S));
      continue;
    }
    M.tau.push_back(induce([&, n](const Word& w) { return cochain_tau(c, n, w); }, S, S));
    if (P.has_invertible_antipode())
      M.tau_inv.push_back(induce([&, n](const Word& w) { return cochain_tau_inv(c, n, w); }, S, S));
  }
  if (static_cast<int>(M.tau_inv.size()) != top + 1) M.tau_inv.clear();
  return M;
}

// ---- B^• ----

namespace {

TensorSpace coalgebra_space(const Ctx& c, int n, const LinearMap& tlp) {
  TensorSpace base = cochain_space(c.P, n + 1);
  std::vector<Tensor> rel;
  for (int k = 0; k < base.dim(); ++k) {
    const Word& w = base.basis_word(k);
    for (int a = 0; a < c.dl; ++a) {
      Tensor r = splice_vec(w, 0, 1, c.mul(c.P.s_l.col(a), letter(w, 0)));
      add_to(r, splice_vec(w, n, 1, c.mul(tlp.col(a), letter(w, n))), -1);
      if (!r.empty() && !base.is_zero(r)) rel.push_back(std::move(r));
    }
  }
  return base.with_relations(rel);
}

}  // namespace

CocyclicModule coalgebra_cocyclic_module(const HopfAlgebroidPresentation& P, int top) {
  Ctx c(P);
  // t_l' = t_l θ^{-1} φ with θ^{-1} = ε_l s_r and φ = ε_r s_l
  LinearMap tlp = P.t_l * P.eps_l * P.s_r * P.eps_r * P.s_l;
  CocyclicModule M;
  M.label = "B^*";
  for (int n = 0; n <= top; ++n) M.space.push_back(coalgebra_space(c, n, tlp));
  M.delta.resize(top + 1);
  M.sigma.resize(top + 1);
  const bool inv = P.has_invertible_antipode();
  for (int n = 0; n <= top; ++n) {
    const TensorSpace& S = M.space[n];
    if (n < top) {
      for (int i = 0; i <= n; ++i)
        M.delta[n].push_back(induce([&, i](const Word& w) { return c.ops.expand_slot(single(w), i, P.Delta_l); }, S,
                                    M.space[n + 1]));
      M.delta[n].push_back(induce(
          [&](const Word& w) {
            Tensor out;
            for (const auto& [idx, x] : P.Delta_l.col(letter(w, 0)).entries()) {
              Vec last = c.ops.S2.col(idx / c.d);
              Word mid = to_letter(idx % c.d) + w.substr(1);
              for (const auto& [z, y] : last.entries()) add_word(out, mid + to_letter(z), x * y);
            }
            return out;
          },
          S, M.space[n + 1]));
    }
    for (int i = 0; i < n; ++i)
      M.sigma[n].push_back(induce(
          [&, i](const Word& w) {
            Vec a = P.t_l.apply(P.eps_l.col(letter(w, i + 1)));
            return splice_vec(w, i, 2, c.mul(a, letter(w, i)));
          },
          S, M.space[n - 1]));
    M.tau.push_back(induce(
        [&, n](const Word& w) {
          Tensor out;
          Word rest = w.substr(1);
          for (const auto& [z, y] : c.ops.S2.col(letter(w, 0)).entries()) add_word(out, rest + to_letter(z), y);
          return out;
        },
        S, S));
    if (inv)
      M.tau_inv.push_back(induce(
          [&, n](const Word& w) {
            Tensor out;
            Word rest = w.substr(0, n);
            for (const auto& [z, y] : c.ops.Sinv2.col(letter(w, n)).entries()) add_word(out, to_letter(z) + rest, y);
            return out;
          },
          S, S));
  }
  return M;
}

// ---- C_• ----

CyclicModule cyclic_module(const HopfAlgebroidPresentation& P, int top) {
  Ctx c(P);
  c.Sinv();
  CyclicModule M;
  M.label = "C_*";
  for (int n = 0; n <= top; ++n) M.space.push_back(chain_space(P, n));
  M.face.resize(top + 1);
  M.degen.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    const TensorSpace& S = M.space[n];
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        M.face[n].push_back(induce([&, n, i](const Word& w) { return chain_face(c, n, i, w); }, S, M.space[n - 1]));
    if (n < top)
      for (int i = 0; i <= n; ++i)
        M.degen[n].push_back(induce([&, n, i](const Word& w) { return chain_degeneracy(c, n, i, w); }, S, M.space[n + 1]));
    if (n == 0) {
      M.t.push_back(identity_of(S));
      M.t_inv.push_back(identity_of(S));
      continue;
    }
    M.t.push_back(induce([&, n](const Word& w) { return chain_t(c, n, w); }, S, S));
    M.t_inv.push_back(induce([&, n](const Word& w) { return chain_t_inv(c, n, w); }, S, S));
  }
  return M;
}

// ---- twists and identities ----

std::vector<LinearMap> s2_twist(const HopfAlgebroidPresentation& P, const std::vector<TensorSpace>& spaces,
                                bool inverse, bool base_in_degree0, int skip_first_slots) {
  HopfOps ops(P);
  const LinearMap& f = inverse ? ops.Sinv2 : ops.S2;
  if (inverse && !P.has_invertible_antipode()) throw MissingInverse("antipode is not invertible");
  std::vector<LinearMap> out;
  for (std::size_t n = 0; n < spaces.size(); ++n) {
    const TensorSpace& S = spaces[n];
    if (n == 0 && base_in_degree0) {
      out.push_back(LinearMap::identity(S.dim()));
      continue;
    }
    out.push_back(induce(
        [&](const Word& w) {
          Tensor t = single(w);
          for (int k = skip_first_slots; k < static_cast<int>(w.size()); ++k) t = ops.map_slot(t, k, f);
          return t;
        },
        S, S));
  }
  return out;
}

AxiomReport cocyclic_identities(const CocyclicModule& M, const std::vector<LinearMap>* twist) {
  AxiomReport rep;
  Check ck{rep};
  const int top = M.top();
  for (int n = 0; n <= top; ++n) {
    const TensorSpace* src = &M.space[n];
    if (n + 2 <= top)
      for (int j = 1; j <= n + 2; ++j)
        for (int i = 0; i < j; ++i)
          ck.eq(deg("coface-coface", n), M.delta[n + 1][j] * M.delta[n][i], M.delta[n + 1][i] * M.delta[n][j - 1], src);
    for (int j = 0; j + 2 <= n; ++j)
      for (int i = 0; i <= j; ++i)
        ck.eq(deg("codegeneracy-codegeneracy", n), M.sigma[n - 1][j] * M.sigma[n][i],
              M.sigma[n - 1][i] * M.sigma[n][j + 1], src);
    if (n < top)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          LinearMap lhs = M.sigma[n + 1][j] * M.delta[n][i];
          LinearMap rhs;
          if (i == j || i == j + 1) rhs = LinearMap::identity(M.dim(n));
          else if (i < j) rhs = M.delta[n - 1][i] * M.sigma[n][j - 1];
          else rhs = M.delta[n - 1][i - 1] * M.sigma[n][j];
          ck.eq(deg("codegeneracy-coface", n), lhs, rhs, src);
        }
    if (n < top) {
      for (int i = 1; i <= n + 1; ++i)
        ck.eq(deg("cyclic-coface", n), M.tau[n + 1] * M.delta[n][i], M.delta[n][i - 1] * M.tau[n], src);
      ck.eq(deg("cyclic-coface", n), M.tau[n + 1] * M.delta[n][0], M.delta[n][n + 1], src);
    }
    if (n >= 1) {
      for (int i = 1; i <= n - 1; ++i)
        ck.eq(deg("cyclic-codegeneracy", n), M.tau[n - 1] * M.sigma[n][i], M.sigma[n][i - 1] * M.tau[n], src);
      ck.eq(deg("cyclic-codegeneracy", n), M.tau[n - 1] * M.sigma[n][0], M.sigma[n][n - 1] * M.tau[n].pow(2), src);
    }
    LinearMap power = M.tau[n].pow(n + 1);
    ck.eq(deg("cyclic-power", n), power, twist ? (*twist)[n] : LinearMap::identity(M.dim(n)), src);
    if (!M.tau_inv.empty()) {
      ck.eq(deg("cyclic-inverse", n), M.tau[n] * M.tau_inv[n], LinearMap::identity(M.dim(n)), src);
      ck.eq(deg("cyclic-inverse", n), M.tau_inv[n] * M.tau[n], LinearMap::identity(M.dim(n)), src);
    }
  }
  return rep;
}

AxiomReport cyclic_identities(const CyclicModule& M, const std::vector<LinearMap>* twist) {
  AxiomReport rep;
  Check ck{rep};
  const int top = M.top();
  for (int n = 0; n <= top; ++n) {
    const TensorSpace* src = &M.space[n];
    if (n >= 2)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          ck.eq(deg("face-face", n), M.face[n - 1][i] * M.face[n][j], M.face[n - 1][j - 1] * M.face[n][i], src);
    if (n + 2 <= top)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          ck.eq(deg("degeneracy-degeneracy", n), M.degen[n + 1][i] * M.degen[n][j],
                M.degen[n + 1][j + 1] * M.degen[n][i], src);
    if (n < top)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          LinearMap lhs = M.face[n + 1][i] * M.degen[n][j];
          LinearMap rhs;
          if (i == j || i == j + 1) rhs = LinearMap::identity(M.dim(n));
          else if (i < j) rhs = M.degen[n - 1][j - 1] * M.face[n][i];
          else rhs = M.degen[n - 1][j] * M.face[n][i - 1];
          ck.eq(deg("face-degeneracy", n), lhs, rhs, src);
        }
    if (n >= 1) {
      for (int i = 1; i <= n; ++i)
        ck.eq(deg("face-cyclic", n), M.face[n][i] * M.t[n], M.t[n - 1] * M.face[n][i - 1], src);
      ck.eq(deg("face-cyclic", n), M.face[n][0] * M.t[n], M.face[n][n], src);
    }
    if (n < top) {
      for (int i = 1; i <= n; ++i)
        ck.eq(deg("degeneracy-cyclic", n), M.degen[n][i] * M.t[n], M.t[n + 1] * M.degen[n][i - 1], src);
      ck.eq(deg("degeneracy-cyclic", n), M.degen[n][0] * M.t[n], M.t[n + 1].pow(2) * M.degen[n][n], src);
    }
    ck.eq(deg("cyclic-power", n), M.t[n].pow(n + 1), twist ? (*twist)[n] : LinearMap::identity(M.dim(n)), src);
    if (!M.t_inv.empty()) {
      ck.eq(deg("cyclic-inverse", n), M.t[n] * M.t_inv[n], LinearMap::identity(M.dim(n)), src);
      ck.eq(deg("cyclic-inverse", n), M.t_inv[n] * M.t[n], LinearMap::identity(M.dim(n)), src);
    }
  }
  return rep;
}

bool cyclic_power_is_identity(const CocyclicModule& M) {
  for (int n = 0; n <= M.top(); ++n)
    if (!(M.tau[n].pow(n + 1) == LinearMap::identity(M.dim(n)))) return false;
  return true;
}

bool cyclic_power_is_identity(const CyclicModule& M) {
  for (int n = 0; n <= M.top(); ++n)
    if (!(M.t[n].pow(n + 1) == LinearMap::identity(M.dim(n)))) return false;
  return true;
}

// ---- C^• <-> B^• ----

CoinvariantMaps coinvariant_maps(const HopfAlgebroidPresentation& P, const CocyclicModule& C,
                                 const CocyclicModule& B) {
  Ctx c(P);
  CoinvariantMaps out;
  Check ck{out.report};
  const int top = std::min(C.top(), B.top());
  for (int n = 0; n <= top; ++n) {
    out.Phi.push_back(induce(
        [&, n](const Word& w) {
          if (n == 0) return from_vec(P.t_l.col(letter(w, 0)));
          return c.ops.insert_slot(single(w), 0, c.one);
        },
        C.space[n], B.space[n]));
    out.PsiBar.push_back(induce(
        [&, n](const Word& w) {
          Vec s = P.S.col(letter(w, 0));
          if (n == 0) return from_vec(P.eps_l.apply(s));
          return c.act(s, single(w.substr(1)));
        },
        B.space[n], C.space[n]));
  }
  for (int n = 0; n <= top; ++n) {
    const TensorSpace* src = &C.space[n];
    ck.eq(deg("coinvariant-psi-phi", n), out.PsiBar[n] * out.Phi[n], LinearMap::identity(C.dim(n)), src);
    const TensorSpace* bsrc = &B.space[n];
    if (n < top)
      for (int i = 0; i <= n + 1; ++i)
        ck.eq(deg("coinvariant-coface", n), out.PsiBar[n + 1] * B.delta[n][i], C.delta[n][i] * out.PsiBar[n], bsrc);
    for (int i = 0; i < n; ++i)
      ck.eq(deg("coinvariant-codegeneracy", n), out.PsiBar[n - 1] * B.sigma[n][i], C.sigma[n][i] * out.PsiBar[n], bsrc);
    ck.eq(deg("coinvariant-cyclic", n), out.PsiBar[n] * B.tau[n], C.tau[n] * out.PsiBar[n], bsrc);
  }
  return out;
}

// ---- Hopf–Galois duality ----

namespace {

Tensor galois_phi(const Ctx& c, const Word& w) {
  if (w.size() == 1) return single(w);
  Tensor rest = galois_phi(c, w.substr(1));
  return c.act(e(letter(w, 0)), c.ops.insert_slot(rest, 0, c.one));
}

Tensor galois_psi(const Ctx& c, const Word& w) {
  const int n = static_cast<int>(w.size());
  if (n == 1) return single(w);
  std::map<Word, Vec> acc;  // all slots but the last, last slot pending
  for (const auto& [idx, x] : c.P.Delta_r.col(letter(w, 0)).entries())
    acc[Word(1, to_letter(idx / c.d))] += x * e(idx % c.d);
  for (int k = 1; k < n - 1; ++k) {
    std::map<Word, Vec> next;
    for (const auto& [pre, v] : acc) {
      Vec sv = c.P.S.apply(v);
      for (const auto& [idx, x] : c.P.Delta_r.col(letter(w, k)).entries()) {
        Vec slot = c.mul(sv, idx / c.d);
        for (const auto& [z, y] : slot.entries()) next[pre + to_letter(z)] += (x * y) * e(idx % c.d);
      }
    }
    acc = std::move(next);
  }
  Tensor out;
  for (const auto& [pre, v] : acc) {
    Vec last = c.mul(c.P.S.apply(v), letter(w, n - 1));
    for (const auto& [z, y] : last.entries()) add_word(out, pre + to_letter(z), y);
  }
  return out;
}

}  // namespace

HopfGalois hopf_galois(const HopfAlgebroidPresentation& P, const CocyclicModule& C, const CyclicModule& D) {
  Ctx c(P);
  HopfGalois G;
  Check ck{G.report};
  const int top = std::min(C.top(), D.top());
  const LinearMap phi0 = P.eps_l * P.s_r, psi0 = P.eps_r * P.t_l;
  for (int n = 0; n <= top; ++n) {
    if (n == 0) {
      G.phi.push_back(phi0);
      G.psi.push_back(psi0);
      continue;
    }
    G.phi.push_back(induce([&](const Word& w) { return galois_phi(c, w); }, D.space[n], C.space[n]));
    G.psi.push_back(induce([&](const Word& w) { return galois_psi(c, w); }, C.space[n], D.space[n]));
  }
  for (int n = 0; n <= top; ++n) {
    const TensorSpace* src = &D.space[n];
    ck.eq(deg("galois-phi-psi", n), G.phi[n] * G.psi[n], LinearMap::identity(C.dim(n)), &C.space[n]);
    ck.eq(deg("galois-psi-phi", n), G.psi[n] * G.phi[n], LinearMap::identity(D.dim(n)), src);
    if (!C.tau_inv.empty()) ck.eq(deg("galois-cyclic", n), G.phi[n] * D.t[n], C.tau_inv[n] * G.phi[n], src);
    if (n >= 1) {
      ck.eq(deg("galois-face0", n), G.phi[n - 1] * D.face[n][0], C.sigma[n][n - 1] * C.tau[n] * G.phi[n], src);
      for (int i = 1; i <= n; ++i)
        ck.eq(deg("galois-face", n), G.phi[n - 1] * D.face[n][i], C.sigma[n][i - 1] * G.phi[n], src);
    }
    if (n < top)
      for (int i = 0; i <= n; ++i)
        ck.eq(deg("galois-degeneracy", n), G.phi[n + 1] * D.degen[n][i], C.delta[n][i] * G.phi[n], src);
  }
  return G;
}

// ---- mixed complexes ----

namespace {

LinearMap signed_sum(const std::vector<LinearMap>& fs) {
  LinearMap acc(fs.front().rows(), fs.front().cols());
  for (std::size_t i = 0; i < fs.size(); ++i) acc += (i % 2 ? Scalar(-1) : Scalar(1)) * fs[i];
  return acc;
}

LinearMap norm_sum(const LinearMap& lambda, int n) {
  LinearMap acc(lambda.rows(), lambda.cols()), p = LinearMap::identity(lambda.rows());
  for (int i = 0; i <= n; ++i) {
    acc += p;
    p = lambda * p;
  }
  return acc;
}

Scalar sgn(int k) { return k % 2 ? Scalar(-1) : Scalar(1); }

void mixed_checks(MixedComplex& X) {
  Check ck{X.report};
  const int top = X.top();
  if (X.cohomological) {
    for (int n = 0; n + 2 <= top; ++n) ck.zero(deg("b-squared", n), X.b[n + 1] * X.b[n]);
    if (!X.has_B) return;
    for (int n = 0; n + 2 <= top; ++n) ck.zero(deg("B-squared", n), X.B[n] * X.B[n + 1]);
    for (int n = 0; n + 1 <= top; ++n) {
      LinearMap s = X.B[n] * X.b[n];
      if (n >= 1) s += X.b[n - 1] * X.B[n - 1];
      ck.zero(deg("bB+Bb", n), s);
    }
  } else {
    for (int n = 2; n <= top; ++n) ck.zero(deg("b-squared", n), X.b[n - 1] * X.b[n]);
    if (!X.has_B) return;
    for (int n = 0; n + 2 <= top; ++n) ck.zero(deg("B-squared", n), X.B[n + 1] * X.B[n]);
    for (int n = 0; n + 1 <= top; ++n) {
      LinearMap s = X.b[n + 1] * X.B[n];
      if (n >= 1) s += X.B[n - 1] * X.b[n];
      ck.zero(deg("bB+Bb", n), s);
    }
  }
}

}  // namespace

MixedComplex mixed_complex(const CocyclicModule& M) {
  MixedComplex X;
  X.cohomological = true;
  const int top = M.top();
  for (int n = 0; n <= top; ++n) X.dims.push_back(M.dim(n));
  for (int n = 0; n < top; ++n) X.b.push_back(signed_sum(M.delta[n]));
  X.has_B = cyclic_power_is_identity(M);
  if (X.has_B)
    for (int n = 0; n < top; ++n) {
      LinearMap lam1 = sgn(n + 1) * M.tau[n + 1];
      LinearMap lam0 = sgn(n) * M.tau[n];
      LinearMap sig = M.sigma[n + 1][n] * M.tau[n + 1];
      X.B.push_back(norm_sum(lam0, n) * sig * (LinearMap::identity(M.dim(n + 1)) - lam1));
    }
  mixed_checks(X);
  return X;
}

MixedComplex mixed_complex(const CyclicModule& M) {
  MixedComplex X;
  X.cohomological = false;
  const int top = M.top();
  for (int n = 0; n <= top; ++n) X.dims.push_back(M.dim(n));
  X.b.push_back(LinearMap(0, M.dim(0)));
  for (int n = 1; n <= top; ++n) X.b.push_back(signed_sum(M.face[n]));
  X.has_B = cyclic_power_is_identity(M);
  if (X.has_B)
    for (int n = 0; n < top; ++n) {
      LinearMap lam1 = sgn(n + 1) * M.t[n + 1];
      LinearMap lam0 = sgn(n) * M.t[n];
      LinearMap extra = M.t[n + 1] * M.degen[n][n];
      X.B.push_back((LinearMap::identity(M.dim(n + 1)) - lam1) * extra * norm_sum(lam0, n));
    }
  mixed_checks(X);
  return X;
}

MixedComplex normalized_mixed_complex(const CyclicModule& M) {
  MixedComplex U = mixed_complex(M);
  const int top = M.top();
  std::vector<QuotientSpace> Q;
  for (int n = 0; n <= top; ++n) {
    std::vector<Vec> rel;
    if (n >= 1)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < M.degen[n - 1][i].cols(); ++j) rel.push_back(M.degen[n - 1][i].col(j));
    Q.push_back(make_quotient(M.dim(n), rel));
  }
  MixedComplex X;
  X.cohomological = false;
  X.has_B = U.has_B;
  for (int n = 0; n <= top; ++n) X.dims.push_back(Q[n].dim());
  X.b.push_back(LinearMap(0, Q[0].dim()));
  for (int n = 1; n <= top; ++n) X.b.push_back(induce_on_quotients(U.b[n], Q[n], Q[n - 1]));
  if (X.has_B)
    for (int n = 0; n < top; ++n) X.B.push_back(induce_on_quotients(U.B[n], Q[n], Q[n + 1]));
  mixed_checks(X);
  return X;
}

// ---- homology ----

namespace {

ChainComplexData hochschild_complex(const MixedComplex& M) {
  if (M.cohomological) {
    std::vector<LinearMap> maps(M.b.begin(), M.b.end());
    return ChainComplexData::cochain(std::move(maps), M.dims.back());
  }
  std::vector<LinearMap> maps(M.b.begin() + 1, M.b.end());
  if (maps.empty()) {
    ChainComplexData cx;
    cx.dims = M.dims;
    cx.d = {LinearMap(0, M.dims[0])};
    return cx;
  }
  return ChainComplexData::homological(std::move(maps));
}

struct Tot {
  std::vector<std::vector<int>> block_deg;  // block j of degree n sits in C_{n-2j}
  std::vector<std::vector<int>> offset;
  std::vector<int> dim;
};

Tot tot_layout(const MixedComplex& M) {
  Tot T;
  for (int n = 0; n <= M.top(); ++n) {
    std::vector<int> bd, off;
    int acc = 0;
    for (int j = 0; n - 2 * j >= 0; ++j) {
      bd.push_back(n - 2 * j);
      off.push_back(acc);
      acc += M.dims[n - 2 * j];
    }
    T.block_deg.push_back(bd);
    T.offset.push_back(off);
    T.dim.push_back(acc);
  }
  return T;
}

void put_block(std::vector<std::tuple<int, int, Scalar>>& trip, const LinearMap& f, int ro, int co) {
  for (const auto& [r, c, x] : f.triplets()) trip.emplace_back(r + ro, c + co, x);
}

// D out of Tot degree n (cohomological: n -> n+1, homological: n -> n-1).
LinearMap tot_differential(const MixedComplex& M, const Tot& T, int n) {
  std::vector<std::tuple<int, int, Scalar>> trip;
  if (M.cohomological) {
    for (std::size_t j = 0; j < T.block_deg[n].size(); ++j) {
      int m = T.block_deg[n][j];
      put_block(trip, M.b[m], T.offset[n + 1][j], T.offset[n][j]);
      if (m >= 1) put_block(trip, M.B[m - 1], T.offset[n + 1][j + 1], T.offset[n][j]);
    }
    return LinearMap::from_triplets(T.dim[n + 1], T.dim[n], trip);
  }
  for (std::size_t j = 0; j < T.block_deg[n].size(); ++j) {
    int m = T.block_deg[n][j];
    if (m >= 1) put_block(trip, M.b[m], T.offset[n - 1][j], T.offset[n][j]);
    if (j >= 1) put_block(trip, M.B[m], T.offset[n - 1][j - 1], T.offset[n][j]);
  }
  return LinearMap::from_triplets(T.dim[n - 1], T.dim[n], trip);
}

// Periodicity map: homology drops block 0 (n -> n-2), cohomology shifts blocks up (n -> n+2).
LinearMap periodicity(const MixedComplex& M, const Tot& T, int n) {
  std::vector<std::tuple<int, int, Scalar>> trip;
  if (M.cohomological) {
    for (std::size_t j = 0; j < T.block_deg[n].size(); ++j)
      for (int i = 0; i < M.dims[T.block_deg[n][j]]; ++i)
        trip.emplace_back(T.offset[n + 2][j + 1] + i, T.offset[n][j] + i, Scalar(1));
    return LinearMap::from_triplets(T.dim[n + 2], T.dim[n], trip);
  }
  for (std::size_t j = 1; j < T.block_deg[n].size(); ++j)
    for (int i = 0; i < M.dims[T.block_deg[n][j]]; ++i)
      trip.emplace_back(T.offset[n - 2][j - 1] + i, T.offset[n][j] + i, Scalar(1));
  return LinearMap::from_triplets(T.dim[n - 2], T.dim[n], trip);
}

}  // namespace

std::vector<int> hochschild_dims(const MixedComplex& M, int n_max) {
  if (n_max > M.top() - 1) throw InputError("hochschild: degree " + std::to_string(n_max) + " needs the complex up to " +
                                            std::to_string(n_max + 1));
  auto dims = homology_dims(hochschild_complex(M));
  dims.resize(n_max + 1);
  return dims;
}

CyclicTable cyclic_theory(const MixedComplex& M, int n_max) {
  if (!M.has_B) throw ParaCyclic("cyclic operator does not satisfy t^{n+1} = id (S^2 != id); cyclic theory undefined");
  if (n_max > M.top() - 1) throw InputError("cyclic: degree " + std::to_string(n_max) + " needs the complex up to " +
                                            std::to_string(n_max + 1));
  CyclicTable out;
  out.hh = hochschild_dims(M, n_max);
  const int top = M.top();
  Tot T = tot_layout(M);
  ChainComplexData cx;
  if (M.cohomological) {
    std::vector<LinearMap> maps;
    for (int n = 0; n < top; ++n) maps.push_back(tot_differential(M, T, n));
    cx = ChainComplexData::cochain(std::move(maps), T.dim[top]);
  } else {
    std::vector<LinearMap> maps;
    for (int n = 1; n <= top; ++n) maps.push_back(tot_differential(M, T, n));
    cx = ChainComplexData::homological(std::move(maps));
  }
  auto groups = complex_homology(cx);
  for (int n = 0; n <= n_max; ++n) out.hc.push_back(groups[n].dim);

  out.s_rank.assign(n_max + 1, -1);
  out.s_iso.assign(n_max + 1, -1);
  for (int n = 0; n <= n_max; ++n) {
    int tgt = M.cohomological ? n + 2 : n - 2;
    if (tgt < 0 || tgt > n_max) continue;
    LinearMap Sm = periodicity(M, T, n);
    Echelon bd(T.dim[tgt]);
    if (const LinearMap* in = cx.incoming(tgt); in && in->rows() > 0)
      for (int j = 0; j < in->cols(); ++j) bd.insert(in->col(j));
    int r = 0;
    for (const auto& z : groups[n].reps)
      if (bd.insert(Sm.apply(z))) ++r;
    out.s_rank[n] = r;
    out.s_iso[n] = (r == out.hc[n] && r == out.hc[tgt]) ? 1 : 0;
  }
  for (int n = 0; n + 1 <= n_max; ++n)
    if (out.s_iso[n] == 1 && out.s_iso[n + 1] == 1) {
      out.hp_stable_at = n;
      (n % 2 == 0 ? out.hp_even : out.hp_odd) = out.hc[n];
      (n % 2 == 0 ? out.hp_odd : out.hp_even) = out.hc[n + 1];
      break;
    }
  return out;
}

std::vector<int> periodic_sum(const std::vector<int>& v) {
  std::vector<int> out(v.size(), 0);
  for (std::size_t n = 0; n < v.size(); ++n)
    for (int k = static_cast<int>(n); k >= 0; k -= 2) out[n] += v[k];
  return out;
}

// ---- resolutions ----

namespace {

Tensor cobar_coface(const Ctx& c, int n, int i, const Word& w) {
  if (i == n + 1) return c.ops.insert_slot(single(w), n + 1, c.one);
  return c.ops.expand_slot(single(w), i, c.P.Delta_l);
}

Tensor cobar_homotopy(const Ctx& c, const Word& w) {
  Vec a = c.P.s_l.apply(c.P.eps_l.col(letter(w, 0)));
  return splice_vec(w, 0, 2, c.mul(a, letter(w, 1)));
}

Tensor bar_face(const Ctx& c, int n, int i, const Word& w) {
  if (i < n) return c.ops.merge_slots(single(w), i);
  Vec a = c.P.s_r.apply(c.P.eps_r.apply(c.Sinv().col(letter(w, n))));
  return splice_vec(w, n - 1, 2, c.mul(letter(w, n - 1), a));
}

LinearMap bar_differential(const Ctx& c, const TensorSpace& src, const TensorSpace& tgt, int n, int shift) {
  return induce(
      [&, n, shift](const Word& w) {
        Tensor out;
        Word pre = w.substr(0, shift);
        Word bar = w.substr(shift);
        for (int i = 0; i <= n; ++i) {
          Tensor f = bar_face(c, n, i, bar);
          for (const auto& [u, x] : f) add_word(out, pre + u, sgn(i) * x);
        }
        return out;
      },
      src, tgt);
}

std::vector<int> augmented_dims_cochain(std::vector<LinearMap> maps, int top_dim) {
  auto dims = homology_dims(ChainComplexData::cochain(std::move(maps), top_dim));
  dims.pop_back();
  return dims;
}

}  // namespace

ResolutionData cobar_resolution(const HopfAlgebroidPresentation& P, int top) {
  Ctx c(P);
  ResolutionData R;
  R.cohomological = true;
  Check ck{R.report};
  for (int n = 0; n <= top; ++n) R.space.push_back(cochain_space(P, n + 1));
  for (int n = 0; n < top; ++n) {
    std::vector<LinearMap> fs;
    for (int i = 0; i <= n + 1; ++i)
      fs.push_back(induce([&, n, i](const Word& w) { return cobar_coface(c, n, i, w); }, R.space[n], R.space[n + 1]));
    R.diff.push_back(signed_sum(fs));
    R.homotopy.push_back(induce([&](const Word& w) { return cobar_homotopy(c, w); }, R.space[n + 1], R.space[n]));
  }
  R.augmentation = P.s_l;
  R.extra_homotopy = P.eps_l;
  ck.eq("cobar-homotopy/0", R.homotopy[0] * R.diff[0] + R.augmentation * R.extra_homotopy,
        LinearMap::identity(R.space[0].dim()), &R.space[0]);
  for (int n = 1; n < top; ++n)
    ck.eq(deg("cobar-homotopy", n), R.homotopy[n] * R.diff[n] + R.diff[n - 1] * R.homotopy[n - 1],
          LinearMap::identity(R.space[n].dim()), &R.space[n]);
  ck.eq("cobar-counit-section", R.extra_homotopy * R.augmentation, LinearMap::identity(P.A_l.dim));
  std::vector<LinearMap> maps{R.augmentation};
  for (const auto& m : R.diff) maps.push_back(m);
  R.augmented_homology = augmented_dims_cochain(std::move(maps), R.space[top].dim());
  bool exact = true;
  for (int x : R.augmented_homology) exact = exact && x == 0;
  ck.truth("cobar-exact", exact, "augmented cobar complex has homology");
  return R;
}

ResolutionData bar_resolution(const HopfAlgebroidPresentation& P, int top) {
  Ctx c(P);
  c.Sinv();
  ResolutionData R;
  R.cohomological = false;
  Check ck{R.report};
  for (int n = 0; n <= top; ++n) R.space.push_back(chain_space(P, n + 1));
  R.diff.push_back(LinearMap(0, R.space[0].dim()));
  for (int n = 1; n <= top; ++n) R.diff.push_back(bar_differential(c, R.space[n], R.space[n - 1], n, 0));
  for (int n = 0; n < top; ++n)
    R.homotopy.push_back(
        induce([&](const Word& w) { return c.ops.insert_slot(single(w), 0, c.one); }, R.space[n], R.space[n + 1]));
  R.augmentation = P.eps_l;
  R.extra_homotopy = P.t_l;
  if (top >= 1) {
    ck.zero("bar-augmentation", R.augmentation * R.diff[1], &R.space[1]);
    ck.eq("bar-homotopy/0", R.diff[1] * R.homotopy[0] + R.extra_homotopy * R.augmentation,
          LinearMap::identity(R.space[0].dim()), &R.space[0]);
  }
  for (int n = 1; n < top; ++n)
    ck.eq(deg("bar-homotopy", n), R.diff[n + 1] * R.homotopy[n] + R.homotopy[n - 1] * R.diff[n],
          LinearMap::identity(R.space[n].dim()), &R.space[n]);
  ck.eq("bar-counit-section", R.augmentation * R.extra_homotopy, LinearMap::identity(P.A_l.dim));
  // ... -> Bar_0 -> A_l -> 0, written as a homological complex with A_l in degree 0
  std::vector<LinearMap> maps{R.augmentation};
  for (int n = 1; n <= top; ++n) maps.push_back(R.diff[n]);
  auto dims = homology_dims(ChainComplexData::homological(std::move(maps)));
  dims.pop_back();
  R.augmented_homology = dims;
  bool exact = true;
  for (int x : dims) exact = exact && x == 0;
  ck.truth("bar-exact", exact, "augmented bar complex has homology");
  return R;
}

// ---- derived functors ----

namespace {

LinearMap columns_of(int rows, const std::vector<Vec>& vs) { return LinearMap::from_columns(rows, vs); }

// A_r ⊗_H Bar_n(H).
TensorSpace tor_space(const Ctx& c, int n) {
  Junction J;
  J.base_dim = c.d;
  for (int h = 0; h < c.d; ++h) {
    std::vector<Vec> cols;
    for (int a = 0; a < c.dr; ++a) cols.push_back(c.P.eps_r.apply(c.mul(c.P.s_r.col(a), h)));
    J.right_on_prev.push_back(LinearMap::from_columns(c.dr, cols));
    J.left_on_next.push_back(c.P.H.left_mult(e(h)));
  }
  std::vector<int> dims{c.dr};
  std::vector<Junction> js{J};
  for (int k = 0; k <= n; ++k) dims.push_back(c.d);
  for (int k = 0; k < n; ++k) js.push_back(c.ops.junction_right_comod());
  return TensorSpace(dims, js);
}

}  // namespace

CrosscheckReport derived_functor_crosscheck(const HopfAlgebroidPresentation& P, int n_max) {
  Ctx c(P);
  CrosscheckReport out;
  Check ck{out.report};
  const int top = n_max + 1;

  // cohomology side
  CocyclicModule C = cocyclic_module(P, top);
  out.hh_co = hochschild_dims(mixed_complex(C), n_max);
  ResolutionData R = cobar_resolution(P, top);
  out.report.append(R.report);
  std::vector<LinearMap> K;  // cotensor A_l □_H Cobar^n as columns
  for (int n = 0; n <= n_max; ++n) {
    LinearMap d0 = induce([&, n](const Word& w) { return cobar_coface(c, n, 0, w); }, R.space[n], R.space[n + 1]);
    LinearMap u = induce([&, n](const Word& w) { return c.ops.insert_slot(single(w), 0, c.one); }, R.space[n],
                         R.space[n + 1]);
    K.push_back(columns_of(R.space[n].dim(), kernel_basis(d0 - u)));
  }
  for (int n = 0; n <= n_max; ++n) {
    int r_out = rank(R.diff[n] * K[n]);
    int r_in = n >= 1 ? rank(R.diff[n - 1] * K[n - 1]) : 0;
    out.cotor.push_back(K[n].cols() - r_out - r_in);
    LinearMap Phi = n == 0 ? P.t_l
                           : induce([&](const Word& w) { return c.ops.insert_slot(single(w), 0, c.one); }, C.space[n],
                                    R.space[n]);
    ck.truth(deg("cotensor-comparison-onto", n), rank(Phi) == K[n].cols() && C.dim(n) == K[n].cols(),
             "rank " + std::to_string(rank(Phi)) + " vs cotensor dim " + std::to_string(K[n].cols()));
    if (n < n_max) {
      LinearMap Phi1 = induce([&](const Word& w) { return c.ops.insert_slot(single(w), 0, c.one); }, C.space[n + 1],
                              R.space[n + 1]);
      ck.eq(deg("cotensor-comparison-differential", n), R.diff[n] * Phi, Phi1 * mixed_complex(C).b[n], &C.space[n]);
    }
  }
  ck.truth("cotor-equals-hochschild", out.cotor == out.hh_co);

  // homology side
  CyclicModule D = cyclic_module(P, top);
  MixedComplex Dm = mixed_complex(D);
  out.hh = hochschild_dims(Dm, n_max);
  ResolutionData B = bar_resolution(P, top);
  out.report.append(B.report);
  std::vector<TensorSpace> T;
  for (int n = 0; n <= top; ++n) T.push_back(tor_space(c, n));
  std::vector<LinearMap> dT{LinearMap(0, T[0].dim())};
  for (int n = 1; n <= top; ++n) dT.push_back(bar_differential(c, T[n], T[n - 1], n, 1));
  out.tor = homology_dims(ChainComplexData::homological(std::vector<LinearMap>(dT.begin() + 1, dT.end())));
  out.tor.resize(n_max + 1);
  std::vector<LinearMap> g;
  for (int n = 0; n <= top; ++n)
    g.push_back(induce(
        [&, n](const Word& w) {
          Vec x = c.P.eps_r.apply(c.mul(c.P.s_r.col(letter(w, 0)), letter(w, 1)));
          if (n == 0) return from_vec(x);
          return splice_vec(w, 0, 3, c.mul(c.P.s_r.apply(x), letter(w, 2)));
        },
        T[n], D.space[n]));
  for (int n = 0; n <= top; ++n) {
    ck.truth(deg("tensor-comparison-iso", n), g[n].rows() == g[n].cols() && rank(g[n]) == g[n].cols(),
             std::to_string(g[n].rows()) + "x" + std::to_string(g[n].cols()) + " rank " + std::to_string(rank(g[n])));
    if (n >= 1) ck.eq(deg("tensor-comparison-differential", n), Dm.b[n] * g[n], g[n - 1] * dT[n], &T[n]);
  }
  ck.truth("tor-equals-hochschild", out.tor == out.hh);
  return out;
}

// ---- coefficients ----

std::vector<int> cohomology_with_coefficients(const HopfAlgebroidPresentation& P, const ComoduleData& M, int n_max) {
  Ctx c(P);
  const int m = M.dim;
  if (static_cast<int>(M.right_action.size()) != c.dl) throw InputError("comodule: one action matrix per base element expected");
  for (const auto& a : M.right_action)
    if (a.rows() != m || a.cols() != m) throw InputError("comodule: action matrix has wrong shape");
  if (M.coaction.rows() != m * c.d || M.coaction.cols() != m) throw InputError("comodule: coaction has wrong shape");

  auto act_by = [&](const Vec& a) {
    LinearMap f(m, m);
    for (const auto& [k, x] : a.entries()) f += x * M.right_action[k];
    return f;
  };
  if (int j = act_by(P.A_l.unit).first_difference(LinearMap::identity(m)); j >= 0)
    throw InputError("comodule: unit does not act as identity, witness m" + std::to_string(j));
  for (int a = 0; a < c.dl; ++a)
    for (int b = 0; b < c.dl; ++b)
      if (int j = (M.right_action[b] * M.right_action[a]).first_difference(act_by(P.A_l.mul(a, b))); j >= 0)
        throw InputError("comodule: action not associative, witness (m,a,b)=(" + std::to_string(j) + "," +
                         std::to_string(a) + "," + std::to_string(b) + ")");

  auto space = [&](int n) {
    if (n == 0) return TensorSpace::free_slots({m});
    Junction J;
    J.base_dim = c.dl;
    for (int a = 0; a < c.dl; ++a) {
      J.right_on_prev.push_back(M.right_action[a]);
      J.left_on_next.push_back(P.H.left_mult(P.s_l.col(a)));
    }
    std::vector<int> dims{m};
    std::vector<Junction> js{J};
    for (int k = 0; k < n; ++k) dims.push_back(c.d);
    for (int k = 1; k < n; ++k) js.push_back(c.ops.junction_left());
    return TensorSpace(dims, js);
  };
  auto coact = [&](const Word& w) {
    Tensor out;
    for (const auto& [idx, x] : M.coaction.col(letter(w, 0)).entries())
      add_word(out, to_letter(idx / c.d) + (to_letter(idx % c.d) + w.substr(1)), x);
    return out;
  };
  std::vector<TensorSpace> sp;
  for (int n = 0; n <= n_max + 1; ++n) sp.push_back(space(n));

  // counit and coassociativity, checked in M ⊗ H and M ⊗ H ⊗ H
  {
    LinearMap counit = induce(
        [&](const Word& w) {
          Tensor out;
          for (const auto& [idx, x] : M.coaction.col(letter(w, 0)).entries())
            add_to(out, from_vec(act_by(P.eps_l.col(idx % c.d)).col(idx / c.d)), x);
          return out;
        },
        sp[0], sp[0]);
    if (int j = counit.first_difference(LinearMap::identity(m)); j >= 0)
      throw InputError("comodule: counit axiom fails, witness m" + std::to_string(j));
    TensorSpace s2 = n_max + 1 >= 2 ? sp[2] : space(2);
    LinearMap lhs = induce([&](const Word& w) { return apply_op(coact, coact(w)); }, sp[0], s2, false);
    LinearMap rhs = induce([&](const Word& w) { return c.ops.expand_slot(coact(w), 1, P.Delta_l); }, sp[0], s2, false);
    if (int j = lhs.first_difference(rhs); j >= 0)
      throw InputError("comodule: coaction not coassociative, witness m" + std::to_string(j));
  }

  std::vector<LinearMap> maps;
  for (int n = 0; n <= n_max; ++n)
    maps.push_back(induce(
        [&, n](const Word& w) {
          Tensor out = coact(w);
          for (int i = 1; i <= n; ++i) add_to(out, c.ops.expand_slot(single(w), i, P.Delta_l), sgn(i));
          add_to(out, c.ops.insert_slot(single(w), n + 1, c.one), sgn(n + 1));
          return out;
        },
        sp[n], sp[n + 1]));
  auto dims = homology_dims(ChainComplexData::cochain(std::move(maps), sp[n_max + 1].dim()));
  dims.resize(n_max + 1);
  return dims;
}

std::vector<int> homology_with_coefficients(const HopfAlgebroidPresentation& P, const ModuleData& N, int n_max) {
  Ctx c(P);
  c.Sinv();
  const int m = N.dim;
  if (static_cast<int>(N.action.size()) != c.d) throw InputError("module: one action matrix per basis element of H expected");
  for (const auto& a : N.action)
    if (a.rows() != m || a.cols() != m) throw InputError("module: action matrix has wrong shape");
  auto act_by = [&](const Vec& h) {
    LinearMap f(m, m);
    for (const auto& [k, x] : h.entries()) f += x * N.action[k];
    return f;
  };
  if (int j = act_by(P.H.unit).first_difference(LinearMap::identity(m)); j >= 0)
    throw InputError("module: unit does not act as identity, witness x" + std::to_string(j));
  for (int h = 0; h < c.d; ++h)
    for (int k = 0; k < c.d; ++k)
      if (int j = (N.action[k] * N.action[h]).first_difference(act_by(P.H.mul(h, k))); j >= 0)
        throw InputError("module: action not associative, witness (x,h,k)=(" + std::to_string(j) + "," +
                         std::to_string(h) + "," + std::to_string(k) + ")");
  Junction J;
  J.base_dim = c.d;
  for (int h = 0; h < c.d; ++h) {
    J.right_on_prev.push_back(N.action[h]);
    J.left_on_next.push_back(P.H.left_mult(e(h)));
  }
  std::vector<TensorSpace> sp;
  for (int n = 0; n <= n_max + 1; ++n) {
    std::vector<int> dims{m};
    std::vector<Junction> js{J};
    for (int k = 0; k <= n; ++k) dims.push_back(c.d);
    for (int k = 0; k < n; ++k) js.push_back(c.ops.junction_right_comod());
    sp.emplace_back(dims, js);
  }
  std::vector<LinearMap> maps;
  for (int n = 1; n <= n_max + 1; ++n) maps.push_back(bar_differential(c, sp[n], sp[n - 1], n, 1));
  auto dims = homology_dims(ChainComplexData::homological(std::move(maps)));
  dims.resize(n_max + 1);
  return dims;
}

// ---- invariants ----

InvariantsEmbedding invariants_embedding(const HopfAlgebroidPresentation& P, const CyclicModule& C) {
  Ctx c(P);
  c.Sinv();
  InvariantsEmbedding out;
  Check ck{out.report};
  const int top = C.top();
  CyclicModule& B = out.B;
  B.label = "B_*";
  std::vector<TensorSpace> Cn1;  // C_{n+1}
  for (int n = 0; n <= top; ++n) {
    TensorSpace base = chain_space(P, n + 1);
    std::vector<Tensor> rel;
    for (int k = 0; k < base.dim(); ++k) {
      const Word& w = base.basis_word(k);
      for (int a = 0; a < c.dr; ++a) {
        Tensor r = splice_vec(w, 0, 1, c.mul(P.s_r.col(a), letter(w, 0)));
        add_to(r, splice_vec(w, n, 1, c.mul(letter(w, n), P.s_r.col(a))), -1);
        if (!base.is_zero(r)) rel.push_back(std::move(r));
      }
    }
    B.space.push_back(base.with_relations(rel));
    Cn1.push_back(std::move(base));
  }
  B.face.resize(top + 1);
  B.degen.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    const TensorSpace& S = B.space[n];
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        B.face[n].push_back(induce(
            [&, n, i](const Word& w) {
              if (i < n) return c.ops.merge_slots(single(w), i);
              return splice_vec(w.substr(0, n), 0, 1, c.P.H.mul(letter(w, n), letter(w, 0)));
            },
            S, B.space[n - 1]));
    if (n < top)
      for (int i = 0; i <= n; ++i)
        B.degen[n].push_back(
            induce([&, i](const Word& w) { return c.ops.insert_slot(single(w), i + 1, c.one); }, S, B.space[n + 1]));
    B.t.push_back(induce([&, n](const Word& w) { return single(w.substr(n) + w.substr(0, n)); }, S, S));
    B.t_inv.push_back(induce([&](const Word& w) { return single(w.substr(1) + w.substr(0, 1)); }, S, S));
  }
  out.report.append(cyclic_identities(B));

  for (int n = 0; n <= top; ++n) {
    WordOp psi = [&, n](const Word& w) -> Tensor {
      if (n == 0) return from_vec(P.s_r.col(letter(w, 0)));
      std::map<Word, Vec> acc{{Word(), c.one}};
      for (int k = 0; k < n; ++k) {
        std::map<Word, Vec> next;
        for (const auto& [pre, v] : acc)
          for (const auto& [idx, x] : P.Delta_r.col(letter(w, k)).entries()) {
            Vec p = x * c.mul(v, idx % c.d);
            if (!p.empty()) next[pre + to_letter(idx / c.d)] += p;
          }
        acc = std::move(next);
      }
      Tensor t;
      for (const auto& [pre, v] : acc) {
        Vec sv = P.S.apply(v);
        for (const auto& [z, y] : sv.entries()) add_word(t, pre + to_letter(z), y);
      }
      return t;
    };
    out.Psi.push_back(induce(psi, C.space[n], Cn1[n]));
    out.PsiBar.push_back(induce(psi, C.space[n], B.space[n]));
    LinearMap last_face = induce([&, n](const Word& w) { return chain_face(c, n + 1, n + 1, w); }, Cn1[n], C.space[n]);
    ck.eq(deg("invariants-left-inverse", n), last_face * out.Psi[n], LinearMap::identity(C.dim(n)), &C.space[n]);
  }

  // the Burghelea form puts the inverse first: rotate once
  std::vector<LinearMap> Q;
  for (int n = 0; n <= top; ++n) Q.push_back(B.t[n] * out.PsiBar[n]);
  bool faces = true, degens = true, cyc = true;
  for (int n = 0; n <= top; ++n) {
    if (n >= 1)
      for (int i = 0; i <= n; ++i) faces = faces && Q[n - 1] * C.face[n][i] == B.face[n][i] * Q[n];
    if (n < top)
      for (int i = 0; i <= n; ++i) degens = degens && Q[n + 1] * C.degen[n][i] == B.degen[n][i] * Q[n];
    cyc = cyc && Q[n] * C.t[n] == B.t[n] * Q[n];
  }
  out.intertwines_faces = faces;
  out.intertwines_degeneracies = degens;
  out.intertwines_cyclic = cyc;
  return out;
}

// ---- (co)commutative structure ----

StructureReport structure_theorem_check(const HopfAlgebroidPresentation& P, int n_max, int prop_degree) {
  Ctx c(P);
  StructureReport out;
  out.commutative_case = P.H.is_commutative();
  out.cocommutative_case = is_cocommutative(P);
  if (!out.commutative_case && !out.cocommutative_case)
    throw NotApplicable("Hopf algebroid is neither commutative nor cocommutative");
  Check ck{out.report};
  const int top = n_max + 1;

  if (out.commutative_case) {
    CocyclicModule C = cocyclic_module(P, top);
    MixedComplex X = mixed_complex(C);
    out.report.append(X.report);
    out.hh_co = hochschild_dims(X, n_max);
    try {
      out.hc_co = cyclic_theory(X, n_max).hc;
      ck.truth("cyclic-decomposition-cochain", out.hc_co == periodic_sum(out.hh_co));
    } catch (const ParaCyclic& e) {
      ck.truth("cyclic-decomposition-cochain", false, e.what());
    }
    // τ' on Cobar^n = C^{n+1}, with δ'_i = δ_{i+1}, σ'_i = σ_{i+1}
    CocyclicModule Cb;
    Cb.label = "Cobar";
    CocyclicModule Cp = cocyclic_module(P, prop_degree + 2);
    for (int n = 0; n <= prop_degree; ++n) Cb.space.push_back(Cp.space[n + 1]);
    Cb.delta.resize(prop_degree + 1);
    Cb.sigma.resize(prop_degree + 1);
    for (int n = 0; n <= prop_degree; ++n) {
      if (n < prop_degree)
        for (int i = 0; i <= n + 1; ++i) Cb.delta[n].push_back(Cp.delta[n + 1][i + 1]);
      for (int i = 0; i < n; ++i) Cb.sigma[n].push_back(Cp.sigma[n + 1][i + 1]);
      const TensorSpace& S = Cb.space[n];
      Cb.tau.push_back(induce(
          [&, n](const Word& w) {
            Tensor inner = n == 0 ? single(Word()) : cochain_tau(c, n, w.substr(1));
            return c.act(e(letter(w, 0)), c.ops.insert_slot(inner, 0, c.one));
          },
          S, S));
    }
    auto tw = s2_twist(P, Cb.space, false, false, 1);
    out.report.append(cocyclic_identities(Cb, &tw));
  }

  if (out.cocommutative_case) {
    CyclicModule D = cyclic_module(P, top);
    MixedComplex X = mixed_complex(D);
    out.report.append(X.report);
    out.hh = hochschild_dims(X, n_max);
    try {
      out.hc = cyclic_theory(X, n_max).hc;
      ck.truth("cyclic-decomposition-chain", out.hc == periodic_sum(out.hh));
    } catch (const ParaCyclic& e) {
      ck.truth("cyclic-decomposition-chain", false, e.what());
    }
    // t' on Bar_n = C_{n+1}, with d'_i = d_{i+1}, s'_i = s_{i+1}
    CyclicModule Bb;
    Bb.label = "Bar";
    CyclicModule Dp = cyclic_module(P, prop_degree + 2);
    for (int n = 0; n <= prop_degree; ++n) Bb.space.push_back(Dp.space[n + 1]);
    Bb.face.resize(prop_degree + 1);
    Bb.degen.resize(prop_degree + 1);
    for (int n = 0; n <= prop_degree; ++n) {
      if (n >= 1)
        for (int i = 0; i <= n; ++i) Bb.face[n].push_back(Dp.face[n + 1][i + 1]);
      if (n < prop_degree)
        for (int i = 0; i <= n; ++i) Bb.degen[n].push_back(Dp.degen[n + 1][i + 1]);
      const TensorSpace& S = Bb.space[n];
      Bb.t.push_back(induce(
          [&, n](const Word& w) {
            if (n == 0) return single(w);
            // h_0 h_1^{(2)}…h_n^{(2)} ⊗ t_n(h_1^{(1)} ⊗ … ⊗ h_n^{(1)})
            std::map<Word, Vec> acc{{Word(), e(letter(w, 0))}};
            for (int k = 1; k <= n; ++k) {
              std::map<Word, Vec> next;
              for (const auto& [pre, v] : acc)
                for (const auto& [idx, x] : P.Delta_r.col(letter(w, k)).entries()) {
                  Vec p = x * c.mul(v, idx % c.d);
                  if (!p.empty()) next[pre + to_letter(idx / c.d)] += p;
                }
              acc = std::move(next);
            }
            Tensor out;
            for (const auto& [pre, v] : acc) {
              Tensor tail = chain_t(c, n, pre);
              for (const auto& [z, y] : v.entries())
                for (const auto& [u, x] : tail) add_word(out, to_letter(z) + u, x * y);
            }
            return out;
          },
          S, S));
    }
    auto tw = s2_twist(P, Bb.space, true, false, 1);
    out.report.append(cyclic_identities(Bb, &tw));
  }
  return out;
}

}  // namespace hakit
