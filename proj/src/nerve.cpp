#include "hakit/nerve.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace hakit {

GroupoidRepresentation GroupoidRepresentation::trivial(const FiniteGroupoid& G) {
  GroupoidRepresentation E;
  E.fiber.assign(G.objects, 1);
  for (int g = 0; g < G.arrows(); ++g) E.arrow.push_back(LinearMap::identity(1));
  return E;
}

GroupoidRepresentation GroupoidRepresentation::character(const FiniteGroupoid& G, const std::vector<Scalar>& values) {
  if (G.objects != 1 || static_cast<int>(values.size()) != G.arrows())
    throw InputError("character: one value per element of a one-object groupoid expected");
  GroupoidRepresentation E;
  E.fiber = {1};
  for (const auto& v : values) E.arrow.push_back(LinearMap::from_triplets(1, 1, {{0, 0, v}}));
  E.validate(G);
  return E;
}

void GroupoidRepresentation::validate(const FiniteGroupoid& G) const {
  if (static_cast<int>(fiber.size()) != G.objects || static_cast<int>(arrow.size()) != G.arrows())
    throw InputError("representation: one fiber per object and one matrix per arrow expected");
  for (int g = 0; g < G.arrows(); ++g)
    if (arrow[g].rows() != fiber[G.tgt[g]] || arrow[g].cols() != fiber[G.src[g]])
      throw InputError("representation: matrix of arrow " + std::to_string(g) + " has wrong shape");
  for (int x = 0; x < G.objects; ++x)
    if (!(arrow[G.unit[x]] == LinearMap::identity(fiber[x])))
      throw InputError("representation: unit at object " + std::to_string(x) + " does not act as identity");
  for (int g = 0; g < G.arrows(); ++g)
    for (int h = 0; h < G.arrows(); ++h)
      if (int gh = G.compose(g, h); gh >= 0 && !(arrow[gh] == arrow[g] * arrow[h]))
        throw InputError("representation: not multiplicative at (" + std::to_string(g) + "," + std::to_string(h) + ")");
}

// ---- nerve ----

NerveData nerve(const FiniteGroupoid& G, int top) {
  NerveData N;
  N.G = &G;
  N.level.resize(top + 1);
  N.index.resize(top + 1);
  for (int x = 0; x < G.objects; ++x) N.level[0].push_back({x});
  if (top >= 1)
    for (int g = 0; g < G.arrows(); ++g) N.level[1].push_back({g});
  for (int n = 2; n <= top; ++n)
    for (const auto& s : N.level[n - 1])
      for (int g = 0; g < G.arrows(); ++g)
        if (G.tgt[g] == G.src[s.back()]) {
          auto t = s;
          t.push_back(g);
          N.level[n].push_back(std::move(t));
        }
  for (int n = 0; n <= top; ++n)
    for (int k = 0; k < N.size(n); ++k) N.index[n][N.level[n][k]] = k;
  return N;
}

int NerveData::target(int n, int k) const { return n == 0 ? level[0][k][0] : G->tgt[level[n][k][0]]; }

int NerveData::face(int n, int i, int k) const {
  const auto& s = level[n][k];
  if (n == 1) return i == 0 ? G->src[s[0]] : G->tgt[s[0]];
  std::vector<int> t;
  if (i == 0) t.assign(s.begin() + 1, s.end());
  else if (i == n) t.assign(s.begin(), s.end() - 1);
  else {
    t.assign(s.begin(), s.begin() + i - 1);
    t.push_back(G->compose(s[i - 1], s[i]));
    t.insert(t.end(), s.begin() + i + 1, s.end());
  }
  return index[n - 1].at(t);
}

int NerveData::degeneracy(int n, int i, int k) const {
  const auto& s = level[n][k];
  if (n == 0) return index[1].at({G->unit[s[0]]});
  std::vector<int> t = s;
  if (i == 0) t.insert(t.begin(), G->unit[G->tgt[s[0]]]);
  else t.insert(t.begin() + i, G->unit[G->src[s[i - 1]]]);
  return index[n + 1].at(t);
}

int NerveData::cyclic(int n, int k) const {
  const auto& s = level[n][k];
  if (n == 0) return k;
  int prod = s[0];
  for (int j = 1; j < n; ++j) prod = G->compose(prod, s[j]);
  std::vector<int> t{G->inv[prod]};
  t.insert(t.end(), s.begin(), s.end() - 1);
  return index[n].at(t);
}

namespace {

LinearMap push(int rows, int cols, const std::function<int(int)>& f) {
  std::vector<std::tuple<int, int, Scalar>> t;
  for (int k = 0; k < cols; ++k) t.emplace_back(f(k), k, Scalar(1));
  return LinearMap::from_triplets(rows, cols, t);
}

void record(AxiomReport& rep, const std::string& name, bool ok, const std::string& detail = "") {
  rep.note(name, ok, "", detail);
}

void record_eq(AxiomReport& rep, const std::string& name, const LinearMap& a, const LinearMap& b) {
  int j = a.first_difference(b);
  record(rep, name, j < 0, j < 0 ? "" : "first differing basis element " + std::to_string(j));
}

std::string deg(const std::string& s, int n) { return s + "/" + std::to_string(n); }

// Simplicial and cyclic identities on the sets G_n.
void nerve_identities(const NerveData& N, AxiomReport& rep) {
  const int top = N.top();
  for (int n = 0; n <= top; ++n)
    for (int k = 0; k < N.size(n); ++k) {
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            record(rep, deg("nerve-face-face", n), N.face(n - 1, i, N.face(n, j, k)) == N.face(n - 1, j - 1, N.face(n, i, k)));
      if (n + 1 <= top) {
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + 1; ++i) {
            int lhs = N.face(n + 1, i, N.degeneracy(n, j, k));
            int rhs;
            if (i == j || i == j + 1) rhs = k;
            else if (i < j) rhs = N.degeneracy(n - 1, j - 1, N.face(n, i, k));
            else rhs = N.degeneracy(n - 1, j, N.face(n, i - 1, k));
            record(rep, deg("nerve-face-degeneracy", n), lhs == rhs);
          }
        for (int i = 1; i <= n; ++i)
          record(rep, deg("nerve-degeneracy-cyclic", n),
                 N.degeneracy(n, i, N.cyclic(n, k)) == N.cyclic(n + 1, N.degeneracy(n, i - 1, k)));
        record(rep, deg("nerve-degeneracy-cyclic", n),
               N.degeneracy(n, 0, N.cyclic(n, k)) == N.cyclic(n + 1, N.cyclic(n + 1, N.degeneracy(n, n, k))));
      }
      if (n + 2 <= top)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            record(rep, deg("nerve-degeneracy-degeneracy", n),
                   N.degeneracy(n + 1, i, N.degeneracy(n, j, k)) == N.degeneracy(n + 1, j + 1, N.degeneracy(n, i, k)));
      if (n >= 1) {
        for (int i = 1; i <= n; ++i)
          record(rep, deg("nerve-face-cyclic", n), N.face(n, i, N.cyclic(n, k)) == N.cyclic(n - 1, N.face(n, i - 1, k)));
        record(rep, deg("nerve-face-cyclic", n), N.face(n, 0, N.cyclic(n, k)) == N.face(n, n, k));
      }
      int p = k;
      for (int r = 0; r <= n; ++r) p = N.cyclic(n, p);
      record(rep, deg("nerve-cyclic-power", n), p == k);
    }
}

LinearMap words_to(const TensorSpace& S, const std::vector<std::vector<int>>& strings) {
  std::vector<Vec> cols;
  for (const auto& s : strings) {
    Word w;
    for (int g : s) w.push_back(to_letter(g));
    cols.push_back(S.project_word(w));
  }
  return LinearMap::from_columns(S.dim(), std::move(cols));
}

bool is_iso(const LinearMap& f) { return f.rows() == f.cols() && rank(f) == f.cols(); }

}  // namespace

NerveReport nerve_homology(const FiniteGroupoid& G, int N, const GroupoidRepresentation* E) {
  G.validate();
  GroupoidRepresentation triv = GroupoidRepresentation::trivial(G);
  const GroupoidRepresentation& R = E ? *E : triv;
  R.validate(G);
  NerveData Nd = nerve(G, N + 1);
  NerveReport out;
  for (int n = 0; n <= N; ++n) out.sizes.push_back(Nd.size(n));
  nerve_identities(Nd, out.report);

  // chains: Γ(G_n, τ_n^* E), basis (string, fiber vector at t(g_1))
  std::vector<std::vector<int>> off(N + 2);
  std::vector<int> dim(N + 2, 0);
  for (int n = 0; n <= N + 1; ++n)
    for (int k = 0; k < Nd.size(n); ++k) {
      off[n].push_back(dim[n]);
      dim[n] += R.fiber[Nd.target(n, k)];
    }
  std::vector<LinearMap> maps;
  for (int n = 1; n <= N + 1; ++n) {
    std::vector<std::tuple<int, int, Scalar>> t;
    for (int k = 0; k < Nd.size(n); ++k) {
      const int fd = R.fiber[Nd.target(n, k)];
      for (int i = 0; i <= n; ++i) {
        int f = Nd.face(n, i, k);
        Scalar sign = i % 2 ? -1 : 1;
        if (i == 0) {
          const LinearMap& rho = R.arrow[G.inv[Nd.level[n][k][0]]];
          for (int j = 0; j < fd; ++j)
            for (const auto& [r, x] : rho.col(j).entries()) t.emplace_back(off[n - 1][f] + r, off[n][k] + j, sign * x);
        } else {
          for (int j = 0; j < fd; ++j) t.emplace_back(off[n - 1][f] + j, off[n][k] + j, sign);
        }
      }
    }
    maps.push_back(LinearMap::from_triplets(dim[n - 1], dim[n], t));
  }
  out.homology = homology_dims(ChainComplexData::homological(std::move(maps)));
  out.homology.resize(N + 1);
  if (E) return out;

  // comparison with the Hopf-cyclic module of the groupoid algebra
  HopfAlgebroidPresentation P = groupoid_algebra(G);
  CyclicModule D = cyclic_module(P, N);
  std::vector<LinearMap> Om;  // ℚ[G_n] -> C_n
  for (int n = 0; n <= N; ++n) {
    Om.push_back(words_to(D.space[n], Nd.level[n]));
    record(out.report, deg("nerve-chain-iso", n), is_iso(Om[n]));
  }
  for (int n = 0; n <= N; ++n) {
    const int sz = Nd.size(n);
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        record_eq(out.report, deg("nerve-pushforward-face", n), D.face[n][i] * Om[n],
                  Om[n - 1] * push(Nd.size(n - 1), sz, [&](int k) { return Nd.face(n, i, k); }));
    if (n < N)
      for (int i = 0; i <= n; ++i)
        record_eq(out.report, deg("nerve-pushforward-degeneracy", n), D.degen[n][i] * Om[n],
                  Om[n + 1] * push(Nd.size(n + 1), sz, [&](int k) { return Nd.degeneracy(n, i, k); }));
    record_eq(out.report, deg("nerve-pushforward-cyclic", n), D.t[n] * Om[n],
              Om[n] * push(sz, sz, [&](int k) { return Nd.cyclic(n, k); }));
  }

  // Hopf–Galois map as push-forward of (g_1, …, g_n) ↦ (g_1, g_1g_2, …, g_1⋯g_n)
  CocyclicModule C = cocyclic_module(P, N);
  HopfGalois HG = hopf_galois(P, C, D);
  for (int n = 1; n <= N; ++n) {
    std::vector<std::vector<int>> images;
    for (const auto& s : Nd.level[n]) {
      std::vector<int> im{s[0]};
      for (int j = 1; j < n; ++j) im.push_back(G.compose(im.back(), s[j]));
      images.push_back(std::move(im));
    }
    record_eq(out.report, deg("galois-pushforward", n), HG.phi[n] * Om[n], words_to(C.space[n], images));
  }
  return out;
}

ModuleData representation_module(const FiniteGroupoid& G, const GroupoidRepresentation& E) {
  E.validate(G);
  std::vector<int> off(G.objects, 0);
  int total = 0;
  for (int x = 0; x < G.objects; ++x) {
    off[x] = total;
    total += E.fiber[x];
  }
  ModuleData M;
  M.dim = total;
  for (int g = 0; g < G.arrows(); ++g) {
    const LinearMap& rho = E.arrow[G.inv[g]];  // E_{t(g)} -> E_{s(g)}
    std::vector<std::tuple<int, int, Scalar>> t;
    for (int j = 0; j < E.fiber[G.tgt[g]]; ++j)
      for (const auto& [r, x] : rho.col(j).entries()) t.emplace_back(off[G.src[g]] + r, off[G.tgt[g]] + j, x);
    M.action.push_back(LinearMap::from_triplets(total, total, t));
  }
  return M;
}

BurgheleaReport burghelea_compare(const FiniteGroupoid& G, int N) {
  G.validate();
  BurgheleaReport out;
  NerveData Nd = nerve(G, N + 1);
  // closed strings (g_0, …, g_n): composable with t(g_0) = s(g_n)
  std::vector<std::vector<std::vector<int>>> Bn(N + 1);
  std::vector<std::map<std::vector<int>, int>> idx(N + 1);
  for (int n = 0; n <= N; ++n) {
    for (const auto& s : Nd.level[n + 1])
      if (G.tgt[s.front()] == G.src[s.back()]) {
        idx[n][s] = static_cast<int>(Bn[n].size());
        Bn[n].push_back(s);
      }
    out.closed_strings.push_back(static_cast<int>(Bn[n].size()));
  }
  auto bface = [&](int n, int i, int k) {
    const auto& s = Bn[n][k];
    std::vector<int> t;
    if (i < n) {
      t.assign(s.begin(), s.begin() + i);
      t.push_back(G.compose(s[i], s[i + 1]));
      t.insert(t.end(), s.begin() + i + 2, s.end());
    } else {
      t.push_back(G.compose(s[n], s[0]));
      t.insert(t.end(), s.begin() + 1, s.end() - 1);
    }
    return idx[n - 1].at(t);
  };
  auto bdegen = [&](int n, int i, int k) {
    std::vector<int> t = Bn[n][k];
    int u = i < n ? G.unit[G.tgt[t[i + 1]]] : G.unit[G.src[t[n]]];
    t.insert(t.begin() + i + 1, u);
    return idx[n + 1].at(t);
  };
  auto bcyc = [&](int n, int k) {
    std::vector<int> t = Bn[n][k];
    std::rotate(t.begin(), t.end() - 1, t.end());
    return idx[n].at(t);
  };

  HopfAlgebroidPresentation P = groupoid_algebra(G);
  CyclicModule D = cyclic_module(P, N);
  InvariantsEmbedding IE = invariants_embedding(P, D);
  out.report.append(IE.report);
  const CyclicModule& B = IE.B;
  std::vector<LinearMap> OmB, OmC;
  for (int n = 0; n <= N; ++n) {
    out.invariant_dims.push_back(B.dim(n));
    OmB.push_back(words_to(B.space[n], Bn[n]));
    OmC.push_back(words_to(D.space[n], Nd.level[n]));
    record(out.report, deg("closed-string-iso", n), is_iso(OmB[n]));
  }
  for (int n = 0; n <= N; ++n) {
    const int sz = static_cast<int>(Bn[n].size());
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        record_eq(out.report, deg("closed-string-face", n), B.face[n][i] * OmB[n],
                  OmB[n - 1] * push(static_cast<int>(Bn[n - 1].size()), sz, [&](int k) { return bface(n, i, k); }));
    if (n < N)
      for (int i = 0; i <= n; ++i)
        record_eq(out.report, deg("closed-string-degeneracy", n), B.degen[n][i] * OmB[n],
                  OmB[n + 1] * push(static_cast<int>(Bn[n + 1].size()), sz, [&](int k) { return bdegen(n, i, k); }));
    record_eq(out.report, deg("closed-string-cyclic", n), B.t[n] * OmB[n],
              OmB[n] * push(sz, sz, [&](int k) { return bcyc(n, k); }));
    // (g_1, …, g_n) ↦ ((g_1⋯g_n)^{-1}, g_1, …, g_n)
    std::vector<std::vector<int>> images;
    for (const auto& s : Nd.level[n]) {
      if (n == 0) {
        images.push_back({G.unit[s[0]]});
        continue;
      }
      int prod = s[0];
      for (int j = 1; j < n; ++j) prod = G.compose(prod, s[j]);
      std::vector<int> im{G.inv[prod]};
      im.insert(im.end(), s.begin(), s.end());
      images.push_back(std::move(im));
    }
    record_eq(out.report, deg("closed-string-embedding", n), B.t[n] * IE.PsiBar[n] * OmC[n], words_to(B.space[n], images));
  }
  out.cyclic_morphism = IE.intertwines_faces && IE.intertwines_degeneracies && IE.intertwines_cyclic;
  record(out.report, "closed-string-cyclic-morphism", out.cyclic_morphism);
  return out;
}

}  // namespace hakit
