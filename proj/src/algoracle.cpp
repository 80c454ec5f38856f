#include "hakit/algoracle.hpp"

#include <string>
#include <tuple>

#include "hakit/cyclic.hpp"
#include "hakit/examples.hpp"
#include "hakit/tensor.hpp"

namespace hakit {

namespace {

using Triplets = std::vector<std::tuple<int, int, Scalar>>;

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<int> digits(int idx, int m, int len) {
  std::vector<int> x(len);
  for (int k = len - 1; k >= 0; --k) {
    x[k] = idx % m;
    idx /= m;
  }
  return x;
}

// Mixed-radix index of a tuple.
int encode(const std::vector<int>& x, int m) {
  int idx = 0;
  for (int v : x) idx = idx * m + v;
  return idx;
}

// Sum of c * e_(x with slot `at` set to j) over the entries of v, into column col.
void put_slot(Triplets& out, std::vector<int> x, int at, const Vec& v, int m, int col, const Scalar& c = 1) {
  for (const auto& [j, a] : v.entries()) {
    x[at] = j;
    out.emplace_back(encode(x, m), col, c * a);
  }
}

LinearMap scaled_map(const Scalar& c, const LinearMap& f) { return c * f; }

// Places block f at (row_off, col_off).
void put_block(Triplets& out, const LinearMap& f, int row_off, int col_off) {
  for (const auto& [r, c, v] : f.triplets()) out.emplace_back(r + row_off, c + col_off, v);
}

}  // namespace

AlgebraCyclicModule algebra_cyclic_module(const AlgebraPresentation& A, int top) {
  AlgebraCyclicModule M;
  const int m = A.dim;
  M.m = m;
  for (int n = 0; n <= top; ++n) M.dims.push_back(ipow(m, n + 1));
  M.face.resize(top + 1);
  M.degen.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    const int len = n + 1, dim = M.dims[n];
    if (n >= 1) {
      for (int i = 0; i <= n; ++i) {
        Triplets tr;
        for (int col = 0; col < dim; ++col) {
          std::vector<int> x = digits(col, m, len);
          std::vector<int> y;
          if (i < n) {
            y.assign(x.begin(), x.begin() + i + 1);
            y.insert(y.end(), x.begin() + i + 2, x.end());
            put_slot(tr, y, i, A.mul(x[i], x[i + 1]), m, col);
          } else {
            y.assign(x.begin(), x.end() - 1);
            put_slot(tr, y, 0, A.mul(x[n], x[0]), m, col);
          }
        }
        M.face[n].push_back(LinearMap::from_triplets(M.dims[n - 1], dim, tr));
      }
    }
    if (n < top) {
      for (int i = 0; i <= n; ++i) {
        Triplets tr;
        for (int col = 0; col < dim; ++col) {
          std::vector<int> x = digits(col, m, len);
          x.insert(x.begin() + i + 1, 0);
          put_slot(tr, x, i + 1, A.unit, m, col);
        }
        M.degen[n].push_back(LinearMap::from_triplets(M.dims[n + 1], dim, tr));
      }
    }
    Triplets tr;
    for (int col = 0; col < dim; ++col) {
      std::vector<int> x = digits(col, m, len);
      std::vector<int> y{x.back()};
      y.insert(y.end(), x.begin(), x.end() - 1);
      tr.emplace_back(encode(y, m), col, 1);
    }
    M.t.push_back(LinearMap::from_triplets(dim, dim, tr));
  }
  return M;
}

AxiomReport algebra_cyclic_identities(const AlgebraCyclicModule& M) {
  AxiomReport rep;
  auto at = [](int n) { return "[n=" + std::to_string(n) + "]"; };
  auto note_eq = [&](const std::string& name, const LinearMap& f, const LinearMap& g, int n) {
    rep.note(name, f == g, at(n), f == g ? "" : "first differing basis element " + std::to_string(f.first_difference(g)));
  };
  for (int n = 0; n <= M.top(); ++n) {
    note_eq("CyclicPower", M.t[n].pow(n + 1), LinearMap::identity(M.dims[n]), n);
    if (n >= 2)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          note_eq("FaceFace", M.face[n - 1][i] * M.face[n][j], M.face[n - 1][j - 1] * M.face[n][i], n);
    if (n >= 1)
      for (int i = 1; i <= n; ++i)
        note_eq("FaceCyclic", M.face[n][i] * M.t[n], M.t[n - 1] * M.face[n][i - 1], n);
    if (n >= 1) note_eq("FaceCyclic", M.face[n][0] * M.t[n], M.face[n][n], n);
    if (n < M.top()) {
      for (int i = 0; i <= n; ++i) {
        note_eq("FaceDegeneracy", M.face[n + 1][i] * M.degen[n][i], LinearMap::identity(M.dims[n]), n);
        note_eq("FaceDegeneracy", M.face[n + 1][i + 1] * M.degen[n][i], LinearMap::identity(M.dims[n]), n);
        for (int j = 0; j <= n + 1; ++j) {
          if (j < i && n >= 1)
            note_eq("FaceDegeneracy", M.face[n + 1][j] * M.degen[n][i], M.degen[n - 1][i - 1] * M.face[n][j], n);
          if (j > i + 1 && n >= 1)
            note_eq("FaceDegeneracy", M.face[n + 1][j] * M.degen[n][i], M.degen[n - 1][i] * M.face[n][j - 1], n);
        }
        if (i >= 1) note_eq("DegeneracyCyclic", M.degen[n][i] * M.t[n], M.t[n + 1] * M.degen[n][i - 1], n);
      }
      note_eq("DegeneracyCyclic", M.degen[n][0] * M.t[n], M.t[n + 1].pow(2) * M.degen[n][n], n);
      if (n + 1 < M.top())
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            note_eq("DegeneracyDegeneracy", M.degen[n + 1][i] * M.degen[n][j], M.degen[n + 1][j + 1] * M.degen[n][i], n);
    }
  }
  return rep;
}

AlgebraHomology algebra_cyclic_homology(const AlgebraPresentation& A, int n_max) {
  const int top = n_max + 1;
  AlgebraCyclicModule M = algebra_cyclic_module(A, top);
  auto sgn = [](int k) { return k % 2 ? Scalar(-1) : Scalar(1); };
  // b, b' on C_q; lambda = (-1)^q t.
  std::vector<LinearMap> b(top + 1), bp(top + 1), lam(top + 1), Nq(top + 1);
  for (int q = 0; q <= top; ++q) {
    lam[q] = scaled_map(sgn(q), M.t[q]);
    LinearMap acc = LinearMap::identity(M.dims[q]), cur = acc;
    for (int i = 1; i <= q; ++i) {
      cur = lam[q] * cur;
      acc += cur;
    }
    Nq[q] = acc;
    if (q == 0) continue;
    b[q] = LinearMap(M.dims[q - 1], M.dims[q]);
    bp[q] = LinearMap(M.dims[q - 1], M.dims[q]);
    for (int i = 0; i <= q; ++i) {
      b[q] += scaled_map(sgn(i), M.face[q][i]);
      if (i < q) bp[q] += scaled_map(sgn(i), M.face[q][i]);
    }
  }

  std::vector<LinearMap> hmaps;
  for (int q = 1; q <= top; ++q) hmaps.push_back(b[q]);
  AlgebraHomology out;
  out.hh = homology_dims(ChainComplexData::homological(hmaps));
  out.hh.resize(n_max + 1);

  // Tot_k = ⊕_{p=0..k} column p in row q = k - p.
  auto offset = [&](int k, int p) {
    int off = 0;
    for (int r = 0; r < p; ++r) off += M.dims[k - r];
    return off;
  };
  auto tot_dim = [&](int k) { return offset(k, k + 1); };
  std::vector<LinearMap> tmaps;
  for (int k = 1; k <= top; ++k) {
    Triplets tr;
    for (int p = 0; p <= k; ++p) {
      const int q = k - p, col = offset(k, p);
      if (q >= 1) put_block(tr, p % 2 ? scaled_map(-1, bp[q]) : b[q], offset(k - 1, p), col);
      if (p >= 1) {
        LinearMap h = p % 2 ? LinearMap::identity(M.dims[q]) - lam[q] : Nq[q];
        put_block(tr, h, offset(k - 1, p - 1), col);
      }
    }
    tmaps.push_back(LinearMap::from_triplets(tot_dim(k - 1), tot_dim(k), tr));
  }
  ChainComplexData tot = ChainComplexData::homological(tmaps);
  tot.validate();
  out.hc = homology_dims(tot);
  out.hc.resize(n_max + 1);
  return out;
}

OracleComparison compare_with_enveloping(const AlgebraPresentation& A, int n_max) {
  OracleComparison out;
  const int m = A.dim, top = n_max + 1;
  out.oracle = algebra_cyclic_homology(A, n_max);
  AlgebraCyclicModule O = algebra_cyclic_module(A, top);
  out.report.append(algebra_cyclic_identities(O));

  HopfAlgebroidPresentation P = enveloping(A);
  CyclicModule D = cyclic_module(P, top);
  MixedComplex Dm = mixed_complex(D);
  CyclicTable tab = cyclic_theory(Dm, n_max);
  out.hh = tab.hh;
  out.hc = tab.hc;

  std::vector<LinearMap> iota;
  for (int n = 0; n <= top; ++n) {
    Triplets tr;
    const TensorSpace& S = D.space[n];
    for (int col = 0; col < O.dims[n]; ++col) {
      std::vector<int> x = digits(col, m, n + 1);
      Tensor T;
      if (n == 0) {
        T = single(word_of({x[0]}));
      } else {
        std::map<Word, Scalar> acc{{Word(), Scalar(1)}};
        for (int k = 1; k < n; ++k) {
          std::map<Word, Scalar> next;
          for (const auto& [w, c] : acc)
            for (const auto& [u, a] : A.unit.entries()) next[w + to_letter(x[k] * m + u)] += c * a;
          acc = std::move(next);
        }
        for (const auto& [w, c] : acc) add_word(T, w + to_letter(x[n] * m + x[0]), c);
      }
      const Vec img = S.project(T);
      for (const auto& [r, v] : img.entries()) tr.emplace_back(r, col, v);
    }
    iota.push_back(LinearMap::from_triplets(S.dim(), O.dims[n], tr));
  }

  auto at = [](int n) { return "[n=" + std::to_string(n) + "]"; };
  auto note_eq = [&](const std::string& name, const LinearMap& f, const LinearMap& g, const std::string& wit) {
    bool ok = f == g;
    out.report.note(name, ok, wit, ok ? "" : "first differing basis element " + std::to_string(f.first_difference(g)));
  };
  for (int n = 0; n <= top; ++n) {
    bool bij = iota[n].rows() == iota[n].cols() && rank(iota[n]) == iota[n].cols();
    out.report.note("identification-bijective", bij, at(n),
                    bij ? "" : std::to_string(iota[n].cols()) + " -> " + std::to_string(iota[n].rows()));
    if (!bij) continue;
    note_eq("cyclic", iota[n] * O.t[n], D.t[n] * iota[n], at(n));
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        note_eq("faces", iota[n - 1] * O.face[n][i], D.face[n][i] * iota[n], at(n) + " i=" + std::to_string(i));
    if (n < top)
      for (int i = 0; i <= n; ++i)
        note_eq("degeneracies", iota[n + 1] * O.degen[n][i], D.degen[n][i] * iota[n], at(n) + " i=" + std::to_string(i));
  }
  auto dims_text = [](const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "(" + s + ")";
  };
  out.report.note("HH-dims", out.hh == out.oracle.hh, "", dims_text(out.hh) + " vs " + dims_text(out.oracle.hh));
  out.report.note("HC-dims", out.hc == out.oracle.hc, "", dims_text(out.hc) + " vs " + dims_text(out.oracle.hc));
  return out;
}

}  // namespace hakit
