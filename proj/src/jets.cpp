#include "hakit/jets.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace hakit {

namespace {

LieRinehartData zero_connection(LieRinehartData g) {
  if (g.base.dim != 1) throw InputError("jets: the Lie algebra must be over the ground field");
  for (const auto& row : g.anchor)
    for (const auto& v : row)
      if (!v.empty()) throw InputError("jets: the anchor must vanish over the ground field");
  for (auto& e : g.eps_r) e = Vec();
  return g;
}

}  // namespace

JetTruncation::JetTruncation(const LieRinehartData& g, int p) : p_(p), U_(zero_connection(g), std::max(p, 1)) {
  if (p < 1 || p > 4) throw InputError("jet order must be between 1 and 4");
  const int d = dim();
  prod_.assign(d * d, Vec());
  for (int a = 0; a < d; ++a)
    for (const auto& [w, c] : U_.delta_l(a)) prod_[letter(w, 0) * d + letter(w, 1)] += Vec::unit(a, c);
  cop_.assign(d, Tensor());
  for (int b = 0; b < d; ++b)
    for (int c = 0; c < d; ++c) {
      if (degree(b) + degree(c) > p_) continue;
      const Vec bc = U_.mul(b, c);
      for (const auto& [a, x] : bc.entries()) add_word(cop_[a], word_of({b, c}), x);
    }
  std::vector<std::tuple<int, int, Scalar>> trip;
  for (int a = 0; a < d; ++a) {
    // S_U(X^α) from the translation map: Σ ε_l(D_+) D_-
    std::map<int, Scalar> v;
    for (const auto& [w, c] : U_.translation(a))
      if (letter(w, 0) == 0) v[letter(w, 1)] += c;
    for (const auto& [b, c] : v)
      if (c != 0) trip.emplace_back(a, b, c);
  }
  S_ = LinearMap::from_triplets(d, d, trip);
}

Vec JetTruncation::mul(const Vec& x, const Vec& y) const {
  std::map<int, Scalar> acc;
  for (const auto& [i, a] : x.entries())
    for (const auto& [j, b] : y.entries())
      for (const auto& [k, c] : product(i, j).entries()) acc[k] += a * b * c;
  return Vec::from_map(acc);
}

Scalar JetTruncation::pair(const Vec& phi, const Vec& D) const {
  Scalar s = 0;
  for (const auto& [i, c] : D.entries()) s += c * phi.at(i);
  return s;
}

Vec JetTruncation::act1(int D, int phi) const {
  std::map<int, Scalar> acc;
  for (int a = 0; a < dim(); ++a) {
    if (degree(a) + degree(D) > p_) continue;
    Scalar c = U_.mul(a, D).at(phi);
    if (c != 0) acc[a] = c;
  }
  return Vec::from_map(acc);
}

Vec JetTruncation::act2(int D, int phi) const {
  std::map<int, Scalar> acc;
  for (int a = 0; a < dim(); ++a) {
    if (degree(a) + degree(D) > p_) continue;
    Scalar c = 0;
    for (const auto& [w, x] : U_.translation(D))
      if (letter(w, 0) == 0) c += x * U_.mul(letter(w, 1), a).at(phi);
    if (c != 0) acc[a] = c;
  }
  return Vec::from_map(acc);
}

namespace {

int word_degree(const JetTruncation& J, const Word& w) {
  int s = 0;
  for (std::size_t k = 0; k < w.size(); ++k) s += J.degree(letter(w, k));
  return s;
}

Tensor truncate(const JetTruncation& J, const Tensor& t) {
  Tensor out;
  for (const auto& [w, c] : t)
    if (word_degree(J, w) <= J.order()) out.emplace(w, c);
  return out;
}

std::string jet_word(const JetTruncation& J, const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " ⊗ " : "") + J.label(letter(w, k));
  return w.empty() ? "1" : s;
}

std::string tensor_text(const JetTruncation& J, const Tensor& t) {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t) {
    os << (first ? "" : " + ") << format_scalar(c) << "*(" << jet_word(J, w) << ")";
    first = false;
  }
  return os.str();
}

void note_eq(AxiomReport& rep, const JetTruncation& J, const std::string& name, const std::string& witness,
             Tensor lhs, const Tensor& rhs) {
  add_to(lhs, rhs, -1);
  lhs = truncate(J, lhs);
  rep.note(name, lhs.empty(), witness, lhs.empty() ? "" : tensor_text(J, lhs));
}

Tensor vec1(const Vec& v) { return from_vec(v); }

Tensor leg_map(const Tensor& t, std::size_t pos, const std::function<Vec(int)>& f) {
  Tensor out;
  for (const auto& [w, c] : t) {
    Vec v = f(letter(w, pos));
    for (const auto& [k, x] : v.entries()) {
      Word u = w;
      u[pos] = to_letter(k);
      add_word(out, u, c * x);
    }
  }
  return out;
}

Scalar binomial(int n, int k) {
  Scalar r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

AxiomReport jet_axiom_check(const JetTruncation& J) {
  AxiomReport rep;
  const int d = J.dim(), p = J.order();
  const auto& U = J.enveloping();
  const int r = U.data().rank();
  const LinearMap& S = J.antipode();
  auto e = [](int a) { return Vec::unit(a); };
  auto L = [&](int a) { return J.label(a); };

  for (int b = 0; b < d; ++b)
    for (int c = 0; c < d; ++c) {
      const std::string w = "(" + L(b) + ", " + L(c) + ")";
      Vec expect;
      if (J.degree(b) + J.degree(c) <= p) {
        Mono m = U.monomials()[b];
        const Mono& mc = U.monomials()[c];
        m.insert(m.end(), mc.begin(), mc.end());
        std::sort(m.begin(), m.end());
        Scalar coef = 1;
        for (int i = 0; i < r; ++i) {
          auto cnt = [&](const Mono& x) { return static_cast<int>(std::count(x.begin(), x.end(), i)); };
          coef *= binomial(cnt(m), cnt(U.monomials()[b]));
        }
        expect = Vec::unit(U.mono_index(m), coef);
      }
      note_eq(rep, J, "SymmetricAlgebra", w, vec1(J.product(b, c)), vec1(expect));
      note_eq(rep, J, "Commutative", w, vec1(J.product(b, c)), vec1(J.product(c, b)));
      for (int x = 0; x < d; ++x)
        note_eq(rep, J, "Associative", "(" + L(b) + ", " + L(c) + ", " + L(x) + ")",
                vec1(J.mul(J.product(b, c), e(x))), vec1(J.mul(e(b), J.product(c, x))));
      note_eq(rep, J, "CounitMult", w, single("", J.counit(J.product(b, c))),
              single("", J.counit(e(b)) * J.counit(e(c))));
      Tensor lhs;
      for (const auto& [a, x] : J.product(b, c).entries()) add_to(lhs, J.coproduct(a), x);
      Tensor rhs;
      for (const auto& [w1, c1] : J.coproduct(b))
        for (const auto& [w2, c2] : J.coproduct(c)) {
          Vec l = J.product(letter(w1, 0), letter(w2, 0)), rr = J.product(letter(w1, 1), letter(w2, 1));
          for (const auto& [i, xi] : l.entries())
            for (const auto& [j, xj] : rr.entries()) add_word(rhs, word_of({i, j}), c1 * c2 * xi * xj);
        }
      note_eq(rep, J, "MultDelta", w, lhs, rhs);
      note_eq(rep, J, "SHom", w, vec1(S.apply(J.product(b, c))), vec1(J.mul(S.col(b), S.col(c))));
    }
  note_eq(rep, J, "Unit", L(0), vec1(J.product(0, 0)), vec1(e(0)));

  for (int a = 0; a < d; ++a) {
    const std::string w = L(a);
    note_eq(rep, J, "Unit", w, vec1(J.product(0, a)), vec1(e(a)));
    Tensor l3, r3;
    for (const auto& [w1, c1] : J.coproduct(a)) {
      add_to(l3, tensor_product(J.coproduct(letter(w1, 0)), single(w1.substr(1))), c1);
      add_to(r3, tensor_product(single(w1.substr(0, 1)), J.coproduct(letter(w1, 1))), c1);
    }
    note_eq(rep, J, "CoAssoc", w, l3, r3);
    Vec cl, cr, apl, apr;
    for (const auto& [w1, c1] : J.coproduct(a)) {
      if (letter(w1, 0) == 0) cl += Vec::unit(letter(w1, 1), c1);
      if (letter(w1, 1) == 0) cr += Vec::unit(letter(w1, 0), c1);
      apl.axpy(c1, J.mul(S.col(letter(w1, 0)), e(letter(w1, 1))));
      apr.axpy(c1, J.mul(e(letter(w1, 0)), S.col(letter(w1, 1))));
    }
    note_eq(rep, J, "CoUnitLeft", w, vec1(cl), vec1(e(a)));
    note_eq(rep, J, "CoUnitRight", w, vec1(cr), vec1(e(a)));
    Vec unit_eps = J.counit(e(a)) == 0 ? Vec() : Vec::unit(0, J.counit(e(a)));
    note_eq(rep, J, "TwAp-left", w, vec1(apl), vec1(unit_eps));
    note_eq(rep, J, "TwAp-right", w, vec1(apr), vec1(unit_eps));
    note_eq(rep, J, "SInvolutive", w, vec1(S.apply(S.col(a))), vec1(e(a)));
    // (Sφ)(D) = φ(S_U D) with the anti-multiplicative antipode of U(g)
    Vec via_u;
    for (int x = 0; x < d; ++x) {
      Scalar v = U.antipode(x).at(a);
      if (v != 0) via_u.push_back(x, v);
    }
    note_eq(rep, J, "AntipodeFormula", w, vec1(S.col(a)), vec1(via_u));
  }
  note_eq(rep, J, "SUnit", L(0), vec1(S.col(0)), vec1(e(0)));
  rep.append(jet_module_coproduct_check(J));
  return rep;
}

AxiomReport jet_module_coproduct_check(const JetTruncation& J, bool literal_legs) {
  AxiomReport rep;
  const int d = J.dim(), p = J.order();
  for (int D = 0; D < d; ++D)
    for (int phi = 0; phi < d; ++phi) {
      const std::string w = "(" + J.enveloping().label(D) + ", " + J.label(phi) + ")";
      auto restrict_to = [&](const Tensor& t) {
        Tensor out;
        for (const auto& [x, c] : t)
          if (word_degree(J, x) + J.degree(D) <= p) out.emplace(x, c);
        return out;
      };
      for (int kind = 1; kind <= 2; ++kind) {
        auto act = [&](int f) { return kind == 1 ? J.act1(D, f) : J.act2(D, f); };
        Tensor lhs;
        const Vec acted = act(phi);
        for (const auto& [a, c] : acted.entries()) add_to(lhs, J.coproduct(a), c);
        // ·₁ lands on the second leg and ·₂ on the first unless the legs are swapped
        std::size_t leg = (kind == 1) != literal_legs ? 1 : 0;
        Tensor rhs = leg_map(J.coproduct(phi), leg, act);
        Tensor diff = restrict_to(lhs);
        add_to(diff, restrict_to(rhs), -1);
        std::string name = kind == 1 ? "ModuleCoproduct-1" : "ModuleCoproduct-2";
        rep.note(name, diff.empty(), w, diff.empty() ? "" : tensor_text(J, diff));
      }
    }
  return rep;
}

namespace {

struct JetChains {
  const JetTruncation& J;

  Tensor face(int n, int i, const Word& w) const {
    if (n == 1) return J.degree(letter(w, 0)) == 0 ? single("") : Tensor{};
    if (i == 0) return letter(w, 0) == 0 ? single(w.substr(1)) : Tensor{};
    if (i == n) return letter(w, n - 1) == 0 ? single(w.substr(0, n - 1)) : Tensor{};
    Tensor out;
    for (const auto& [k, c] : J.product(letter(w, i - 1), letter(w, i)).entries())
      add_word(out, w.substr(0, i - 1) + to_letter(k) + w.substr(i + 1), c);
    return out;
  }

  Tensor t(int n, const Word& w) const {
    if (n == 0) return single(w);
    std::map<Word, Vec> acc{{Word(), Vec::unit(0)}};
    for (int k = 0; k < n - 1; ++k) {
      std::map<Word, Vec> next;
      for (const auto& [pre, v] : acc)
        for (const auto& [cw, c] : J.coproduct(letter(w, k))) {
          Vec prod = c * J.mul(v, Vec::unit(letter(cw, 1)));
          if (!prod.empty()) next[pre + cw.substr(0, 1)] += prod;
        }
      acc = std::move(next);
    }
    Tensor out;
    for (const auto& [pre, v] : acc) {
      Vec head = J.antipode().apply(J.mul(v, Vec::unit(letter(w, n - 1))));
      for (const auto& [z, x] : head.entries()) add_word(out, to_letter(z) + pre, x);
    }
    return truncate(J, out);
  }

  Tensor apply(const Tensor& T, const std::function<Tensor(const Word&)>& f) const {
    Tensor out;
    for (const auto& [w, c] : T) add_to(out, f(w), c);
    return truncate(J, out);
  }

  Tensor b(int n, const Tensor& T) const {
    return apply(T, [&](const Word& w) {
      Tensor out;
      for (int i = 0; i <= n; ++i) add_to(out, face(n, i, w), i % 2 ? -1 : 1);
      return out;
    });
  }
  Tensor lambda(int n, const Tensor& T) const {
    return scaled(apply(T, [&](const Word& w) { return t(n, w); }), n % 2 ? -1 : 1);
  }
  Tensor B(int n, const Tensor& T) const {
    Tensor N, cur = T;
    for (int i = 0; i <= n; ++i) {
      add_to(N, cur);
      cur = lambda(n, cur);
    }
    Tensor s;
    for (const auto& [w, c] : N) add_word(s, w + to_letter(0), c);
    Tensor x = apply(s, [&](const Word& w) { return t(n + 1, w); });
    Tensor y = x;
    add_to(y, lambda(n + 1, x), -1);
    return y;
  }
};

using Form = std::map<std::vector<int>, Scalar>;  // value on X_I, I strictly increasing

int sort_sign(std::vector<int>& v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] == v[j + 1]) return 0;
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        s = -s;
      }
    }
  return s;
}

std::vector<std::vector<int>> subsets(int r, int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1U << r); ++mask) {
    std::vector<int> I;
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1U) I.push_back(i);
    if (static_cast<int>(I.size()) == n) out.push_back(I);
  }
  return out;
}

Scalar determinant(const std::vector<std::vector<Scalar>>& M) {
  const int n = static_cast<int>(M.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Scalar det = 0;
  do {
    std::vector<int> q = p;
    int s = sort_sign(q);
    Scalar t = s;
    for (int i = 0; i < n; ++i) t *= M[i][p[i]];
    det += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

// Wedge of one-forms evaluated as (1/n!) det, the normalisation of the HKR projection.
Form F_map(const JetTruncation& J, int n, const Tensor& T, bool alternating_sign) {
  const auto& U = J.enveloping();
  const int r = U.data().rank();
  Form out;
  for (const auto& I : subsets(r, n)) {
    Scalar v = 0;
    for (const auto& [w, c] : T) {
      std::vector<std::vector<Scalar>> M(n, std::vector<Scalar>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = J.antipode().at(U.mono_index({I[j]}), letter(w, i));
      v += c * determinant(M);
    }
    for (int k = 2; k <= n; ++k) v /= k;
    if (alternating_sign && n % 2) v = -v;
    if (v != 0) out[I] = v;
  }
  return out;
}

Form ce_differential(const JetTruncation& J, int n, const Form& w) {
  const auto& D = J.enveloping().data();
  const int r = D.rank();
  Form out;
  for (const auto& K : subsets(r, n + 1)) {
    Scalar v = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int l = 0; l < r; ++l) {
          Scalar c = D.bracket[K[i]][K[j]][l].at(0);
          if (c == 0) continue;
          std::vector<int> arg{l};
          for (int k = 0; k <= n; ++k)
            if (k != i && k != j) arg.push_back(K[k]);
          int s = sort_sign(arg);
          if (s == 0) continue;
          auto it = w.find(arg);
          if (it != w.end()) v += ((i + j) % 2 ? -1 : 1) * s * c * it->second;
        }
    if (v != 0) out[K] = v;
  }
  return out;
}

std::string form_text(const JetTruncation& J, const Form& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [I, c] : f) {
    os << (first ? "" : " + ") << format_scalar(c) << "*(";
    for (std::size_t k = 0; k < I.size(); ++k) os << (k ? "∧" : "") << J.enveloping().data().labels[I[k]] << "*";
    os << ")";
    first = false;
  }
  return os.str();
}

void words_upto(const JetTruncation& J, int n, int budget, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int a = 0; a < J.dim(); ++a)
    if (J.degree(a) <= budget) {
      cur.push_back(to_letter(a));
      words_upto(J, n, budget - J.degree(a), cur, out);
      cur.pop_back();
    }
}

}  // namespace

AxiomReport jets_F_map_check(const JetTruncation& J, int n_max, bool alternating_sign) {
  if (J.order() < n_max + 1)
    throw TruncationTooSmall("F-map check to degree " + std::to_string(n_max) + " needs jet order >= " +
                             std::to_string(n_max + 1));
  AxiomReport rep;
  JetChains C{J};
  for (int n = 0; n <= n_max + 1; ++n) {
    std::vector<Word> words;
    Word cur;
    words_upto(J, n, J.order(), cur, words);
    for (const Word& w : words) {
      const std::string wit = jet_word(J, w) + " [n=" + std::to_string(n) + "]";
      Tensor x = single(w);
      // the truncated operators still form a cyclic module
      Tensor p = x;
      for (int k = 0; k <= n; ++k) p = C.apply(p, [&](const Word& u) { return C.t(n, u); });
      Tensor dlt = p;
      add_to(dlt, x, -1);
      rep.note("JetCyclicPower", dlt.empty(), wit, dlt.empty() ? "" : tensor_text(J, dlt));
      if (n >= 2) {
        Tensor bb = C.b(n - 1, C.b(n, x));
        rep.note("JetHochschildSquare", bb.empty(), wit, bb.empty() ? "" : tensor_text(J, bb));
      }
      if (n >= 1 && n <= n_max) {
        Tensor mix = C.b(n + 1, C.B(n, x));
        add_to(mix, C.B(n - 1, C.b(n, x)));
        mix = truncate(J, mix);
        rep.note("JetMixed bB+Bb=0", mix.empty(), wit, mix.empty() ? "" : tensor_text(J, mix));
        Tensor bb2 = C.B(n + 1, C.B(n, x));
        rep.note("JetMixed B²=0", bb2.empty(), wit, bb2.empty() ? "" : tensor_text(J, bb2));
      }
      if (n >= 1 && n - 1 <= n_max) {
        Form fb = F_map(J, n - 1, C.b(n, x), alternating_sign);
        rep.note("F∘b=0", fb.empty(), wit, form_text(J, fb));
      }
      if (n <= n_max) {
        Form lhs = F_map(J, n + 1, C.B(n, x), alternating_sign);
        Form rhs = ce_differential(J, n, F_map(J, n, x, alternating_sign));
        bool ok = lhs == rhs;
        Form d = lhs;
        for (const auto& [I, c] : rhs) {
          d[I] -= c;
          if (d[I] == 0) d.erase(I);
        }
        rep.note("F∘B=d∘F", ok, wit, ok ? "" : form_text(J, d));
      }
    }
  }
  return rep;
}

}  // namespace hakit
