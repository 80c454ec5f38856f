#include "hakit/axioms.hpp"

#include <sstream>

namespace hakit {

bool AxiomReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::vector<std::string> AxiomReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : results)
    if (!r.pass) out.push_back(r.name);
  return out;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

void AxiomReport::append(const AxiomReport& o) {
  results.insert(results.end(), o.results.begin(), o.results.end());
}

void AxiomReport::note(const std::string& name, bool pass, const std::string& witness, const std::string& detail) {
  for (auto& r : results)
    if (r.name == name) {
      if (r.pass && !pass) {
        r.pass = false;
        r.witness = witness;
        r.detail = detail;
      }
      return;
    }
  AxiomResult r;
  r.name = name;
  r.pass = pass;
  if (!pass) {
    r.witness = witness;
    r.detail = detail;
  }
  results.push_back(std::move(r));
}

namespace {

std::string e(int i) { return "e" + std::to_string(i); }

std::string diff(const Vec& a, const Vec& b) {
  if (a == b) return {};
  return "lhs - rhs = " + (a - b).str();
}

class Collector {
 public:
  AxiomReport rep;

  void record(const std::string& name, const std::string& witness, const std::string& detail) {
    AxiomResult r;
    r.name = name;
    r.pass = witness.empty();
    r.witness = witness;
    r.detail = detail;
    rep.results.push_back(std::move(r));
  }

  // Runs body over basis tuples in lexicographic order; body returns a nonempty
  // difference string on failure.
  void each(const std::string& name, const std::vector<int>& dims, const std::vector<std::string>& labels,
            const std::function<std::string(const std::vector<int>&)>& body) {
    std::vector<int> idx(dims.size(), 0);
    for (int d : dims)
      if (d == 0) {
        record(name, "", "");
        return;
      }
    while (true) {
      std::string dd = body(idx);
      if (!dd.empty()) {
        std::ostringstream w;
        w << "(";
        for (std::size_t i = 0; i < idx.size(); ++i) w << (i ? "," : "") << labels[i];
        w << ")=(";
        for (std::size_t i = 0; i < idx.size(); ++i) w << (i ? "," : "") << e(idx[i]);
        w << ")";
        record(name, w.str(), dd);
        return;
      }
      int k = static_cast<int>(idx.size()) - 1;
      while (k >= 0 && ++idx[k] == dims[k]) idx[k--] = 0;
      if (k < 0) break;
    }
    record(name, "", "");
  }

  void matrices(const std::string& name, const LinearMap& lhs, const LinearMap& rhs, const std::string& label) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
      record(name, label + "=shape", "maps have different shapes");
      return;
    }
    int j = lhs.first_difference(rhs);
    if (j < 0) {
      record(name, "", "");
    } else {
      record(name, label + "=" + e(j), diff(lhs.col(j), rhs.col(j)));
    }
  }
};

struct Spaces {
  TensorSpace L2, R2, C2, L3, R3, LR3, RL3, H1, Al1, Ar1;
};

Spaces build_spaces(const HopfOps& ops) {
  Spaces s;
  const int d = ops.d;
  Junction jl = ops.junction_left(), jr = ops.junction_right_coprod();
  s.L2 = TensorSpace({d, d}, {jl});
  s.R2 = TensorSpace({d, d}, {jr});
  s.L3 = TensorSpace({d, d, d}, {jl, jl});
  s.R3 = TensorSpace({d, d, d}, {jr, jr});
  s.LR3 = TensorSpace({d, d, d}, {jl, jr});
  s.RL3 = TensorSpace({d, d, d}, {jr, jl});
  s.H1 = TensorSpace::free_slots({d});
  s.Al1 = TensorSpace::free_slots({ops.dl});
  s.Ar1 = TensorSpace::free_slots({ops.dr});
  return s;
}

Tensor delta_of(const HopfOps& ops, const LinearMap& Delta, const Vec& v) {
  Tensor t;
  for (const auto& [i, c] : v.entries()) add_to(t, ops.coproduct(Delta, i), c);
  return t;
}

// F∘Δ = rhs, after checking F descends from the coproduct's tensor space.
void coproduct_identity(Collector& col, const std::string& name, const HopfOps& ops, const LinearMap& Delta,
                        const TensorSpace& src, const TensorSpace& tgt,
                        const std::function<Tensor(int, int)>& F, const std::function<Tensor(int)>& rhs) {
  WordOp op = [&](const Word& w) { return F(letter(w, 0), letter(w, 1)); };
  Tensor bad;
  if (find_ill_defined(op, src, tgt, &bad)) {
    col.record(name, "relation " + tensor_str(bad), "left side does not vanish on the tensor relations");
    return;
  }
  col.each(name, {ops.d}, {"h"}, [&](const std::vector<int>& i) {
    Tensor lhs = apply_op(op, ops.coproduct(Delta, i[0]));
    return diff(tgt.project(lhs), tgt.project(rhs(i[0])));
  });
}

Vec ap(const LinearMap& f, const Vec& v) { return f.apply(v); }

}  // namespace

AxiomReport check_algebras(const HopfAlgebroidPresentation& P) {
  Collector col;
  const std::pair<const char*, const AlgebraPresentation*> algs[] = {{"H", &P.H}, {"A_l", &P.A_l}, {"A_r", &P.A_r}};
  for (const auto& [nm, A] : algs) {
    const AlgebraPresentation& a = *A;
    col.each(std::string("Unit(") + nm + ")", {a.dim}, {"x"}, [&](const std::vector<int>& i) {
      Vec x = Vec::unit(i[0]);
      std::string d1 = diff(a.mul(a.unit, x), x);
      return d1.empty() ? diff(a.mul(x, a.unit), x) : d1;
    });
    col.each(std::string("Assoc(") + nm + ")", {a.dim, a.dim, a.dim}, {"x", "y", "z"},
             [&](const std::vector<int>& i) {
               return diff(a.mul(a.mul(i[0], i[1]), Vec::unit(i[2])), a.mul(Vec::unit(i[0]), a.mul(i[1], i[2])));
             });
  }
  return col.rep;
}

AxiomReport check_left_bialgebroid(const HopfAlgebroidPresentation& P) {
  HopfOps ops(P);
  Spaces sp = build_spaces(ops);
  Collector col;
  const auto& H = P.H;
  const auto& A = P.A_l;
  const int d = ops.d, dl = ops.dl;

  col.each("HomS_l", {dl, dl}, {"a", "b"}, [&](const std::vector<int>& i) {
    if (i[0] == 0 && i[1] == 0) {
      std::string u = diff(ap(P.s_l, A.unit), H.unit);
      if (!u.empty()) return "unit: " + u;
    }
    return diff(ap(P.s_l, A.mul(i[0], i[1])), H.mul(P.s_l.col(i[0]), P.s_l.col(i[1])));
  });
  col.each("AntiHomT_l", {dl, dl}, {"a", "b"}, [&](const std::vector<int>& i) {
    if (i[0] == 0 && i[1] == 0) {
      std::string u = diff(ap(P.t_l, A.unit), H.unit);
      if (!u.empty()) return "unit: " + u;
    }
    return diff(ap(P.t_l, A.mul(i[0], i[1])), H.mul(P.t_l.col(i[1]), P.t_l.col(i[0])));
  });
  col.each("CommST_l", {dl, dl}, {"a", "b"}, [&](const std::vector<int>& i) {
    return diff(H.mul(P.s_l.col(i[0]), P.t_l.col(i[1])), H.mul(P.t_l.col(i[1]), P.s_l.col(i[0])));
  });
  col.matrices("BimodEps_l", P.eps_l * P.s_l, LinearMap::identity(dl), "a");
  if (col.rep.results.back().pass) col.rep.results.pop_back(), col.matrices("BimodEps_l", P.eps_l * P.t_l, LinearMap::identity(dl), "a");
  col.each("BimodDelta_l", {dl}, {"a"}, [&](const std::vector<int>& i) {
    Tensor lhs = delta_of(ops, P.Delta_l, P.s_l.col(i[0]));
    Tensor rhs = tensor_product(from_vec(P.s_l.col(i[0])), from_vec(H.unit));
    std::string d1 = diff(sp.L2.project(lhs), sp.L2.project(rhs));
    if (!d1.empty()) return "source: " + d1;
    lhs = delta_of(ops, P.Delta_l, P.t_l.col(i[0]));
    rhs = tensor_product(from_vec(H.unit), from_vec(P.t_l.col(i[0])));
    std::string d2 = diff(sp.L2.project(lhs), sp.L2.project(rhs));
    return d2.empty() ? d2 : "target: " + d2;
  });

  {
    WordOp left = [&](const Word& w) { return ops.expand_slot(single(w), 0, P.Delta_l); };
    WordOp right = [&](const Word& w) { return ops.expand_slot(single(w), 1, P.Delta_l); };
    Tensor bad;
    if (find_ill_defined(left, sp.L2, sp.L3, &bad) || find_ill_defined(right, sp.L2, sp.L3, &bad)) {
      col.record("CoAssoc_l", "relation " + tensor_str(bad), "coproduct does not descend to the balanced tensor product");
    } else {
      col.each("CoAssoc_l", {d}, {"h"}, [&](const std::vector<int>& i) {
        Tensor D = ops.coproduct_l(i[0]);
        return diff(sp.L3.project(apply_op(left, D)), sp.L3.project(apply_op(right, D)));
      });
    }
  }
  coproduct_identity(col, "CoUnitLeft_l", ops, P.Delta_l, sp.L2, sp.H1,
                     [&](int x, int y) { return from_vec(H.mul(ap(P.s_l, P.eps_l.col(x)), Vec::unit(y))); },
                     [&](int h) { return single(Word(1, to_letter(h))); });
  coproduct_identity(col, "CoUnitRight_l", ops, P.Delta_l, sp.L2, sp.H1,
                     [&](int x, int y) { return from_vec(H.mul(ap(P.t_l, P.eps_l.col(y)), Vec::unit(x))); },
                     [&](int h) { return single(Word(1, to_letter(h))); });

  col.each("Takeuchi_l", {dl, d}, {"a", "h"}, [&](const std::vector<int>& i) {
    Tensor D = ops.coproduct_l(i[1]);
    Tensor lhs = ops.slotwise_right(D, tensor_product(from_vec(P.t_l.col(i[0])), from_vec(H.unit)));
    Tensor rhs = ops.slotwise_right(D, tensor_product(from_vec(H.unit), from_vec(P.s_l.col(i[0]))));
    return diff(sp.L2.project(lhs), sp.L2.project(rhs));
  });
  col.each("MultDelta_l", {d, d}, {"h", "h'"}, [&](const std::vector<int>& i) {
    if (i[0] == 0 && i[1] == 0) {
      std::string u = diff(sp.L2.project(delta_of(ops, P.Delta_l, H.unit)),
                           sp.L2.project(tensor_product(from_vec(H.unit), from_vec(H.unit))));
      if (!u.empty()) return "unit: " + u;
    }
    Tensor lhs = delta_of(ops, P.Delta_l, H.mul(i[0], i[1]));
    Tensor rhs = ops.slotwise(ops.coproduct_l(i[0]), ops.coproduct_l(i[1]));
    return diff(sp.L2.project(lhs), sp.L2.project(rhs));
  });
  col.each("CounitMult_l", {d, d}, {"h", "h'"}, [&](const std::vector<int>& i) {
    if (i[0] == 0 && i[1] == 0) {
      std::string u = diff(ap(P.eps_l, H.unit), A.unit);
      if (!u.empty()) return "unit: " + u;
    }
    Vec h = Vec::unit(i[0]);
    Vec lhs = ap(P.eps_l, H.mul(i[0], i[1]));
    Vec viaS = ap(P.eps_l, H.mul(h, ap(P.s_l, P.eps_l.col(i[1]))));
    Vec viaT = ap(P.eps_l, H.mul(h, ap(P.t_l, P.eps_l.col(i[1]))));
    std::string d1 = diff(lhs, viaS);
    return d1.empty() ? diff(lhs, viaT) : d1;
  });
  return col.rep;
}

AxiomReport check_right_bialgebroid(const HopfAlgebroidPresentation& P) {
  HopfOps ops(P);
  Spaces sp = build_spaces(ops);
  Collector col;
  const auto& H = P.H;
  const auto& A = P.A_r;
  const int d = ops.d, dr = ops.dr;

  col.each("HomS_r", {dr, dr}, {"a", "b"}, [&](const std::vector<int>& i) {
    if (i[0] == 0 && i[1] == 0) {
      std::string u = diff(ap(P.s_r, A.unit), H.unit);
      if (!u.empty()) return "unit: " + u;
    }
    return diff(ap(P.s_r, A.mul(i[0], i[1])), H.mul(P.s_r.col(i[0]), P.s_r.col(i[1])));
  });
  col.each("AntiHomT_r", {dr, dr}, {"a", "b"}, [&](const std::vector<int>& i) {
    if (i[0] == 0 && i[1] == 0) {
      std::string u = diff(ap(P.t_r, A.unit), H.unit);
      if (!u.empty()) return "unit: " + u;
    }
    return diff(ap(P.t_r, A.mul(i[0], i[1])), H.mul(P.t_r.col(i[1]), P.t_r.col(i[0])));
  });
  col.each("CommST_r", {dr, dr}, {"a", "b"}, [&](const std::vector<int>& i) {
    return diff(H.mul(P.s_r.col(i[0]), P.t_r.col(i[1])), H.mul(P.t_r.col(i[1]), P.s_r.col(i[0])));
  });
  col.matrices("BimodEps_r", P.eps_r * P.s_r, LinearMap::identity(dr), "a");
  if (col.rep.results.back().pass) col.rep.results.pop_back(), col.matrices("BimodEps_r", P.eps_r * P.t_r, LinearMap::identity(dr), "a");
  col.each("BimodDelta_r", {dr}, {"a"}, [&](const std::vector<int>& i) {
    Tensor lhs = delta_of(ops, P.Delta_r, P.s_r.col(i[0]));
    Tensor rhs = tensor_product(from_vec(H.unit), from_vec(P.s_r.col(i[0])));
    std::string d1 = diff(sp.R2.project(lhs), sp.R2.project(rhs));
    if (!d1.empty()) return "source: " + d1;
    lhs = delta_of(ops, P.Delta_r, P.t_r.col(i[0]));
    rhs = tensor_product(from_vec(P.t_r.col(i[0])), from_vec(H.unit));
    std::string d2 = diff(sp.R2.project(lhs), sp.R2.project(rhs));
    return d2.empty() ? d2 : "target: " + d2;
  });

  {
    WordOp left = [&](const Word& w) { return ops.expand_slot(single(w), 0, P.Delta_r); };
    WordOp right = [&](const Word& w) { return ops.expand_slot(single(w), 1, P.Delta_r); };
    Tensor bad;
    if (find_ill_defined(left, sp.R2, sp.R3, &bad) || find_ill_defined(right, sp.R2, sp.R3, &bad)) {
      col.record("CoAssoc_r", "relation " + tensor_str(bad), "coproduct does not descend to the balanced tensor product");
    } else {
      col.each("CoAssoc_r", {d}, {"h"}, [&](const std::vector<int>& i) {
        Tensor D = ops.coproduct_r(i[0]);
        return diff(sp.R3.project(apply_op(left, D)), sp.R3.project(apply_op(right, D)));
      });
    }
  }
  coproduct_identity(col, "CoUnitLeft_r", ops, P.Delta_r, sp.R2, sp.H1,
                     [&](int x, int y) { return from_vec(H.mul(Vec::unit(y), ap(P.t_r, P.eps_r.col(x)))); },
                     [&](int h) { return single(Word(1, to_letter(h))); });
  coproduct_identity(col, "CoUnitRight_r", ops, P.Delta_r, sp.R2, sp.H1,
                     [&](int x, int y) { return from_vec(H.mul(Vec::unit(x), ap(P.s_r, P.eps_r.col(y)))); },
                     [&](int h) { return single(Word(1, to_letter(h))); });

  col.each("Takeuchi_r", {dr, d}, {"a", "h"}, [&](const std::vector<int>& i) {
    Tensor D = ops.coproduct_r(i[1]);
    Tensor lhs = ops.slotwise(tensor_product(from_vec(P.s_r.col(i[0])), from_vec(H.unit)), D);
    Tensor rhs = ops.slotwise(tensor_product(from_vec(H.unit), from_vec(P.t_r.col(i[0]))), D);
    return diff(sp.R2.project(lhs), sp.R2.project(rhs));
  });
  col.each("MultDelta_r", {d, d}, {"h", "h'"}, [&](const std::vector<int>& i) {
    if (i[0] == 0 && i[1] == 0) {
      std::string u = diff(sp.R2.project(delta_of(ops, P.Delta_r, H.unit)),
                           sp.R2.project(tensor_product(from_vec(H.unit), from_vec(H.unit))));
      if (!u.empty()) return "unit: " + u;
    }
    Tensor lhs = delta_of(ops, P.Delta_r, H.mul(i[0], i[1]));
    Tensor rhs = ops.slotwise(ops.coproduct_r(i[0]), ops.coproduct_r(i[1]));
    return diff(sp.R2.project(lhs), sp.R2.project(rhs));
  });
  col.each("CounitMult_r", {d, d}, {"h", "h'"}, [&](const std::vector<int>& i) {
    if (i[0] == 0 && i[1] == 0) {
      std::string u = diff(ap(P.eps_r, H.unit), A.unit);
      if (!u.empty()) return "unit: " + u;
    }
    Vec h2 = Vec::unit(i[1]);
    Vec lhs = ap(P.eps_r, H.mul(i[0], i[1]));
    Vec viaS = ap(P.eps_r, H.mul(ap(P.s_r, P.eps_r.col(i[0])), h2));
    Vec viaT = ap(P.eps_r, H.mul(ap(P.t_r, P.eps_r.col(i[0])), h2));
    std::string d1 = diff(lhs, viaS);
    return d1.empty() ? diff(lhs, viaT) : d1;
  });
  return col.rep;
}

AxiomReport check_hopf_algebroid(const HopfAlgebroidPresentation& P) {
  HopfOps ops(P);
  Spaces sp = build_spaces(ops);
  Collector col;
  const auto& H = P.H;
  const int d = ops.d, dl = ops.dl, dr = ops.dr;
  const LinearMap& S = P.S;
  const LinearMap S2 = S * S;

  col.matrices("Subr-1", P.s_l * P.eps_l * P.t_r, P.t_r, "a");
  col.matrices("Subr-2", P.t_l * P.eps_l * P.s_r, P.s_r, "a");
  col.matrices("Subr-3", P.s_r * P.eps_r * P.t_l, P.t_l, "a");
  col.matrices("Subr-4", P.t_r * P.eps_r * P.s_l, P.s_l, "a");

  {
    WordOp lhs_op = [&](const Word& w) { return ops.expand_slot(single(w), 0, P.Delta_l); };
    WordOp rhs_op = [&](const Word& w) { return ops.expand_slot(single(w), 1, P.Delta_r); };
    Tensor bad;
    if (find_ill_defined(lhs_op, sp.R2, sp.LR3, &bad) || find_ill_defined(rhs_op, sp.L2, sp.LR3, &bad)) {
      col.record("TwCoAssoc-1", "relation " + tensor_str(bad), "coproduct does not descend to the mixed tensor product");
    } else {
      col.each("TwCoAssoc-1", {d}, {"h"}, [&](const std::vector<int>& i) {
        return diff(sp.LR3.project(apply_op(lhs_op, ops.coproduct_r(i[0]))),
                    sp.LR3.project(apply_op(rhs_op, ops.coproduct_l(i[0]))));
      });
    }
  }
  {
    WordOp lhs_op = [&](const Word& w) { return ops.expand_slot(single(w), 0, P.Delta_r); };
    WordOp rhs_op = [&](const Word& w) { return ops.expand_slot(single(w), 1, P.Delta_l); };
    Tensor bad;
    if (find_ill_defined(lhs_op, sp.L2, sp.RL3, &bad) || find_ill_defined(rhs_op, sp.R2, sp.RL3, &bad)) {
      col.record("TwCoAssoc-2", "relation " + tensor_str(bad), "coproduct does not descend to the mixed tensor product");
    } else {
      col.each("TwCoAssoc-2", {d}, {"h"}, [&](const std::vector<int>& i) {
        return diff(sp.RL3.project(apply_op(lhs_op, ops.coproduct_l(i[0]))),
                    sp.RL3.project(apply_op(rhs_op, ops.coproduct_r(i[0]))));
      });
    }
  }
  col.each("AntipodeTwist", {dl, d, dr}, {"a1", "h", "a2"}, [&](const std::vector<int>& i) {
    Vec inner = H.mul(H.mul(P.t_l.col(i[0]), Vec::unit(i[1])), P.t_r.col(i[2]));
    Vec rhs = H.mul(H.mul(P.s_r.col(i[2]), S.col(i[1])), P.s_l.col(i[0]));
    return diff(ap(S, inner), rhs);
  });
  coproduct_identity(col, "TwAp-left", ops, P.Delta_l, sp.L2, sp.H1,
                     [&](int x, int y) { return from_vec(H.mul(S.col(x), Vec::unit(y))); },
                     [&](int h) { return from_vec(ap(P.s_r, P.eps_r.col(h))); });
  coproduct_identity(col, "TwAp-right", ops, P.Delta_r, sp.R2, sp.H1,
                     [&](int x, int y) { return from_vec(H.mul(Vec::unit(x), S.col(y))); },
                     [&](int h) { return from_vec(ap(P.s_l, P.eps_l.col(h))); });

  coproduct_identity(col, "Bleistift-1", ops, P.Delta_l, sp.L2, sp.R2,
                     [&](int x, int y) { return tensor_product(from_vec(S.col(y)), from_vec(S.col(x))); },
                     [&](int h) { return delta_of(ops, P.Delta_r, S.col(h)); });
  coproduct_identity(col, "Bleistift-2", ops, P.Delta_r, sp.R2, sp.L2,
                     [&](int x, int y) { return tensor_product(from_vec(S.col(y)), from_vec(S.col(x))); },
                     [&](int h) { return delta_of(ops, P.Delta_l, S.col(h)); });

  auto sinv = invert(S);
  bool have_inv = sinv.has_value();
  if (P.S_inv) {
    col.matrices("SInv", S * *P.S_inv, LinearMap::identity(d), "h");
    if (col.rep.results.back().pass) col.rep.results.pop_back(), col.matrices("SInv", *P.S_inv * S, LinearMap::identity(d), "h");
    have_inv = have_inv && col.rep.results.back().pass;
    if (col.rep.results.back().pass) sinv = *P.S_inv;
  } else {
    auto ker = kernel_basis(S);
    col.record("SInv", ker.empty() ? "" : "kernel vector " + ker.front().str(),
               ker.empty() ? "" : "antipode is not invertible");
  }

  const LinearMap& s_l = P.s_l;
  const LinearMap& t_l = P.t_l;
  const LinearMap& s_r = P.s_r;
  const LinearMap& t_r = P.t_r;
  const LinearMap& e_l = P.eps_l;
  const LinearMap& e_r = P.eps_r;
  col.matrices("SHomId-1", s_r * e_r * s_l, S * s_l, "a");
  col.matrices("SHomId-2", s_l * e_l * s_r, S * s_r, "a");
  col.matrices("SHomId-5", t_r * e_r * s_l, S * t_l, "a");
  col.matrices("SHomId-6", t_l * e_l * s_r, S * t_r, "a");
  col.matrices("SHomId-9", e_r * s_l * e_l, e_r * S, "h");
  col.matrices("SHomId-10", e_l * s_r * e_r, e_l * S, "h");

  coproduct_identity(col, "SCoUConv-1", ops, P.Delta_l, sp.L2, sp.H1,
                     [&](int x, int y) { return from_vec(H.mul(S.col(x), ap(s_l, e_l.col(y)))); },
                     [&](int h) { return from_vec(S.col(h)); });
  coproduct_identity(col, "SCoUConv-2", ops, P.Delta_r, sp.R2, sp.H1,
                     [&](int x, int y) { return from_vec(H.mul(ap(s_r, e_r.col(x)), S.col(y))); },
                     [&](int h) { return from_vec(S.col(h)); });
  coproduct_identity(col, "SCoUConv-3", ops, P.Delta_l, sp.L2, sp.H1,
                     [&](int x, int y) { return from_vec(H.mul(ap(t_l, ap(e_l, S2.col(y))), S2.col(x))); },
                     [&](int h) { return from_vec(S2.col(h)); });
  coproduct_identity(col, "SCoUConv-4", ops, P.Delta_r, sp.R2, sp.H1,
                     [&](int x, int y) { return from_vec(H.mul(S2.col(y), ap(t_r, ap(e_r, S2.col(x))))); },
                     [&](int h) { return from_vec(S2.col(h)); });
  coproduct_identity(col, "SCoUConv-5", ops, P.Delta_l, sp.L2, sp.H1,
                     [&](int x, int y) { return from_vec(H.mul(S.col(y), S2.col(x))); },
                     [&](int h) { return from_vec(ap(t_r, ap(e_r, S2.col(h)))); });
  coproduct_identity(col, "SCoUConv-6", ops, P.Delta_r, sp.R2, sp.H1,
                     [&](int x, int y) { return from_vec(H.mul(S2.col(y), S.col(x))); },
                     [&](int h) { return from_vec(ap(t_l, ap(e_l, S2.col(h)))); });

  const std::vector<std::string> inverse_checks = {
      "Bleistift-3", "Bleistift-4", "SHomId-3", "SHomId-4", "SHomId-7", "SHomId-8", "SHomId-11", "SHomId-12",
      "SCoUConv-7", "SCoUConv-8", "SCoUConv-9", "SCoUConv-10", "SCoUConv-11", "SCoUConv-12"};
  if (!have_inv) {
    for (const auto& n : inverse_checks) col.record(n, "antipode inverse unavailable", "identity needs S^{-1}");
  } else {
    const LinearMap Si = *sinv;
    const LinearMap Si2 = Si * Si;
    coproduct_identity(col, "Bleistift-3", ops, P.Delta_l, sp.L2, sp.R2,
                       [&](int x, int y) { return tensor_product(from_vec(Si.col(y)), from_vec(Si.col(x))); },
                       [&](int h) { return delta_of(ops, P.Delta_r, Si.col(h)); });
    coproduct_identity(col, "Bleistift-4", ops, P.Delta_r, sp.R2, sp.L2,
                       [&](int x, int y) { return tensor_product(from_vec(Si.col(y)), from_vec(Si.col(x))); },
                       [&](int h) { return delta_of(ops, P.Delta_l, Si.col(h)); });
    col.matrices("SHomId-3", s_r * e_r * t_l, Si * s_l, "a");
    col.matrices("SHomId-4", s_l * e_l * t_r, Si * s_r, "a");
    col.matrices("SHomId-7", t_r * e_r * t_l, Si * t_l, "a");
    col.matrices("SHomId-8", t_l * e_l * t_r, Si * t_r, "a");
    col.matrices("SHomId-11", e_r * t_l * e_l, e_r * Si, "h");
    col.matrices("SHomId-12", e_l * t_r * e_r, e_l * Si, "h");
    coproduct_identity(col, "SCoUConv-7", ops, P.Delta_l, sp.L2, sp.H1,
                       [&](int x, int y) { return from_vec(H.mul(Si.col(y), Vec::unit(x))); },
                       [&](int h) { return from_vec(ap(t_r, e_r.col(h))); });
    coproduct_identity(col, "SCoUConv-8", ops, P.Delta_r, sp.R2, sp.H1,
                       [&](int x, int y) { return from_vec(H.mul(Vec::unit(y), Si.col(x))); },
                       [&](int h) { return from_vec(ap(t_l, e_l.col(h))); });
    coproduct_identity(col, "SCoUConv-9", ops, P.Delta_l, sp.L2, sp.H1,
                       [&](int x, int y) { return from_vec(H.mul(Si.col(y), ap(t_l, e_l.col(x)))); },
                       [&](int h) { return from_vec(Si.col(h)); });
    coproduct_identity(col, "SCoUConv-10", ops, P.Delta_r, sp.R2, sp.H1,
                       [&](int x, int y) { return from_vec(H.mul(ap(t_r, e_r.col(y)), Si.col(x))); },
                       [&](int h) { return from_vec(Si.col(h)); });
    coproduct_identity(col, "SCoUConv-11", ops, P.Delta_l, sp.L2, sp.H1,
                       [&](int x, int y) { return from_vec(H.mul(Si.col(x), Si2.col(y))); },
                       [&](int h) { return from_vec(ap(s_r, ap(e_r, Si2.col(h)))); });
    coproduct_identity(col, "SCoUConv-12", ops, P.Delta_r, sp.R2, sp.H1,
                       [&](int x, int y) { return from_vec(H.mul(Si2.col(x), Si.col(y))); },
                       [&](int h) { return from_vec(ap(s_l, ap(e_l, Si2.col(h)))); });
  }

  // Module structure h·(m ⊗ n) = h_(1)m ⊗ h_(2)n on H ⊗_{A_l} H.
  {
    std::string witness, detail;
    for (int h = 0; h < d && witness.empty(); ++h) {
      Tensor D = ops.coproduct_l(h);
      WordOp act = [&](const Word& w) { return ops.slotwise(D, single(w)); };
      Tensor bad;
      if (find_ill_defined(act, sp.L2, sp.L2, &bad)) {
        witness = "(h,relation)=(" + e(h) + "," + tensor_str(bad) + ")";
        detail = "action does not descend to the balanced tensor product";
      }
    }
    if (witness.empty()) {
      for (int h = 0; h < d && witness.empty(); ++h)
        for (int g = 0; g < d && witness.empty(); ++g)
          for (int k = 0; k < sp.L2.dim() && witness.empty(); ++k) {
            Tensor w = single(sp.L2.basis_word(k));
            Tensor lhs = ops.slotwise(delta_of(ops, P.Delta_l, H.mul(h, g)), w);
            Tensor rhs = ops.slotwise(ops.coproduct_l(h), ops.slotwise(ops.coproduct_l(g), w));
            std::string dd = diff(sp.L2.project(lhs), sp.L2.project(rhs));
            if (!dd.empty()) {
              witness = "(h,h',m⊗n)=(" + e(h) + "," + e(g) + "," + tensor_str(w) + ")";
              detail = dd;
            }
          }
    }
    col.record("ModTensor", witness, detail);
  }

  col.rep.involutive = S2 == LinearMap::identity(d);
  col.rep.commutative = H.is_commutative();
  col.rep.cocommutative = is_cocommutative(P);
  return col.rep;
}

AntiIsoPair anti_isos(const HopfAlgebroidPresentation& P) {
  AntiIsoPair r;
  r.phi = P.eps_r * P.s_l;
  r.theta = P.eps_r * P.t_l;
  r.phi_inv = P.eps_l * P.t_r;
  r.theta_inv = P.eps_l * P.s_r;
  Collector col;
  const int dl = P.A_l.dim, dr = P.A_r.dim;
  col.matrices("ABIso-phi", r.phi_inv * r.phi, LinearMap::identity(dl), "a");
  if (col.rep.results.back().pass) col.rep.results.pop_back(), col.matrices("ABIso-phi", r.phi * r.phi_inv, LinearMap::identity(dr), "a");
  col.matrices("ABIso-theta", r.theta_inv * r.theta, LinearMap::identity(dl), "a");
  if (col.rep.results.back().pass) col.rep.results.pop_back(), col.matrices("ABIso-theta", r.theta * r.theta_inv, LinearMap::identity(dr), "a");
  auto anti = [&](const char* name, const LinearMap& f) {
    col.each(name, {dl, dl}, {"a", "b"}, [&](const std::vector<int>& i) {
      return diff(f.apply(P.A_l.mul(i[0], i[1])), P.A_r.mul(f.col(i[1]), f.col(i[0])));
    });
  };
  anti("ABIso-phi-anti", r.phi);
  anti("ABIso-theta-anti", r.theta);
  if (is_involutive(P)) col.matrices("ThetaEqualsPhi", r.theta, r.phi, "a");
  r.report = col.rep;
  return r;
}

bool is_involutive(const HopfAlgebroidPresentation& P) {
  return P.S * P.S == LinearMap::identity(P.H.dim);
}

bool is_cocommutative(const HopfAlgebroidPresentation& P) {
  HopfOps ops(P);
  TensorSpace L2({ops.d, ops.d}, {ops.junction_left()});
  for (int h = 0; h < ops.d; ++h) {
    Tensor D = ops.coproduct_l(h), T;
    for (const auto& [w, c] : D) add_word(T, word_of({letter(w, 1), letter(w, 0)}), c);
    if (!(L2.project(D) == L2.project(T))) return false;
  }
  return true;
}

AxiomReport check_all(const HopfAlgebroidPresentation& P) {
  AxiomReport r = check_algebras(P);
  r.append(check_left_bialgebroid(P));
  r.append(check_right_bialgebroid(P));
  AxiomReport h = check_hopf_algebroid(P);
  r.append(h);
  r.append(anti_isos(P).report);
  r.involutive = h.involutive;
  r.commutative = h.commutative;
  r.cocommutative = h.cocommutative;
  return r;
}

}  // namespace hakit
