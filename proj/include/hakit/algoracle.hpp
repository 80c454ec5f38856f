#pragma once

#include <vector>

#include "hakit/axioms.hpp"
#include "hakit/exactlin.hpp"
#include "hakit/presentation.hpp"

namespace hakit {

// Standard cyclic module of an algebra: level n is A^{⊗(n+1)}, basis index
// x_0 * m^n + x_1 * m^{n-1} + ... + x_n (m = dim A).
struct AlgebraCyclicModule {
  int m = 0;
  std::vector<int> dims;
  std::vector<std::vector<LinearMap>> face;   // face[n][i]: n -> n-1, n >= 1
  std::vector<std::vector<LinearMap>> degen;  // degen[n][i]: n -> n+1, n < top
  std::vector<LinearMap> t;

  int top() const { return static_cast<int>(dims.size()) - 1; }
};

AlgebraCyclicModule algebra_cyclic_module(const AlgebraPresentation& A, int top);
// Simplicial and cyclic identities, t_n^{n+1} = id.
AxiomReport algebra_cyclic_identities(const AlgebraCyclicModule& M);

struct AlgebraHomology {
  std::vector<int> hh, hc;
};
// HH from the Hochschild complex, HC from the cyclic bicomplex (columns b, -b', 1 - t, N).
AlgebraHomology algebra_cyclic_homology(const AlgebraPresentation& A, int n_max);

// ι_n: A^{⊗(n+1)} -> C_n(A^e), x_0⊗…⊗x_n ↦ (x_1⊗1)⊗…⊗(x_{n-1}⊗1)⊗(x_n⊗x_0); ι_0 = id onto A_r.
struct OracleComparison {
  AlgebraHomology oracle;
  std::vector<int> hh, hc;  // from the module side on A^e(A)
  AxiomReport report;       // "identification-bijective", "faces", "degeneracies", "cyclic", "HH-dims", "HC-dims"
};
OracleComparison compare_with_enveloping(const AlgebraPresentation& A, int n_max);

}  // namespace hakit
