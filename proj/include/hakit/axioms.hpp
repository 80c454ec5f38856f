#pragma once

#include <string>
#include <vector>

#include "hakit/presentation.hpp"

namespace hakit {

struct AxiomResult {
  std::string name;
  bool pass = true;
  std::string witness;  // first failing basis tuple, lexicographic; empty on pass
  std::string detail;   // difference of the two sides on the witness
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool involutive = false;     // S² = id
  bool commutative = false;    // H commutative
  bool cocommutative = false;  // Δ_l symmetric modulo the tensor relations

  bool all_pass() const;
  std::vector<std::string> failures() const;
  const AxiomResult* find(const std::string& name) const;
  void append(const AxiomReport& o);
  // Records one instance of a named identity; repeated names keep the first failure.
  void note(const std::string& name, bool pass, const std::string& witness = "", const std::string& detail = "");
};

AxiomReport check_algebras(const HopfAlgebroidPresentation& P);
AxiomReport check_left_bialgebroid(const HopfAlgebroidPresentation& P);
AxiomReport check_right_bialgebroid(const HopfAlgebroidPresentation& P);
// Def. of a Hopf algebroid plus the derived identity tables; includes nothing from the
// bialgebroid checks, use check_all for everything.
AxiomReport check_hopf_algebroid(const HopfAlgebroidPresentation& P);
AxiomReport check_all(const HopfAlgebroidPresentation& P);

struct AntiIsoPair {
  LinearMap phi, theta, phi_inv, theta_inv;
  AxiomReport report;
};

AntiIsoPair anti_isos(const HopfAlgebroidPresentation& P);

bool is_involutive(const HopfAlgebroidPresentation& P);
bool is_cocommutative(const HopfAlgebroidPresentation& P);

}  // namespace hakit
