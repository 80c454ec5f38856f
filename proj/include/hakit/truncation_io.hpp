#pragma once

#include <string>

#include "hakit/axioms.hpp"
#include "hakit/jets.hpp"
#include "hakit/lierinehart.hpp"

namespace hakit {

// Lie–Rinehart input file:
//   {"name", "base": {dim, unit, mul} (default ℚ), "base_labels", "labels",
//    "anchor": [[i, b, k, c]]       X_i(e_b) += c e_k,
//    "bracket": [[i, j, l, k, c]]   [X_i, X_j] += c e_k X_l (i < j; antisymmetrised),
//    "connection": [[i, k, c]]      ∇^r_{X_i} 1 += c e_k}
// A jet input uses the same format with base ℚ and zero anchor.
LieRinehartData parse_lie_rinehart(const std::string& text);
LieRinehartData load_lie_rinehart(const std::string& path);
std::string emit_lie_rinehart(const LieRinehartData& d);

// Truncation files: {"kind", "order", "structure": <input above>, "basis", structure tables}.
std::string emit_truncation(const LieRinehartTruncation& T);
std::string emit_truncation(const JetTruncation& J);

struct TruncationFile {
  std::string kind;  // "lie-rinehart-trunc" or "jets-trunc"
  int order = 0;
  LieRinehartData structure;
  std::string text;  // as read
};
// Throws ParseError on malformed input; the stored tables are only read, see check_truncation_file.
TruncationFile parse_truncation_file(const std::string& text);
bool is_truncation_file(const std::string& text);

// Rebuilds the truncation, compares every stored table with the recomputed one
// ("StoredTables"), and runs the flatness/translation checks or the jet axiom suite.
AxiomReport check_truncation_file(const TruncationFile& f);

}  // namespace hakit
