// hakit: command-line driver.
//
// Exit codes: 0 ok, 1 identity failure, 2 parse or input error, 3 cyclic theory undefined (S² ≠ id).

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hakit/algoracle.hpp"
#include "hakit/axioms.hpp"
#include "hakit/cyclic.hpp"
#include "hakit/examples.hpp"
#include "hakit/jets.hpp"
#include "hakit/lierinehart.hpp"
#include "hakit/presentation.hpp"
#include "hakit/truncation_io.hpp"

using namespace hakit;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kInput = 2, kParaCyclic = 3 };

struct Options {
  std::string path, kind, param, out;
  int n_max = -1;
  int order = 2;
  std::string theory = "hopf-cyclic";
  std::string format = "table";
  bool force = false;
  std::optional<unsigned> seed;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int default_n_max(const HopfAlgebroidPresentation& P) {
  if (P.H.dim <= 6) return 4;
  if (P.H.dim <= 12) return 3;
  return 2;
}

json report_json(const AxiomReport& r) {
  json res = json::array();
  for (const auto& x : r.results)
    res.push_back({{"name", x.name}, {"pass", x.pass}, {"witness", x.witness}, {"detail", x.detail}});
  return {{"results", res},
          {"involutive", r.involutive},
          {"commutative", r.commutative},
          {"cocommutative", r.cocommutative},
          {"all_pass", r.all_pass()}};
}

void print_report(const AxiomReport& r, const std::string& title) {
  std::cout << title << "\n";
  int passed = 0;
  for (const auto& x : r.results) {
    if (x.pass) {
      ++passed;
      std::cout << "  PASS " << x.name << "\n";
    } else {
      std::cout << "  FAIL " << x.name;
      if (!x.witness.empty()) std::cout << "  at " << x.witness;
      if (!x.detail.empty()) std::cout << "  :: " << x.detail;
      std::cout << "\n";
    }
  }
  std::cout << "  " << passed << "/" << r.results.size() << " identities hold\n";
}

std::string dims_text(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return "(" + s + ")";
}

// ---- generate ----

AlgebraPresentation named_algebra(const std::string& name) {
  if (name == "Q") return algebra_field_Q();
  if (name == "dual" || name == "Q[x]/x^2" || name == "Q[x]/(x^2)") return algebra_dual_numbers();
  auto suffix_int = [&](const std::string& prefix) -> int {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return -1;
    for (std::size_t i = prefix.size(); i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
    return std::stoi(name.substr(prefix.size()));
  };
  if (int n = suffix_int("Q^"); n >= 1 && n <= 15) return algebra_Q_power(n);
  if (int n = suffix_int("Q"); n >= 1 && n <= 15) return algebra_Q_power(n);
  if (int n = suffix_int("M_"); n >= 1 && n <= 3) return algebra_matrices(n);
  if (int n = suffix_int("M"); n >= 1 && n <= 3) return algebra_matrices(n);
  throw InputError("unknown algebra '" + name + "' (Q, Q^n, Q[x]/(x^2), M_n)");
}

FiniteGroupoid named_groupoid(const std::string& spec) {
  if (auto plus = spec.find('+'); plus != std::string::npos)
    return disjoint_union(named_groupoid(spec.substr(0, plus)), named_groupoid(spec.substr(plus + 1)));
  if (spec == "point" || spec == "trivial") return cyclic_group(1);
  if (spec == "klein" || spec == "Z/2xZ/2" || spec == "Z2xZ2") return klein_four();
  auto number_after = [&](const std::string& prefix) -> int {
    if (spec.rfind(prefix, 0) != 0 || spec.size() == prefix.size()) return -1;
    for (std::size_t i = prefix.size(); i < spec.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(spec[i]))) return -1;
    return std::stoi(spec.substr(prefix.size()));
  };
  for (const char* p : {"Z/", "Z"})
    if (int n = number_after(p); n >= 1 && n <= 64) return cyclic_group(n);
  if (int n = number_after("pair:"); n >= 1 && n <= 15) return pair_groupoid(n);
  return load_groupoid(spec);
}

int cmd_generate(const Options& o) {
  std::string text;
  if (o.kind == "enveloping") {
    text = emit_presentation(enveloping(named_algebra(o.param), "enveloping(" + o.param + ")"));
  } else if (o.kind == "group" || o.kind == "groupoid") {
    FiniteGroupoid G = named_groupoid(o.param);
    if (o.kind == "group" && G.objects != 1) throw InputError("'" + o.param + "' is not a group");
    text = emit_presentation(groupoid_algebra(G, o.kind + "(" + o.param + ")"));
  } else if (o.kind == "lie-rinehart-trunc") {
    text = emit_truncation(LieRinehartTruncation(load_lie_rinehart(o.param), o.order));
  } else if (o.kind == "jets-trunc") {
    text = emit_truncation(JetTruncation(load_lie_rinehart(o.param), o.order));
  } else {
    throw InputError("unknown kind '" + o.kind + "' (enveloping, groupoid, group, lie-rinehart-trunc, jets-trunc)");
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
  }
  return kOk;
}

// ---- check ----

int cmd_check(const Options& o) {
  const std::string text = read_file(o.path);
  AxiomReport rep;
  std::string title;
  if (is_truncation_file(text)) {
    TruncationFile f = parse_truncation_file(text);
    rep = check_truncation_file(f);
    title = f.kind + " " + f.structure.name + " order " + std::to_string(f.order);
  } else {
    HopfAlgebroidPresentation P = parse_presentation(text);
    rep = check_all(P);
    title = P.name + " (dim H = " + std::to_string(P.H.dim) + ")";
    if (o.seed) {
      std::mt19937 rng(*o.seed);
      std::vector<int> perm(P.H.dim);
      for (int i = 0; i < P.H.dim; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      AxiomReport re = check_all(permute_total_basis(P, perm));
      bool same = re.all_pass() == rep.all_pass() && re.failures().size() == rep.failures().size();
      rep.note("BasisPermutationInvariance", same, "seed " + std::to_string(*o.seed),
               same ? "" : "relabelled basis gives a different failure set");
    }
  }
  if (o.format == "structured") {
    json j = report_json(rep);
    j["input"] = title;
    std::cout << j.dump(2) << "\n";
  } else {
    print_report(rep, title);
  }
  return rep.all_pass() ? kOk : kFail;
}

// ---- homology ----

int cmd_homology(const Options& o) {
  HopfAlgebroidPresentation P = load_presentation(o.path);
  const int n_max = o.n_max >= 0 ? o.n_max : default_n_max(P);
  if (AxiomReport rep = check_all(P); !rep.all_pass() && !o.force) {
    std::cerr << "presentation fails " << rep.failures().size() << " identities (first: " << rep.failures().front()
              << "); run check, or pass --force\n";
    return kFail;
  }
  const bool homological = o.theory == "dual";
  MixedComplex M = homological ? mixed_complex(cyclic_module(P, n_max + 1))
                               : mixed_complex(cocyclic_module(P, n_max + 1));
  std::vector<int> hh = hochschild_dims(M, n_max);
  std::optional<CyclicTable> tab;
  if (o.theory != "hochschild") {
    try {
      tab = cyclic_theory(M, n_max);
    } catch (const ParaCyclic& e) {
      if (!o.force) {
        std::cerr << e.what() << "\n";
        return kParaCyclic;
      }
    }
  }
  auto hp_flag = [&](int n) -> std::string {
    if (!tab) return "-";
    if (tab->hp_stable_at >= 0 && n >= tab->hp_stable_at) return "stable";
    if (tab->s_iso[n] < 0) return "-";
    return tab->s_iso[n] ? "S-iso" : "no";
  };
  if (o.format == "structured") {
    json rows = json::array();
    for (int n = 0; n <= n_max; ++n) {
      json r = {{"n", n}, {"HH", hh[n]}, {"HP", hp_flag(n)}};
      r["HC"] = tab ? json(tab->hc[n]) : json(nullptr);
      rows.push_back(r);
    }
    json j = {{"input", P.name}, {"theory", o.theory}, {"n_max", n_max}, {"rows", rows}};
    if (tab && tab->hp_even >= 0) j["HP"] = {{"even", tab->hp_even}, {"odd", tab->hp_odd}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  const char* kind = homological ? "HH_n  HC_n" : "HH^n  HC^n";
  std::cout << P.name << "  theory " << o.theory << "\n";
  std::cout << "   n  " << kind << "  HP\n";
  for (int n = 0; n <= n_max; ++n) {
    std::string hc = tab ? std::to_string(tab->hc[n]) : "-";
    std::cout << (n < 10 ? "   " : "  ") << n << "  " << std::string(4 - std::min<std::size_t>(4, std::to_string(hh[n]).size()), ' ')
              << hh[n] << "  " << std::string(4 - std::min<std::size_t>(4, hc.size()), ' ') << hc << "  " << hp_flag(n)
              << "\n";
  }
  if (tab && tab->hp_even >= 0)
    std::cout << "HP stable from degree " << tab->hp_stable_at << ": even " << tab->hp_even << ", odd " << tab->hp_odd
              << "\n";
  else if (o.theory == "periodic")
    std::cout << "HP not stabilized below degree " << n_max << "\n";
  return kOk;
}

// ---- duality ----

int cmd_duality(const Options& o) {
  HopfAlgebroidPresentation P = load_presentation(o.path);
  const int n_max = o.n_max >= 0 ? o.n_max : std::min(3, default_n_max(P));
  if (!P.has_invertible_antipode()) throw InputError("duality needs an invertible antipode");
  AxiomReport rep;
  try {
    CocyclicModule C = cocyclic_module(P, n_max);
    CyclicModule D = cyclic_module(P, n_max);
    rep = hopf_galois(P, C, D).report;
  } catch (const NotWellDefined& e) {
    rep.note("operators-well-defined", false, "", e.what());
  }
  if (o.format == "structured") {
    json j = report_json(rep);
    j["input"] = P.name;
    j["n_max"] = n_max;
    std::cout << j.dump(2) << "\n";
  } else {
    print_report(rep, P.name + "  Hopf-Galois duality, n <= " + std::to_string(n_max));
  }
  return rep.all_pass() ? kOk : kFail;
}

// ---- crosscheck ----

int cmd_crosscheck(const Options& o) {
  HopfAlgebroidPresentation P = load_presentation(o.path);
  const int n_max = o.n_max >= 0 ? o.n_max : std::min(3, default_n_max(P));
  AxiomReport rep;
  json extra;
  CrosscheckReport X = derived_functor_crosscheck(P, n_max);
  rep.append(X.report);
  extra["HH^*"] = X.hh_co;
  extra["Cotor"] = X.cotor;
  extra["HH_*"] = X.hh;
  extra["Tor"] = X.tor;
  try {
    StructureReport S = structure_theorem_check(P, n_max);
    rep.append(S.report);
    extra["structure"] = {{"commutative", S.commutative_case}, {"cocommutative", S.cocommutative_case}};
  } catch (const NotApplicable& e) {
    extra["structure"] = std::string("not applicable: ") + e.what();
  } catch (const ParaCyclic& e) {
    extra["structure"] = std::string("not applicable: ") + e.what();
  }
  // Enveloping presentations are compared with the standard cyclic module of the base algebra.
  HopfAlgebroidPresentation E = enveloping(P.A_l, P.name);
  if (emit_presentation(E) == emit_presentation(P)) {
    OracleComparison C = compare_with_enveloping(P.A_l, n_max);
    rep.append(C.report);
    extra["algebra HH"] = C.oracle.hh;
    extra["algebra HC"] = C.oracle.hc;
  }
  if (o.format == "structured") {
    json j = report_json(rep);
    j["input"] = P.name;
    j["n_max"] = n_max;
    j["dims"] = extra;
    std::cout << j.dump(2) << "\n";
  } else {
    print_report(rep, P.name + "  crosscheck, n <= " + std::to_string(n_max));
    for (const auto& [k, v] : extra.items())
      std::cout << "  " << k << ": " << (v.is_array() ? dims_text(v.get<std::vector<int>>()) : v.dump()) << "\n";
  }
  return rep.all_pass() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf algebroid presentations: identities, (co)cyclic homology, duality"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--n-max", o.n_max, "highest degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", o.format, "table or structured")->check(CLI::IsMember({"table", "structured"}));
    sub->add_flag("--force", o.force, "proceed past failed identities; b-only output on para-cyclic input");
    sub->add_option("--seed", o.seed, "seed for randomized property fixtures");
  };
  CLI::App* check = app.add_subcommand("check", "verify every identity of a presentation or truncation file");
  check->add_option("path", o.path)->required();
  common(check);
  CLI::App* homology = app.add_subcommand("homology", "HH / HC / HP table");
  homology->add_option("path", o.path)->required();
  homology->add_option("--theory", o.theory, "hopf-cyclic, dual, hochschild or periodic")
      ->check(CLI::IsMember({"hopf-cyclic", "dual", "hochschild", "periodic"}));
  common(homology);
  CLI::App* duality = app.add_subcommand("duality", "Hopf-Galois identification of C_* with the cyclic dual of C^*");
  duality->add_option("path", o.path)->required();
  common(duality);
  CLI::App* generate = app.add_subcommand("generate", "emit a presentation or truncation file");
  generate->add_option("kind", o.kind, "enveloping, groupoid, group, lie-rinehart-trunc, jets-trunc")->required();
  generate->add_option("param", o.param, "algebra name, group or groupoid spec, or structure file")->required();
  generate->add_option("-o,--out", o.out, "output path (default stdout)");
  generate->add_option("--order", o.order, "truncation degree N or jet order p")->check(CLI::PositiveNumber);
  common(generate);
  CLI::App* crosscheck = app.add_subcommand("crosscheck", "derived functors, structure theorem, algebra oracle");
  crosscheck->add_option("path", o.path)->required();
  common(crosscheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }
  try {
    if (*check) return cmd_check(o);
    if (*homology) return cmd_homology(o);
    if (*duality) return cmd_duality(o);
    if (*generate) return cmd_generate(o);
    if (*crosscheck) return cmd_crosscheck(o);
  } catch (const ParaCyclic& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParaCyclic;
  } catch (const NotWellDefined& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
