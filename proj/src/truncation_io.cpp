#include "hakit/truncation_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hakit/examples.hpp"
#include "json_fields.hpp"

namespace hakit {

using namespace jsonio;

namespace {

std::string q(const Scalar& c) { return "\"" + format_scalar(c) + "\""; }

std::string row(std::initializer_list<int> idx, const Scalar& c) {
  std::string s = "[";
  for (int i : idx) s += std::to_string(i) + ", ";
  return s + q(c) + "]";
}

void emit_rows(std::ostringstream& os, const std::vector<std::string>& rows, const std::string& indent) {
  if (rows.empty()) {
    os << "[]";
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) os << indent << "  " << rows[i] << (i + 1 < rows.size() ? ",\n" : "\n");
  os << indent << "]";
}

void emit_strings(std::ostringstream& os, const std::vector<std::string>& xs) {
  os << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << json(xs[i]).dump();
  os << "]";
}

void emit_structure(std::ostringstream& os, const LieRinehartData& d, const std::string& in) {
  const int m = d.base.dim, r = d.rank();
  os << "{\n" << in << "  \"name\": " << json(d.name).dump() << ",\n";
  os << in << "  \"base\": {\n" << in << "    \"dim\": " << m << ",\n" << in << "    \"unit\": ";
  std::vector<std::string> rows;
  for (const auto& [i, c] : d.base.unit.entries()) rows.push_back("[" + std::to_string(i) + ", " + q(c) + "]");
  emit_rows(os, rows, in + "    ");
  os << ",\n" << in << "    \"mul\": ";
  rows.clear();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (const auto& [k, c] : d.base.mul(a, b).entries()) rows.push_back(row({a, b, k}, c));
  emit_rows(os, rows, in + "    ");
  os << "\n" << in << "  },\n" << in << "  \"base_labels\": ";
  emit_strings(os, d.base_labels);
  os << ",\n" << in << "  \"labels\": ";
  emit_strings(os, d.labels);
  os << ",\n" << in << "  \"anchor\": ";
  rows.clear();
  for (int i = 0; i < r; ++i)
    for (int b = 0; b < m; ++b)
      for (const auto& [k, c] : d.anchor[i][b].entries()) rows.push_back(row({i, b, k}, c));
  emit_rows(os, rows, in + "  ");
  os << ",\n" << in << "  \"bracket\": ";
  rows.clear();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int l = 0; l < r; ++l)
        for (const auto& [k, c] : d.bracket[i][j][l].entries()) rows.push_back(row({i, j, l, k}, c));
  emit_rows(os, rows, in + "  ");
  os << ",\n" << in << "  \"connection\": ";
  rows.clear();
  for (int i = 0; i < r; ++i)
    for (const auto& [k, c] : d.eps_r[i].entries()) rows.push_back(row({i, k}, c));
  emit_rows(os, rows, in + "  ");
  os << "\n" << in << "}";
}

LieRinehartData structure_field(const json& j, const std::string& path) {
  only_keys(j, {"name", "base", "base_labels", "labels", "anchor", "bracket", "connection"}, path);
  auto sub = [&](const std::string& k) { return path.empty() ? k : path + "." + k; };
  LieRinehartData d;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError(at_field(sub("name"), "expected a string"));
    d.name = j["name"].get<std::string>();
  }
  d.base = j.contains("base") ? algebra_field(j["base"], sub("base")) : algebra_field_Q();
  const int m = d.base.dim;
  if (m > 255) throw ParseError(at_field(sub("base"), "dimension above 255"));
  auto strings = [&](const std::string& k) {
    if (!j[k].is_array()) throw ParseError(at_field(sub(k), "expected an array of strings"));
    std::vector<std::string> xs;
    for (const auto& x : j[k]) {
      if (!x.is_string()) throw ParseError(at_field(sub(k), "expected an array of strings"));
      xs.push_back(x.get<std::string>());
    }
    return xs;
  };
  if (!j.contains("labels")) throw ParseError(at_field(sub("labels"), "missing"));
  d.labels = strings("labels");
  if (j.contains("base_labels")) {
    d.base_labels = strings("base_labels");
  } else {
    d.base_labels.push_back("1");
    for (int b = 1; b < m; ++b) d.base_labels.push_back("e" + std::to_string(b));
  }
  if (static_cast<int>(d.base_labels.size()) != m)
    throw ParseError(at_field(sub("base_labels"), "needs one label per base element"));
  const int r = d.rank();
  if (r == 0) throw ParseError(at_field(sub("labels"), "needs at least one generator"));
  std::vector<std::vector<std::map<int, Scalar>>> anchor(r, std::vector<std::map<int, Scalar>>(m));
  std::vector<std::vector<std::vector<std::map<int, Scalar>>>> bracket(
      r, std::vector<std::vector<std::map<int, Scalar>>>(r, std::vector<std::map<int, Scalar>>(r)));
  std::vector<std::map<int, Scalar>> conn(r);
  auto idx = [&](const json& x, int bound, const std::string& p) {
    int v = index_field(x, p);
    if (v >= bound) throw ParseError(at_field(p, "index outside range " + std::to_string(bound)));
    return v;
  };
  if (j.contains("anchor")) {
    auto es = entries_field(j["anchor"], 4, sub("anchor"));
    for (std::size_t n = 0; n < es.size(); ++n) {
      std::string p = sub("anchor") + "[" + std::to_string(n) + "]";
      anchor[idx(es[n][0], r, p)][idx(es[n][1], m, p)][idx(es[n][2], m, p)] += scalar_field(es[n][3], p);
    }
  }
  if (j.contains("bracket")) {
    auto es = entries_field(j["bracket"], 5, sub("bracket"));
    for (std::size_t n = 0; n < es.size(); ++n) {
      std::string p = sub("bracket") + "[" + std::to_string(n) + "]";
      int a = idx(es[n][0], r, p), b = idx(es[n][1], r, p), l = idx(es[n][2], r, p), k = idx(es[n][3], m, p);
      if (a >= b) throw ParseError(at_field(p, "bracket entries need i < j"));
      Scalar c = scalar_field(es[n][4], p);
      bracket[a][b][l][k] += c;
      bracket[b][a][l][k] -= c;
    }
  }
  if (j.contains("connection")) {
    auto es = entries_field(j["connection"], 3, sub("connection"));
    for (std::size_t n = 0; n < es.size(); ++n) {
      std::string p = sub("connection") + "[" + std::to_string(n) + "]";
      conn[idx(es[n][0], r, p)][idx(es[n][1], m, p)] += scalar_field(es[n][2], p);
    }
  }
  d.anchor.assign(r, std::vector<Vec>(m));
  d.bracket.assign(r, std::vector<std::vector<Vec>>(r, std::vector<Vec>(r)));
  for (int i = 0; i < r; ++i) {
    for (int b = 0; b < m; ++b) d.anchor[i][b] = Vec::from_map(anchor[i][b]);
    for (int a = 0; a < r; ++a)
      for (int l = 0; l < r; ++l) d.bracket[i][a][l] = Vec::from_map(bracket[i][a][l]);
    d.eps_r.push_back(Vec::from_map(conn[i]));
  }
  try {
    d.validate();
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
  return d;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit_words(std::vector<std::string>& rows, int a, const Tensor& t) {
  for (const auto& [w, c] : t) rows.push_back(row({a, letter(w, 0), letter(w, 1)}, c));
}

// Entries of a stored table as index tuple -> value.
std::map<std::vector<int>, Scalar> table_entries(const json& j, const std::string& key) {
  std::map<std::vector<int>, Scalar> out;
  if (!j.contains(key) || !j[key].is_array()) throw ParseError(at_field(key, "missing table"));
  for (std::size_t n = 0; n < j[key].size(); ++n) {
    const json& e = j[key][n];
    std::string p = key + "[" + std::to_string(n) + "]";
    if (!e.is_array() || e.size() < 2) throw ParseError(at_field(p, "expected an index tuple and a value"));
    std::vector<int> I;
    for (std::size_t k = 0; k + 1 < e.size(); ++k) I.push_back(index_field(e[k], p));
    out[I] += scalar_field(e.back(), p);
  }
  return out;
}

}  // namespace

LieRinehartData parse_lie_rinehart(const std::string& text) {
  return structure_field(parse_json(text, "Lie-Rinehart file"), "");
}

LieRinehartData load_lie_rinehart(const std::string& path) { return parse_lie_rinehart(slurp(path)); }

std::string emit_lie_rinehart(const LieRinehartData& d) {
  std::ostringstream os;
  emit_structure(os, d, "");
  os << "\n";
  return os.str();
}

std::string emit_truncation(const LieRinehartTruncation& T) {
  std::ostringstream os;
  os << "{\n  \"kind\": \"lie-rinehart-trunc\",\n  \"order\": " << T.N() << ",\n  \"structure\": ";
  emit_structure(os, T.data(), "  ");
  std::vector<std::string> basis;
  for (int a = 0; a < T.dim(); ++a) basis.push_back(T.label(a));
  os << ",\n  \"basis\": ";
  emit_strings(os, basis);
  std::vector<std::string> mul, el, er, S, dl, dr;
  for (int a = 0; a < T.dim(); ++a) {
    for (int b = 0; b < T.dim(); ++b)
      if (T.degree(a) + T.degree(b) <= T.N()) {
        const Vec p = T.mul(a, b);
        for (const auto& [c, x] : p.entries()) mul.push_back(row({a, b, c}, x));
      }
    const Vec l = T.eps_l(Vec::unit(a)), r = T.eps_r(Vec::unit(a)), s = T.antipode(a);
    for (const auto& [k, x] : l.entries()) el.push_back(row({a, k}, x));
    for (const auto& [k, x] : r.entries()) er.push_back(row({a, k}, x));
    for (const auto& [k, x] : s.entries()) S.push_back(row({a, k}, x));
    emit_words(dl, a, T.delta_l(a));
    emit_words(dr, a, T.delta_r(a));
  }
  const std::pair<const char*, const std::vector<std::string>*> tables[] = {
      {"mul", &mul}, {"eps_l", &el}, {"eps_r", &er}, {"antipode", &S}, {"delta_l", &dl}, {"delta_r", &dr}};
  for (const auto& [k, rows] : tables) {
    os << ",\n  \"" << k << "\": ";
    emit_rows(os, *rows, "  ");
  }
  os << "\n}\n";
  return os.str();
}

std::string emit_truncation(const JetTruncation& J) {
  std::ostringstream os;
  os << "{\n  \"kind\": \"jets-trunc\",\n  \"order\": " << J.order() << ",\n  \"structure\": ";
  emit_structure(os, J.enveloping().data(), "  ");
  std::vector<std::string> basis;
  for (int a = 0; a < J.dim(); ++a) basis.push_back(J.label(a));
  os << ",\n  \"basis\": ";
  emit_strings(os, basis);
  std::vector<std::string> mul, cop, S;
  for (int a = 0; a < J.dim(); ++a) {
    for (int b = 0; b < J.dim(); ++b)
      for (const auto& [c, x] : J.product(a, b).entries()) mul.push_back(row({a, b, c}, x));
    emit_words(cop, a, J.coproduct(a));
  }
  for (int c = 0; c < J.dim(); ++c)
    for (const auto& [r, x] : J.antipode().col(c).entries()) S.push_back(row({c, r}, x));
  const std::pair<const char*, const std::vector<std::string>*> tables[] = {
      {"mul", &mul}, {"coproduct", &cop}, {"antipode", &S}};
  for (const auto& [k, rows] : tables) {
    os << ",\n  \"" << k << "\": ";
    emit_rows(os, *rows, "  ");
  }
  os << "\n}\n";
  return os.str();
}

bool is_truncation_file(const std::string& text) {
  try {
    json j = json::parse(text);
    return j.is_object() && j.contains("kind");
  } catch (const json::exception&) {
    return false;
  }
}

TruncationFile parse_truncation_file(const std::string& text) {
  json j = parse_json(text, "truncation file");
  if (!j.is_object()) throw ParseError("truncation file: expected an object");
  TruncationFile f;
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError(at_field("kind", "expected a string"));
  f.kind = j["kind"].get<std::string>();
  std::set<std::string> keys = {"kind", "order", "structure", "basis"};
  if (f.kind == "lie-rinehart-trunc") {
    for (const char* k : {"mul", "eps_l", "eps_r", "antipode", "delta_l", "delta_r"}) keys.insert(k);
  } else if (f.kind == "jets-trunc") {
    for (const char* k : {"mul", "coproduct", "antipode"}) keys.insert(k);
  } else {
    throw ParseError(at_field("kind", "unknown truncation kind " + f.kind));
  }
  only_keys(j, keys, "");
  for (const auto& k : keys)
    if (!j.contains(k)) throw ParseError(at_field(k, "missing"));
  f.order = index_field(j["order"], "order");
  f.structure = structure_field(j["structure"], "structure");
  for (const auto& k : keys)
    if (k != "kind" && k != "order" && k != "structure" && k != "basis") table_entries(j, k);
  f.text = text;
  return f;
}

AxiomReport check_truncation_file(const TruncationFile& f) {
  AxiomReport rep;
  std::string fresh;
  auto compare = [&](const std::vector<std::string>& tables) {
    json stored = json::parse(f.text), ref = json::parse(fresh);
    bool basis_ok = stored["basis"] == ref["basis"];
    rep.note("StoredTables", basis_ok, "basis", basis_ok ? "" : "basis labels differ from the rebuilt truncation");
    for (const auto& k : tables) {
      auto a = table_entries(stored, k), b = table_entries(ref, k);
      std::erase_if(a, [](const auto& e) { return e.second == 0; });
      bool ok = a == b;
      std::string detail;
      if (!ok) {
        for (const auto& [I, x] : b)
          if (auto it = a.find(I); it == a.end() || it->second != x) {
            detail = "entry " + json(I).dump() + " expected " + format_scalar(x);
            break;
          }
        if (detail.empty())
          for (const auto& [I, x] : a)
            if (!b.count(I)) {
              detail = "unexpected entry " + json(I).dump() + " = " + format_scalar(x);
              break;
            }
      }
      rep.note("StoredTables", ok, k, detail);
    }
  };
  if (f.kind == "lie-rinehart-trunc") {
    LieRinehartTruncation T(f.structure, f.order);
    fresh = emit_truncation(T);
    compare({"mul", "eps_l", "eps_r", "antipode", "delta_l", "delta_r"});
    FlatnessReport F = antipode_flatness_check(T);
    rep.append(F.report);
    if (F.flat) {
      rep.append(translation_map_check(T));
      if (T.N() >= 3) rep.append(antisymmetrisation_check(T, std::min(2, T.N() - 2)));
    }
  } else {
    JetTruncation J(f.structure, f.order);
    fresh = emit_truncation(J);
    compare({"mul", "coproduct", "antipode"});
    rep.append(jet_axiom_check(J));
  }
  return rep;
}

}  // namespace hakit
