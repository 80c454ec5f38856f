#pragma once

// JSON field readers shared by the file formats; errors are ParseError naming the field path.

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "hakit/presentation.hpp"

namespace hakit::jsonio {

using json = nlohmann::json;

inline std::string at_field(const std::string& path, const std::string& msg) {
  return "field " + path + ": " + msg;
}

inline Scalar scalar_field(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
  } catch (const InputError& e) {
    throw ParseError(at_field(path, e.what()));
  }
  throw ParseError(at_field(path, "expected a rational string \"p/q\""));
}

inline int index_field(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long>() < 0) throw ParseError(at_field(path, "expected a non-negative integer index"));
  return static_cast<int>(j.get<long>());
}

inline void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  if (!obj.is_object()) throw ParseError(at_field(path, "expected an object"));
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) throw ParseError(at_field(path.empty() ? k : path + "." + k, "unknown field"));
}

inline std::vector<std::vector<json>> entries_field(const json& j, std::size_t arity, const std::string& path) {
  if (!j.is_array()) throw ParseError(at_field(path, "expected an array of entries"));
  std::vector<std::vector<json>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    std::string p = path + "[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != arity)
      throw ParseError(at_field(p, "expected an entry with " + std::to_string(arity) + " components"));
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

inline AlgebraPresentation algebra_field(const json& j, const std::string& path) {
  only_keys(j, {"dim", "mul", "unit"}, path);
  for (const char* k : {"dim", "mul", "unit"})
    if (!j.contains(k)) throw ParseError(at_field(path + "." + k, "missing"));
  int dim = index_field(j["dim"], path + ".dim");
  std::vector<std::tuple<int, int, int, Scalar>> mul;
  auto es = entries_field(j["mul"], 4, path + ".mul");
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string p = path + ".mul[" + std::to_string(i) + "]";
    int a = index_field(es[i][0], p), b = index_field(es[i][1], p), c = index_field(es[i][2], p);
    if (a >= dim || b >= dim || c >= dim) throw ParseError(at_field(p, "index outside dimension " + std::to_string(dim)));
    mul.emplace_back(a, b, c, scalar_field(es[i][3], p));
  }
  std::map<int, Scalar> u;
  auto us = entries_field(j["unit"], 2, path + ".unit");
  for (std::size_t i = 0; i < us.size(); ++i) {
    std::string p = path + ".unit[" + std::to_string(i) + "]";
    int a = index_field(us[i][0], p);
    if (a >= dim) throw ParseError(at_field(p, "index outside dimension"));
    u[a] += scalar_field(us[i][1], p);
  }
  return AlgebraPresentation::from_entries(dim, mul, Vec::from_map(u));
}

inline LinearMap matrix_field(const json& j, int rows, int cols, const std::string& path) {
  std::vector<std::tuple<int, int, Scalar>> t;
  auto es = entries_field(j, 3, path);
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    int r = index_field(es[i][0], p), c = index_field(es[i][1], p);
    if (r >= rows || c >= cols)
      throw ParseError(at_field(p, "dimension mismatch: entry (" + std::to_string(r) + "," +
                                       std::to_string(c) + ") outside " + std::to_string(rows) +
                                       "x" + std::to_string(cols)));
    t.emplace_back(r, c, scalar_field(es[i][2], p));
  }
  return LinearMap::from_triplets(rows, cols, t);
}

inline LinearMap coproduct_field(const json& j, int d, const std::string& path) {
  std::vector<std::tuple<int, int, Scalar>> t;
  auto es = entries_field(j, 4, path);
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    int h = index_field(es[i][0], p), a = index_field(es[i][1], p), b = index_field(es[i][2], p);
    if (h >= d || a >= d || b >= d) throw ParseError(at_field(p, "dimension mismatch: index outside " + std::to_string(d)));
    t.emplace_back(a * d + b, h, scalar_field(es[i][3], p));
  }
  return LinearMap::from_triplets(d * d, d, t);
}

}  // namespace hakit::jsonio
