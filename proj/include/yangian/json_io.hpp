#pragma once

// JSON schemas for words, tuples, dimension tables and reports. Every number
// that is not a small count is written as an exact string ("3/2", "1-1/2i").
//
//   word:  {"type":"C4","factors":[{"node":2,"a":"3/2"}, ...]}
//   tuple: {"type":"A2","polys":[["3"],["1","5"]]}        (one root list per node)
//   table: {"type":"C3","dims":{"1":6,"2":14,"3":14}}

#include "criteria.hpp"
#include "drinfeld.hpp"
#include "exact.hpp"
#include "rootsys.hpp"
#include "weyl_dims.hpp"

#include <json.hpp>

#include <limits>
#include <string>

namespace yangian {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline CRational param_from_json(const Json& j) {
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_number_integer()) return CRational(j.get<long>());
  throw Error("spectral parameter must be a string like \"3/2\" or an integer");
}

inline int node_from_json(const Json& j) {
  if (!j.is_number_integer()) throw Error("node must be an integer");
  return j.get<int>();
}

inline LieType type_from_json(const Json& j) {
  const Json& t = require(j, "type");
  if (!t.is_string()) throw Error("'type' must be a string such as \"C4\"");
  return parse_type(t.get<std::string>());
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace detail

inline Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline TensorWord word_from_json(const Json& j) {
  LieType type = detail::type_from_json(j);
  const Json& fs = detail::require(j, "factors");
  if (!fs.is_array()) throw Error("'factors' must be an array");
  std::vector<FundamentalFactor> factors;
  for (const auto& f : fs)
    factors.push_back({detail::node_from_json(detail::require(f, "node")), detail::param_from_json(detail::require(f, "a"))});
  return TensorWord(type, std::move(factors));
}

inline TensorWord word_from_string(const std::string& text) { return word_from_json(detail::parse_text(text)); }

inline Json to_json(const TensorWord& w) {
  Json fs = Json::array();
  for (const auto& f : w.factors) fs.push_back({{"node", f.node}, {"a", to_string(f.param)}});
  return {{"type", to_string(w.type)}, {"factors", fs}};
}

inline DrinfeldTuple tuple_from_json(const Json& j) {
  LieType type = detail::type_from_json(j);
  const Json& ps = detail::require(j, "polys");
  if (!ps.is_array() || static_cast<int>(ps.size()) != type.rank)
    throw Error("'polys' must be an array with one root list per node");
  std::vector<MonicPoly> polys;
  for (const auto& roots : ps) {
    if (!roots.is_array()) throw Error("each entry of 'polys' must be an array of roots");
    std::vector<CRational> r;
    for (const auto& a : roots) r.push_back(detail::param_from_json(a));
    polys.emplace_back(std::move(r));
  }
  return DrinfeldTuple(type, std::move(polys));
}

inline DrinfeldTuple tuple_from_string(const std::string& text) { return tuple_from_json(detail::parse_text(text)); }

inline Json to_json(const DrinfeldTuple& t) {
  Json ps = Json::array();
  for (const auto& p : t.polys) {
    Json roots = Json::array();
    for (const auto& a : p.roots()) roots.push_back(to_string(a));
    ps.push_back(roots);
  }
  return {{"type", to_string(t.type)}, {"polys", ps}};
}

inline FundamentalDimTable table_from_json(const Json& j) {
  LieType type = detail::type_from_json(j);
  const Json& ds = detail::require(j, "dims");
  if (!ds.is_object()) throw Error("'dims' must be an object mapping node to dimension");
  std::map<int, Integer> dims;
  for (const auto& [key, value] : ds.items()) {
    if (!detail::all_digits(key) || key.size() > 6) throw Error("dimension table key '" + key + "' is not a node");
    Integer d;
    if (value.is_number_unsigned() || value.is_number_integer())
      d = Integer(std::to_string(value.get<long long>()));
    else if (value.is_string() && detail::all_digits(value.get<std::string>()))
      d = Integer(value.get<std::string>());
    else
      throw Error("dimension for node " + key + " must be a positive integer");
    dims[std::stoi(key)] = d;
  }
  return user_dim_table(type, std::move(dims));
}

inline FundamentalDimTable table_from_string(const std::string& text) { return table_from_json(detail::parse_text(text)); }

inline Json to_json(const SSet& s) {
  Json out = Json::array();
  for (const auto& v : s.values()) out.push_back(to_string(v));
  return out;
}

/// Renders scale * (a_1 + shift) as e.g. "a1+3/2" or "1/2*(a1+1)".
inline std::string render_offset(const TOffset& off) {
  std::string inner = "a1";
  if (sgn(off.shift) > 0) inner += "+" + to_string(off.shift);
  if (sgn(off.shift) < 0) inner += to_string(off.shift);
  if (off.scale == 1) return inner;
  return to_string(off.scale) + "*(" + inner + ")";
}

inline Json to_json(const TSet& t) {
  Json out = Json::array();
  for (const auto& off : t.offsets)
    out.push_back({{"scale", to_string(off.scale)}, {"shift", to_string(off.shift)}, {"root", render_offset(off)}});
  return out;
}

inline Json to_json(const PairViolation& v) {
  return {{"m", v.m}, {"n", v.n}, {"diff", to_string(v.diff)}, {"set_member", to_string(v.set_member)}};
}

inline Json to_json(const CyclicityReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations) vs.push_back(to_json(v));
  return {{"cyclic_guaranteed", r.cyclic_guaranteed}, {"violations", vs}};
}

inline Json to_json(const IrreducibilityVerdict& v) {
  Json ev = Json::array();
  for (const auto& e : v.evidence) ev.push_back(to_json(e));
  return {{"status", to_string(v.status)}, {"evidence", ev}};
}

}  // namespace yangian
