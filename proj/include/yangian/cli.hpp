#pragma once

// Batch command-line front end. `run` is the whole program; tools/yangian.cpp
// only forwards argv.
//
// Exit codes: 0 success, 1 usage or parse error, 2 (with --assert) criterion
// violated or oracle mismatch, also 2 when selftest fails.

#include "criteria.hpp"
#include "drinfeld.hpp"
#include "json_io.hpp"
#include "rootsys.hpp"
#include "selftest.hpp"
#include "sl2_engine.hpp"
#include "weyl_dims.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace yangian::cli {

namespace detail {

// "@path" reads the JSON from a file.
inline std::string read_arg(const std::string& value) {
  if (value.empty() || value.front() != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw Error("cannot open '" + value.substr(1) + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

inline std::string set_text(const SSet& s) {
  std::vector<std::string> xs;
  for (const auto& v : s.values()) xs.push_back(to_string(v));
  return "{" + join(xs, ", ") + "}";
}

inline std::string word_text(const TensorWord& w) {
  std::vector<std::string> xs;
  for (const auto& f : w.factors) xs.push_back("V_" + to_string(f.param) + "(w" + std::to_string(f.node) + ")");
  return to_string(w.type) + ": " + join(xs, " (x) ");
}

inline std::string violations_text(const std::vector<PairViolation>& vs) {
  std::string s;
  for (const auto& v : vs)
    s += "  (" + std::to_string(v.m) + "," + std::to_string(v.n) + "): a_" + std::to_string(v.n) + " - a_" +
         std::to_string(v.m) + " = " + to_string(v.diff) + " is forbidden\n";
  return s;
}

struct Sl2Facts {
  std::size_t dim = 0;
  std::size_t closure_dim = 0;
};

inline Sl2Facts closure_facts(const Sl2Module& m) { return {m.dim(), hw_closure(m).dim}; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclicity and irreducibility of ordered tensor products of fundamental Yangian modules", "yangian"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

  std::string type_str, word_str, tuple_str, table_str;
  int bm = 0, bn = 0;
  bool tset = false, irreducible = false, assert_flag = false, serial = false;

  auto* sets = app.add_subcommand("sets", "print S(bm,bn), or T(bm,bn) for type C");
  sets->add_option("--type", type_str, "Lie type such as C3")->required();
  sets->add_option("--bm", bm, "left node");
  sets->add_option("--bn", bn, "right node");
  sets->add_flag("--tset", tset, "print T-sets (type C) with the S-sets derived from them");

  auto* check = app.add_subcommand("check", "cyclicity (and irreducibility) verdict for an ordered word");
  check->add_option("--word", word_str, "word JSON or @file")->required();
  check->add_flag("--irreducible", irreducible, "also run the irreducibility criterion");
  check->add_flag("--assert", assert_flag, "exit 2 unless the word passes");

  auto* dual = app.add_subcommand("dual", "left dual of an ordered word");
  dual->add_option("--word", word_str, "word JSON or @file")->required();

  auto* factorize = app.add_subcommand("factorize", "ordered tensor product realizing the local Weyl module");
  factorize->add_option("--tuple", tuple_str, "tuple JSON or @file")->required();
  factorize->add_flag("--assert", assert_flag, "exit 2 unless the word is cyclic (and, at rank 1, the closure is full)");

  auto* dims = app.add_subcommand("dims", "dimension of the local Weyl module");
  dims->add_option("--tuple", tuple_str, "tuple JSON or @file")->required();
  dims->add_option("--table", table_str, "fundamental dimension table JSON or @file (built in for type A)");

  auto* oracle = app.add_subcommand("sl2-oracle", "compare the criteria with explicit Y(sl2) matrices (type A1)");
  oracle->add_option("--word", word_str, "word JSON or @file")->required();
  oracle->add_flag("--assert", assert_flag, "exit 2 on disagreement");

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  selftest->add_flag("--serial", serial, "run checks on one thread");

  std::vector<const char*> argv{"yangian"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  auto emit = [&](const Json& j, const std::string& text) {
    if (pretty)
      out << text;
    else
      out << j.dump() << "\n";
  };

  try {
    if (sets->parsed()) {
      const CartanData data = cartan_data(parse_type(type_str));
      const int l = data.rank();
      if ((bm == 0) != (bn == 0)) throw Error("give both --bm and --bn, or neither");
      if (tset && data.type.family != Family::C) throw Error("--tset is available for type C only");
      std::vector<std::pair<int, int>> pairs;
      if (bm != 0) {
        check_node(l, bm);
        check_node(l, bn);
        pairs.emplace_back(bm, bn);
      } else {
        for (int i = 1; i <= l; ++i)
          for (int j = 1; j <= l; ++j) pairs.emplace_back(i, j);
      }
      Json rows = Json::array();
      std::string text;
      for (auto [i, j] : pairs) {
        Json row{{"bm", i}, {"bn", j}};
        std::string label = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        if (tset) {
          const TSet t = t_set_C(data, i, j);
          row["T"] = to_json(t);
          row["S_from_T"] = to_json(derive_s_from_t(data, i, j));
          std::vector<std::string> rs;
          for (const auto& off : t.offsets) rs.push_back(render_offset(off));
          text += "T" + label + " = {" + detail::join(rs, ", ") + "}\n";
        } else {
          const SSet s = s_set(data, i, j);
          row["S"] = to_json(s);
          text += "S" + label + " = " + detail::set_text(s) + "\n";
        }
        rows.push_back(row);
      }
      Json j{{"type", to_string(data.type)}};
      if (rows.size() == 1) {
        for (auto& [k, v] : rows[0].items()) j[k] = v;
      } else {
        j["pairs"] = rows;
      }
      emit(j, to_string(data.type) + "\n" + text);
      return 0;
    }

    if (check->parsed()) {
      const TensorWord w = word_from_string(detail::read_arg(word_str));
      const CyclicityReport rep = is_cyclic(w);
      Json j = to_json(rep);
      std::string text = detail::word_text(w) + "\ncyclic: " + (rep.cyclic_guaranteed ? "guaranteed" : "not guaranteed") +
                         "\n" + detail::violations_text(rep.violations);
      bool ok = rep.cyclic_guaranteed;
      if (irreducible) {
        const IrreducibilityVerdict v = is_irreducible(w);
        j["irreducibility"] = to_json(v);
        text += std::string("irreducibility: ") + to_string(v.status) + "\n" + detail::violations_text(v.evidence);
        ok = v.status == Irreducibility::IrreducibleGuaranteed;
      }
      emit(j, text);
      return assert_flag && !ok ? 2 : 0;
    }

    if (dual->parsed()) {
      const TensorWord w = word_from_string(detail::read_arg(word_str));
      const TensorWord d = left_dual(w);
      const Rational k = cartan_data(w.type).kappa;
      const std::string note = "kappa is half the dual Coxeter number; its normalization for the spectral shift is informational";
      Json j{{"word", to_json(d)}, {"kappa", to_string(k)}, {"note", note}};
      emit(j, detail::word_text(d) + "\nkappa = " + to_string(k) + " (" + note + ")\n");
      return 0;
    }

    if (factorize->parsed()) {
      const DrinfeldTuple t = tuple_from_string(detail::read_arg(tuple_str));
      const TensorWord w = weyl_factorize(t);
      const CyclicityReport rep = is_cyclic(w);
      Json j{{"word", to_json(w)}, {"cyclic_guaranteed", rep.cyclic_guaranteed}};
      std::string text = detail::word_text(w) + "\ncyclic: " + (rep.cyclic_guaranteed ? "guaranteed" : "not guaranteed") + "\n";
      bool ok = rep.cyclic_guaranteed;
      if (t.type == LieType{Family::A, 1}) {
        const auto facts = detail::closure_facts(sl2_module_of(w));
        const bool full = facts.closure_dim == facts.dim;
        j["sl2"] = {{"dim", facts.dim}, {"closure_dim", facts.closure_dim}, {"full", full}};
        text += "closure " + std::to_string(facts.closure_dim) + " of " + std::to_string(facts.dim) + "\n";
        ok = ok && full;
      }
      emit(j, text);
      return assert_flag && !ok ? 2 : 0;
    }

    if (dims->parsed()) {
      const DrinfeldTuple t = tuple_from_string(detail::read_arg(tuple_str));
      const FundamentalDimTable table =
          table_str.empty() ? builtin_dim_table(t.type) : table_from_string(detail::read_arg(table_str));
      const DimBoundReport r = dim_bound_report(t, table);
      Json j{{"type", to_string(t.type)},
             {"weyl_dim", integer_to_json(r.weyl_dim)},
             {"bound", integer_to_json(r.bound)},
             {"table_source", table.source == TableSource::Builtin ? "builtin" : "user"}};
      emit(j, "Dim W(pi) = " + r.weyl_dim.get_str() + " (bound " + r.bound.get_str() + ")\n");
      return 0;
    }

    if (oracle->parsed()) {
      const TensorWord w = word_from_string(detail::read_arg(word_str));
      const Sl2Module m = sl2_module_of(w);
      const std::size_t closure = hw_closure(m).dim;
      const std::size_t burnside = burnside_dim(m);
      const bool full = closure == m.dim();
      const CyclicityReport rep = is_cyclic(w);
      const IrreducibilityVerdict v = is_irreducible(w);
      const bool irreducible_by_oracle = burnside == m.dim() * m.dim();
      const bool agree = (!rep.cyclic_guaranteed || full) &&
                         (irreducible_by_oracle == (v.status == Irreducibility::IrreducibleGuaranteed));
      Json j{{"dim", m.dim()},
             {"closure_dim", closure},
             {"burnside_dim", burnside},
             {"full", full},
             {"cyclic_guaranteed", rep.cyclic_guaranteed},
             {"criterion", to_string(v.status)},
             {"agree", agree}};
      emit(j, detail::word_text(w) + "\ndim " + std::to_string(m.dim()) + ", closure " + std::to_string(closure) +
                  ", Burnside " + std::to_string(burnside) + "\ncriterion " + to_string(v.status) +
                  (agree ? ", agrees with the oracles\n" : ", DISAGREES with the oracles\n"));
      return assert_flag && !agree ? 2 : 0;
    }

    if (selftest->parsed()) {
      const auto results = run_selftest(!serial);
      Json checks = Json::array();
      std::string text;
      bool all = true;
      for (const auto& r : results) {
        all = all && r.pass;
        checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        text += std::string(r.pass ? "PASS " : "FAIL ") + r.name + (r.detail.empty() ? "" : " [" + r.detail + "]") + "\n";
      }
      emit({{"checks", checks}, {"all_pass", all}}, text);
      return all ? 0 : 2;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace yangian::cli
