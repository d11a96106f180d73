#pragma once

// Invariant sweep behind `yangian selftest`: table consistency for every
// classical type up to rank 8 and the rank-1 grids that compare the criteria
// with the Y(sl2) matrix oracles.

#include "criteria.hpp"
#include "drinfeld.hpp"
#include "rootsys.hpp"
#include "sl2_engine.hpp"

#include <future>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace yangian {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// -2, -3/2, ..., 2
inline std::vector<CRational> half_integer_grid() {
  std::vector<CRational> g;
  for (int k = -4; k <= 4; ++k) g.emplace_back(make_rational(k, 2));
  return g;
}

inline std::vector<LieType> classical_types(int max_rank) {
  std::vector<LieType> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back({Family::A, l});
  for (int l = 2; l <= max_rank; ++l) out.push_back({Family::B, l});
  for (int l = 2; l <= max_rank; ++l) out.push_back({Family::C, l});
  for (int l = 3; l <= max_rank; ++l) out.push_back({Family::D, l});
  return out;
}

/// Every word of the given length over the grid, type A1.
inline std::vector<TensorWord> rank1_words(std::size_t length, const std::vector<CRational>& grid) {
  std::vector<TensorWord> out;
  std::vector<std::size_t> idx(length, 0);
  while (true) {
    std::vector<FundamentalFactor> f;
    for (auto i : idx) f.push_back({1, grid[i]});
    out.emplace_back(LieType{Family::A, 1}, std::move(f));
    std::size_t pos = 0;
    while (pos < length && ++idx[pos] == grid.size()) idx[pos++] = 0;
    if (pos == length) break;
  }
  return out;
}

inline Sl2Module sl2_module_of(const TensorWord& w) {
  if (!(w.type == LieType{Family::A, 1})) throw Error("Y(sl2) modules are only built for type A1");
  Sl2Module acc = irrep_Wm(1, w.factors.front().param);
  for (std::size_t i = 1; i < w.size(); ++i) acc = tensor(acc, irrep_Wm(1, w.factors[i].param));
  return acc;
}

inline std::string describe(const TensorWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w.factors[i].param);
  return s + "]";
}

namespace detail {

inline CheckResult check_root_systems() {
  CheckResult r{"rootsys: longest word, involution, symmetrizers (l<=8)", true, ""};
  for (const auto& t : classical_types(8)) {
    const CartanData data = cartan_data(t);
    const int l = t.rank;
    int expected_len = 0;
    switch (t.family) {
      case Family::A: expected_len = l * (l + 1) / 2; break;
      case Family::B:
      case Family::C: expected_len = l * l; break;
      case Family::D: expected_len = l * (l - 1); break;
    }
    auto fail = [&](const std::string& why) {
      r.pass = false;
      r.detail += to_string(t) + ": " + why + "; ";
    };
    if (static_cast<int>(data.longest_word.size()) != expected_len || data.num_positive_roots != expected_len)
      fail("longest word length");
    int g = 0;
    for (int i = 1; i <= l; ++i) {
      g = std::gcd(g, data.d(i));
      for (int j = 1; j <= l; ++j)
        if (data.d(i) * data.a(i, j) != data.d(j) * data.a(j, i)) fail("DA not symmetric");
      WeightVector img = weyl_apply(data, data.longest_word, fundamental_weight(l, i));
      WeightVector expect = fundamental_weight(l, data.dual_node(i));
      for (auto& c : expect.coords) c = -c;
      if (!(img == expect)) fail("w0(omega_i) != -omega_{-w0(i)}");
      if (data.dual_node(data.dual_node(i)) != i) fail("not an involution");
    }
    if (g != 1) fail("symmetrizers not coprime");
  }
  return r;
}

inline CheckResult check_s_positivity() {
  CheckResult r{"criteria: every S-set member is positive (l<=8)", true, ""};
  for (const auto& t : classical_types(8)) {
    const CartanData data = cartan_data(t);
    for (int bm = 1; bm <= t.rank; ++bm)
      for (int bn = 1; bn <= t.rank; ++bn) {
        try {
          SSet s = s_set(data, bm, bn);
          for (const auto& v : s.values())
            if (sgn(v) <= 0) throw Error("non-positive member");
        } catch (const Error& e) {
          r.pass = false;
          r.detail += to_string(t) + " S(" + std::to_string(bm) + "," + std::to_string(bn) + "): " + e.what() + "; ";
        }
      }
  }
  return r;
}

inline CheckResult check_t_to_s() {
  CheckResult r{"criteria: S derived from T equals S (type C, 2<=l<=8)", true, ""};
  for (int l = 2; l <= 8; ++l) {
    const CartanData data = cartan_data({Family::C, l});
    for (int bm = 1; bm <= l; ++bm)
      for (int bn = 1; bn <= l; ++bn)
        if (!(derive_s_from_t(data, bm, bn) == s_set(data, bm, bn))) {
          r.pass = false;
          r.detail += "C" + std::to_string(l) + " (" + std::to_string(bm) + "," + std::to_string(bn) + "); ";
        }
  }
  return r;
}

inline CheckResult check_type_a_symmetry() {
  CheckResult r{"criteria: type-A S-set symmetries (l<=8)", true, ""};
  for (int l = 1; l <= 8; ++l) {
    const CartanData data = cartan_data({Family::A, l});
    for (int bm = 1; bm <= l; ++bm)
      for (int bn = 1; bn <= l; ++bn) {
        const SSet s = s_set(data, bm, bn);
        if (!(s == s_set(data, bn, bm)) || !(s == s_set(data, l - bn + 1, l - bm + 1))) {
          r.pass = false;
          r.detail += "A" + std::to_string(l) + " (" + std::to_string(bm) + "," + std::to_string(bn) + "); ";
        }
      }
  }
  return r;
}

inline CheckResult check_rank1_cyclicity() {
  CheckResult r{"sl2: cyclic verdict implies full highest-weight closure (length<=3 grid)", true, ""};
  const auto grid = half_integer_grid();
  std::size_t checked = 0;
  for (std::size_t len = 1; len <= 3; ++len)
    for (const auto& w : rank1_words(len, grid)) {
      if (!is_cyclic(w).cyclic_guaranteed) continue;
      ++checked;
      const Sl2Module m = sl2_module_of(w);
      if (hw_closure(m).dim != m.dim()) {
        r.pass = false;
        r.detail += describe(w) + " ";
      }
    }
  if (r.pass) r.detail = std::to_string(checked) + " cyclic words verified";
  return r;
}

inline CheckResult check_rank1_irreducibility() {
  CheckResult r{"sl2: Burnside dimension matches the type-A irreducibility verdict (length 2 grid)", true, ""};
  const auto grid = half_integer_grid();
  std::size_t checked = 0;
  for (const auto& w : rank1_words(2, grid)) {
    ++checked;
    const auto status = is_irreducible(w).status;
    const bool full = burnside_dim(sl2_module_of(w)) == 16;
    const bool agree = full ? status == Irreducibility::IrreducibleGuaranteed : status == Irreducibility::ReducibleProven;
    if (!agree) {
      r.pass = false;
      r.detail += describe(w) + " ";
    }
  }
  if (r.pass) r.detail = std::to_string(checked) + " words agree";
  return r;
}

inline CheckResult check_factorize_cyclic() {
  CheckResult r{"criteria: weyl_factorize output passes is_cyclic (100 random tuples per family)", true, ""};
  std::mt19937 rng(20261016);
  const Family families[] = {Family::A, Family::B, Family::C, Family::D};
  for (Family f : families) {
    const int min_rank = f == Family::A ? 1 : (f == Family::D ? 3 : 2);
    for (int trial = 0; trial < 100; ++trial) {
      const int l = std::uniform_int_distribution<int>(min_rank, 6)(rng);
      const LieType t{f, l};
      const int degree = std::uniform_int_distribution<int>(1, 8)(rng);
      DrinfeldTuple tuple(t);
      for (int k = 0; k < degree; ++k) {
        const int node = std::uniform_int_distribution<int>(1, l)(rng);
        // Small half-integer lattice so that forbidden differences actually occur.
        const CRational a(make_rational(std::uniform_int_distribution<int>(-8, 8)(rng), 2),
                          make_rational(std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? 1 : 0, 2));
        tuple.polys[static_cast<std::size_t>(node - 1)].add_root(a);
      }
      const TensorWord w = weyl_factorize(tuple);
      if (!is_cyclic(w).cyclic_guaranteed) {
        r.pass = false;
        r.detail += to_string(t) + " trial " + std::to_string(trial) + "; ";
      }
    }
  }
  return r;
}

inline CheckResult check_local_weyl_rank1() {
  CheckResult r{"sl2: local Weyl modules of degree m<=6 have closure 2^m", true, ""};
  std::vector<CRational> roots;
  const CRational pool[] = {CRational(0), CRational(1), make_rational(-1, 2), CRational(2), CRational(1),
                            CRational(make_rational(3, 2), 1)};
  for (const auto& a : pool) {
    roots.push_back(a);
    const Sl2Module m = local_weyl_sl2(roots);
    if (hw_closure(m).dim != (std::size_t{1} << roots.size())) {
      r.pass = false;
      r.detail += "m=" + std::to_string(roots.size()) + " ";
    }
  }
  return r;
}

inline CheckResult check_irrep_relations() {
  CheckResult r{"sl2: W_m(a) satisfies the defining relations (m<=4, K=3)", true, ""};
  const CRational params[] = {CRational(0), make_rational(-7, 3), CRational(make_rational(1, 2), make_rational(2, 5))};
  for (int m = 1; m <= 4; ++m)
    for (const auto& a : params) {
      auto bad = check_relations(irrep_Wm(m, a), 3);
      if (!bad.empty()) {
        r.pass = false;
        r.detail += "m=" + std::to_string(m) + " a=" + to_string(a) + ": " + bad.front() + "; ";
      }
    }
  return r;
}

}  // namespace detail

/// Runs every check; the slow rank-1 grids run on worker threads when parallel is set.
inline std::vector<CheckResult> run_selftest(bool parallel = true) {
  using Fn = CheckResult (*)();
  const Fn checks[] = {detail::check_root_systems,     detail::check_s_positivity,     detail::check_t_to_s,
                       detail::check_type_a_symmetry,  detail::check_factorize_cyclic, detail::check_irrep_relations,
                       detail::check_local_weyl_rank1, detail::check_rank1_cyclicity,  detail::check_rank1_irreducibility};
  std::vector<CheckResult> results;
  if (!parallel) {
    for (Fn f : checks) results.push_back(f());
    return results;
  }
  std::vector<std::future<CheckResult>> futures;
  for (Fn f : checks) futures.push_back(std::async(std::launch::async, f));
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

}  // namespace yangian
