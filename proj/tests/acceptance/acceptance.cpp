// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Every check is exact; the only tolerances are wall-clock limits.

#include "support.hpp"

#include <yangian/selftest.hpp>
#include <yangian/yangian.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace yangian;
using testing_support::random_param;
using testing_support::random_rational;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass || detail.size() < 400) detail += (detail.empty() ? "" : "; ") + why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  if (!o.pass) ++failures;
  std::printf("%s  %2d  %-58s %8.3f s%s%s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.empty() ? "" : "  ",
              o.detail.c_str());
}

ExactVector scaled(const CRational& c, ExactVector v) {
  for (auto& x : v) x *= c;
  return v;
}

SSet range_set(int from, int to, int step) {
  std::set<Rational> s;
  for (int k = from; k <= to; k += step) s.insert(Rational(k));
  return SSet(s);
}

bool same_module(const Sl2Module& x, const Sl2Module& y) {
  return x.xp == y.xp && x.xm == y.xm && x.h0 == y.h0 && x.hbar1 == y.hbar1 && x.top_index == y.top_index;
}

// Level-by-level span of generator words on the top vector, for the regression constants.
std::size_t closure_by_levels(const Sl2Module& m) {
  const ExactMatrix* gens[] = {&m.xp, &m.xm, &m.h0, &m.hbar1};
  std::vector<ExactVector> basis{basis_vector(m.dim(), m.top_index)};
  while (true) {
    std::vector<ExactVector> grown = basis;
    for (const auto& v : basis)
      for (const ExactMatrix* g : gens) {
        grown.push_back(*g * v);
        if (testing_support::rank_of(grown) < grown.size()) grown.pop_back();
      }
    if (grown.size() == basis.size()) return basis.size();
    basis = std::move(grown);
  }
}

}  // namespace

int main() {
  std::printf("acceptance criteria\n");

  criterion(1, "basis action of W_m(a) from the ladder (m<=4, K=3)", 5, [](Outcome& o) {
    std::mt19937 rng(1001);
    for (int trial = 0; trial < 20; ++trial) {
      const CRational a = random_param(rng);
      for (int m = 1; m <= 4; ++m) {
        const ModeOperators ops = mode_operators(irrep_Wm(m, a), 3);
        for (unsigned k = 0; k <= 3; ++k)
          for (int s = 0; s <= m; ++s) {
            const auto us = static_cast<std::size_t>(s);
            const ExactVector ws = basis_vector(static_cast<std::size_t>(m) + 1, us);
            ExactVector up(ws.size()), down(ws.size()), diag(ws.size());
            if (s < m) up[us + 1] = pow(CRational(s) + a, k) * CRational(s + 1);
            if (s > 0) down[us - 1] = pow(CRational(s - 1) + a, k) * CRational(m - s + 1);
            diag[us] = pow(CRational(s - 1) + a, k) * CRational(s * (m - s + 1)) -
                       pow(CRational(s) + a, k) * CRational((s + 1) * (m - s));
            const std::string at = "m=" + std::to_string(m) + " k=" + std::to_string(k) + " s=" + std::to_string(s) +
                                   " a=" + to_string(a);
            o.expect(ops.xp[k] * ws == up, "x+ " + at);
            o.expect(ops.xm[k] * ws == down, "x- " + at);
            o.expect(ops.h[k] * ws == diag, "h " + at);
          }
      }
    }
  });

  criterion(2, "six rank-one identities at 10 random (a,b)", 5, [](Outcome& o) {
    std::mt19937 rng(1002);
    for (int trial = 0; trial < 10; ++trial) {
      const CRational a = random_param(rng), b = random_param(rng);
      const std::string at = " at a=" + to_string(a) + " b=" + to_string(b);
      const ModeOperators w1 = mode_operators(irrep_Wm(1, a), 3);
      const ExactVector top1 = basis_vector(2, 1), low1 = w1.xm[0] * top1;
      for (unsigned k = 0; k <= 3; ++k) {
        o.expect(w1.h[k] * top1 == scaled(pow(a, k), top1), "h_k w_1" + at);
        o.expect(w1.xm[k] * top1 == scaled(pow(a, k), low1), "x_k^- w_1" + at);
        o.expect(w1.h[k] * low1 == scaled(-pow(a, k), low1), "h_k x_0^- w_1" + at);
      }
      const ModeOperators w2 = mode_operators(irrep_Wm(2, a), 2);
      const ExactVector top2 = basis_vector(3, 2), low2 = w2.xm[0] * (w2.xm[0] * top2);
      o.expect(anticommutator(w2.xm[1], w2.xm[0]) * top2 == scaled(CRational(2) * a + CRational(1), low2),
               "W_2 first" + at);
      o.expect(anticommutator(w2.xm[2], w2.xm[0]) * top2 ==
                   scaled(CRational(2) * a * a + CRational(2) * a + CRational(1), low2),
               "W_2 second" + at);
      const Sl2Module ba = tensor(irrep_Wm(1, b), irrep_Wm(1, a));
      const ModeOperators t = mode_operators(ba, 2);
      const ExactVector vw = basis_vector(4, ba.top_index), low = t.xm[0] * (t.xm[0] * vw);
      o.expect(anticommutator(t.xm[1], t.xm[0]) * vw == scaled(a + b, low), "tensor first" + at);
      o.expect(anticommutator(t.xm[0], t.xm[2]) * vw == scaled(a * a + b * b, low), "tensor second" + at);
    }
  });

  criterion(3, "rank-1 cyclicity soundness (grid, length<=3)", 60, [](Outcome& o) {
    std::size_t checked = 0;
    for (std::size_t len = 1; len <= 3; ++len)
      for (const auto& w : rank1_words(len, half_integer_grid())) {
        if (!is_cyclic(w).cyclic_guaranteed) continue;
        ++checked;
        const std::size_t closure = hw_closure(sl2_module_of(w)).dim;
        o.expect(closure == (std::size_t{1} << len), "closure " + std::to_string(closure) + " for " + describe(w));
      }
    o.expect(checked > 0, "no cyclic words");
    if (o.pass) o.detail = std::to_string(checked) + " cyclic words";
  });

  criterion(4, "rank-1 irreducibility equivalence (grid, length 2)", 120, [](Outcome& o) {
    std::size_t reducible = 0, total = 0;
    for (const auto& w : rank1_words(2, half_integer_grid())) {
      ++total;
      const std::size_t dim = burnside_dim(sl2_module_of(w));
      const Irreducibility status = is_irreducible(w).status;
      const bool ok = dim == 16 ? status == Irreducibility::IrreducibleGuaranteed
                                : dim < 16 && status == Irreducibility::ReducibleProven;
      if (dim < 16) ++reducible;
      o.expect(ok, describe(w) + " burnside " + std::to_string(dim) + " vs " + to_string(status));
    }
    o.expect(reducible > 0, "grid has no reducible words");
    if (o.pass) o.detail = std::to_string(total) + " words, " + std::to_string(reducible) + " reducible";
  });

  criterion(5, "closure of W_1(0)(x)W_1(1) is 3, of W_1(1)(x)W_1(0) is 4", 0, [](Outcome& o) {
    const Sl2Module w01 = tensor(irrep_Wm(1, 0), irrep_Wm(1, 1));
    const Sl2Module w10 = tensor(irrep_Wm(1, 1), irrep_Wm(1, 0));
    o.expect(closure_by_levels(w01) == 3, "level oracle W_1(0)(x)W_1(1)");
    o.expect(closure_by_levels(w10) == 4, "level oracle W_1(1)(x)W_1(0)");
    o.expect(hw_closure(w01).dim == 3, "hw_closure W_1(0)(x)W_1(1)");
    o.expect(hw_closure(w10).dim == 4, "hw_closure W_1(1)(x)W_1(0)");
  });

  criterion(6, "local Weyl modules of degree m<=6 have closure 2^m", 30, [](Outcome& o) {
    std::mt19937 rng(1006);
    for (std::size_t m = 1; m <= 6; ++m)
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<CRational> roots;
        for (std::size_t k = 0; k < m; ++k) {
          // Half-integer roots make many differences equal to 1.
          if (trial == 0) roots.emplace_back(make_rational(std::uniform_int_distribution<int>(-4, 4)(rng), 2));
          else roots.push_back(random_param(rng, trial == 2 && k % 2 == 0));
        }
        const Sl2Module mod = local_weyl_sl2(roots);
        o.expect(mod.dim() == (std::size_t{1} << m) && hw_closure(mod).dim == mod.dim(),
                 "m=" + std::to_string(m) + " trial " + std::to_string(trial));
      }
  });

  criterion(7, "S derived from T equals S for type C, 2<=l<=8", 1, [](Outcome& o) {
    for (int l = 2; l <= 8; ++l) {
      const CartanData data = cartan_data({Family::C, l});
      for (int bm = 1; bm <= l; ++bm)
        for (int bn = 1; bn <= l; ++bn)
          o.expect(derive_s_from_t(data, bm, bn) == s_set(data, bm, bn),
                   "C" + std::to_string(l) + " (" + std::to_string(bm) + "," + std::to_string(bn) + ")");
    }
  });

  criterion(8, "S-set spot checks (B, C, D spin pairs, A3)", 0, [](Outcome& o) {
    for (int l = 2; l <= 8; ++l) {
      o.expect(s_set(cartan_data({Family::B, l}), l, l) == range_set(1, 2 * l - 1, 2), "B" + std::to_string(l));
      o.expect(s_set(cartan_data({Family::C, l}), l, l) == range_set(2, l + 1, 1), "C" + std::to_string(l));
    }
    for (int l = 3; l <= 8; ++l) {
      const CartanData d = cartan_data({Family::D, l});
      const int lbar = l % 2;
      const SSet same = range_set(1, l - 1 - lbar, 2), mixed = range_set(2, l - 2 + lbar, 2);
      const std::string tag = "D" + std::to_string(l);
      o.expect(s_set(d, l - 1, l - 1) == same, tag + " (l-1,l-1)");
      o.expect(s_set(d, l, l) == same, tag + " (l,l)");
      o.expect(s_set(d, l - 1, l) == mixed, tag + " (l-1,l)");
      o.expect(s_set(d, l, l - 1) == mixed, tag + " (l,l-1)");
    }
    o.expect(s_set(cartan_data({Family::A, 3}), 1, 2) == SSet({make_rational(3, 2)}), "A3 (1,2)");
  });

  criterion(9, "type-A S-set symmetries, l<=8", 0, [](Outcome& o) {
    for (int l = 1; l <= 8; ++l) {
      const CartanData data = cartan_data({Family::A, l});
      for (int bm = 1; bm <= l; ++bm)
        for (int bn = 1; bn <= l; ++bn) {
          const SSet s = s_set(data, bm, bn);
          const std::string at = "A" + std::to_string(l) + " (" + std::to_string(bm) + "," + std::to_string(bn) + ")";
          o.expect(s == s_set(data, bn, bm), at + " swap");
          o.expect(s == s_set(data, l - bn + 1, l - bm + 1), at + " reflect");
        }
    }
  });

  criterion(10, "mu-series coefficients of (u-a)(u-b) at 5 random (a,b)", 0, [](Outcome& o) {
    std::mt19937 rng(1010);
    for (int trial = 0; trial < 5; ++trial) {
      const CRational a = random_rational(rng), b = random_rational(rng);
      const std::vector<CRational> expect{1, 2, a + b + CRational(1), a * a + b * b + a + b};
      o.expect(mu_series(MonicPoly({a, b}), 1, 3).coeffs == expect, "a=" + to_string(a) + " b=" + to_string(b));
    }
  });

  criterion(11, "shift covariance of modules and verdicts", 0, [](Outcome& o) {
    std::mt19937 rng(1011);
    for (int m = 1; m <= 3; ++m)
      for (int trial = 0; trial < 5; ++trial) {
        const CRational b = random_param(rng, trial == 4), c = random_param(rng, trial == 3);
        o.expect(same_module(apply_shift(irrep_Wm(m, b), c), irrep_Wm(m, b + c)),
                 "m=" + std::to_string(m) + " b=" + to_string(b) + " c=" + to_string(c));
      }
    for (const auto& t : classical_types(6))
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<FundamentalFactor> f;
        const int len = std::uniform_int_distribution<int>(1, 5)(rng);
        for (int k = 0; k < len; ++k)
          f.push_back({std::uniform_int_distribution<int>(1, t.rank)(rng),
                       CRational(make_rational(std::uniform_int_distribution<int>(-8, 8)(rng), 2))});
        const TensorWord w(t, f);
        const TensorWord s = shift_word(w, random_param(rng, trial % 2 == 0));
        o.expect(is_cyclic(w).cyclic_guaranteed == is_cyclic(s).cyclic_guaranteed &&
                     is_irreducible(w).status == is_irreducible(s).status,
                 to_string(t) + " trial " + std::to_string(trial));
      }
  });

  criterion(12, "tensor product is coassociative on W_1 triples", 0, [](Outcome& o) {
    std::mt19937 rng(1012);
    for (int trial = 0; trial < 10; ++trial) {
      const Sl2Module a = irrep_Wm(1, random_param(rng)), b = irrep_Wm(1, random_param(rng, trial % 3 == 0)),
                      c = irrep_Wm(1, random_param(rng));
      o.expect(same_module(tensor(tensor(a, b), c), tensor(a, tensor(b, c))), "trial " + std::to_string(trial));
    }
  });

  criterion(13, "weyl_factorize output passes is_cyclic (100 tuples per type)", 0, [](Outcome& o) {
    std::mt19937 rng(1013);
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
      const int min_rank = f == Family::A ? 1 : (f == Family::D ? 3 : 2);
      for (int trial = 0; trial < 100; ++trial) {
        const LieType t{f, std::uniform_int_distribution<int>(min_rank, 8)(rng)};
        DrinfeldTuple tuple(t);
        const int degree = std::uniform_int_distribution<int>(1, 8)(rng);
        for (int k = 0; k < degree; ++k) {
          const int node = std::uniform_int_distribution<int>(1, t.rank)(rng);
          const CRational a(make_rational(std::uniform_int_distribution<int>(-10, 10)(rng), 2),
                            std::uniform_int_distribution<int>(0, 4)(rng) == 0 ? Rational(1) : Rational(0));
          tuple.polys[static_cast<std::size_t>(node - 1)].add_root(a);
        }
        const TensorWord w = weyl_factorize(tuple);
        o.expect(tuple_of_word(w) == tuple, to_string(t) + " trial " + std::to_string(trial) + " lost roots");
        o.expect(is_cyclic(w).cyclic_guaranteed, to_string(t) + " trial " + std::to_string(trial));
      }
    }
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
