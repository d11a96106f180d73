#pragma once

// Cyclicity and irreducibility criteria for ordered tensor products of
// fundamental representations, the forbidden-difference tables S(b_m, b_n),
// the type-C root tables T(i, r_j) they derive from, the left dual, and the
// ordering that realizes a local Weyl module as an ordered tensor product.

#include "drinfeld.hpp"
#include "exact.hpp"
#include "rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

namespace yangian {

/// Finite set of strictly positive rationals.
class SSet {
public:
  SSet() = default;
  explicit SSet(std::set<Rational> values) : values_(std::move(values)) {
    for (const auto& v : values_)
      if (sgn(v) <= 0) throw Error("S-set member " + to_string(v) + " is not positive");
  }

  const std::set<Rational>& values() const { return values_; }
  bool contains(const Rational& q) const { return values_.count(q) != 0; }
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const SSet&, const SSet&) = default;

private:
  std::set<Rational> values_;
};

/// A root of the form scale * (a_1 + shift), a_1 the spectral parameter of the left factor.
struct TOffset {
  Rational scale;
  Rational shift;

  friend bool operator<(const TOffset& x, const TOffset& y) {
    if (x.scale != y.scale) return x.scale < y.scale;
    return x.shift < y.shift;
  }
  friend bool operator==(const TOffset& x, const TOffset& y) { return x.scale == y.scale && x.shift == y.shift; }
};

struct TSet {
  std::set<TOffset> offsets;
};

struct PairViolation {
  int m = 0;  // 1-based positions in the word
  int n = 0;
  CRational diff;
  Rational set_member;
};

struct CyclicityReport {
  bool cyclic_guaranteed = true;
  std::vector<PairViolation> violations;
};

enum class Irreducibility { IrreducibleGuaranteed, NotGuaranteed, ReducibleProven };

inline const char* to_string(Irreducibility s) {
  switch (s) {
    case Irreducibility::IrreducibleGuaranteed: return "IrreducibleGuaranteed";
    case Irreducibility::NotGuaranteed: return "NotGuaranteed";
    case Irreducibility::ReducibleProven: return "ReducibleProven";
  }
  return "?";
}

struct IrreducibilityVerdict {
  Irreducibility status = Irreducibility::IrreducibleGuaranteed;
  std::vector<PairViolation> evidence;
};

namespace detail {

inline Rational half(long n) { return make_rational(n, 2); }

inline SSet s_set_A(int l, int bm, int bn) {
  // Symmetric in (bm, bn) and under b -> l + 1 - b; agrees with the bound
  // min{bm, l - bn + 1} whenever bm <= bn.
  const int kmax = std::min({bm, bn, l + 1 - bm, l + 1 - bn});
  std::set<Rational> s;
  for (int k = 1; k <= kmax; ++k) s.insert(half(std::abs(bn - bm)) + k);
  return SSet(std::move(s));
}

inline SSet s_set_B(int l, int bm, int bn) {
  std::set<Rational> s;
  if (bm < l && bn < l) {
    for (int r = 0; r < std::min(bm, bn); ++r) {
      s.insert(Rational(std::abs(bm - bn) + 2 + 2 * r));
      s.insert(Rational(2 * l - (bm + bn) + 1 + 2 * r));
    }
  } else if (bm == l && bn < l) {
    for (int r = 0; r < bn; ++r) s.insert(Rational(l - bn + 2 + 2 * r));
  } else if (bm < l && bn == l) {
    for (int r = 0; r < bm; ++r) {
      s.insert(Rational(l - bm + 1 + r));
      s.insert(Rational(l - bm + r));
    }
  } else {
    for (int k = 1; k <= 2 * l - 1; k += 2) s.insert(Rational(k));
  }
  return SSet(std::move(s));
}

inline SSet s_set_C(int l, int bm, int bn) {
  std::set<Rational> s;
  if (bm < l && bn < l) {
    for (int r = 0; r < std::min(bm, bn); ++r) {
      s.insert(half(std::abs(bm - bn)) + 1 + r);
      s.insert(Rational(l + 2 + r) - half(bm + bn));
    }
  } else if (bm == l && bn < l) {
    for (int r = 0; r < bn; ++r) {
      s.insert(half(l - bn + 1) + 1 + r);
      s.insert(half(l - bn - 1) + 1 + r);
    }
  } else if (bm < l && bn == l) {
    for (int r = 0; r < bm; ++r) s.insert(half(l - bm + 1) + 2 + r);
  } else {
    for (int k = 2; k <= l + 1; ++k) s.insert(Rational(k));
  }
  return SSet(std::move(s));
}

inline SSet s_set_D(int l, int bm, int bn) {
  const bool spin_m = bm >= l - 1;
  const bool spin_n = bn >= l - 1;
  const int parity = l % 2;  // 0 for even l, 1 for odd l
  std::set<Rational> s;
  if (!spin_m && !spin_n) {
    for (int r = 0; r < std::min(bm, bn); ++r) {
      s.insert(half(std::abs(bm - bn)) + 1 + r);
      s.insert(Rational(l + r) - half(bm + bn));
    }
  } else if (spin_m != spin_n) {
    const int b = spin_m ? bn : bm;
    for (int r = 0; r < b; ++r) s.insert(half(l - 1 - b) + 1 + r);
  } else if (bm != bn) {
    for (int k = 2; k <= l - 2 + parity; k += 2) s.insert(Rational(k));
  } else {
    for (int k = 1; k <= l - 1 - parity; k += 2) s.insert(Rational(k));
  }
  return SSet(std::move(s));
}

}  // namespace detail

/// Forbidden values of a_n - a_m for a left factor at node bm and a right factor at node bn.
inline SSet s_set(const CartanData& data, int bm, int bn) {
  const int l = data.rank();
  check_node(l, bm);
  check_node(l, bn);
  switch (data.type.family) {
    case Family::A: return detail::s_set_A(l, bm, bn);
    case Family::B: return detail::s_set_B(l, bm, bn);
    case Family::C: return detail::s_set_C(l, bm, bn);
    case Family::D: return detail::s_set_D(l, bm, bn);
  }
  throw Error("unsupported family");
}

/// Type A with the range 1 <= k <= min{bm, l - bn + 1} exactly as tabulated.
/// Not symmetric under bm <-> bn once bm > bn; kept for comparison only.
inline SSet s_set_A_tabulated(int l, int bm, int bn) {
  check_node(l, bm);
  check_node(l, bn);
  std::set<Rational> s;
  for (int k = 1; k <= std::min(bm, l - bn + 1); ++k) s.insert(detail::half(std::abs(bn - bm)) + k);
  return SSet(std::move(s));
}

/// Type C: possible roots of the sl2 polynomial met at node rj while lowering
/// the highest weight vector of V_{a_1}(omega_i).
inline TSet t_set_C(const CartanData& data, int i, int rj) {
  if (data.type.family != Family::C) throw Error("T-sets are tabulated for type C only");
  const int l = data.rank();
  check_node(l, i);
  check_node(l, rj);
  using detail::half;
  const Rational one(1);
  const Rational half_one = half(1);
  TSet t;
  if (i < l && rj < l) {
    for (int r = 0; r < std::min(i, rj); ++r) {
      t.offsets.insert({one, half(std::abs(i - rj)) + r});
      t.offsets.insert({one, Rational(l + 1 + r) - half(i + rj)});
    }
  } else if (i < l && rj == l) {
    for (int r = 0; r < i; ++r) t.offsets.insert({half_one, half(l - i + 1) + r});
  } else if (i == l && rj < l) {
    for (int r = 0; r < rj; ++r) {
      t.offsets.insert({one, half(l - rj + 1) + r});
      t.offsets.insert({one, half(l - rj - 1) + r});
    }
  } else {
    for (int k = 0; k < l; ++k) t.offsets.insert({half_one, Rational(k)});
  }
  return t;
}

/// Recovers S(bm, bn) from T(bm, bn): a_n must avoid d_bn (1 + root), so the
/// forbidden differences are d_bn (1 + scale (a_1 + shift)) - a_1, where d_bn * scale = 1.
inline SSet derive_s_from_t(const CartanData& data, int bm, int bn) {
  TSet t = t_set_C(data, bm, bn);
  const Rational d(data.d(bn));
  std::set<Rational> s;
  for (const auto& off : t.offsets) {
    if (d * off.scale != 1) throw Error("T-set entry scale is incompatible with the symmetrizer");
    s.insert(d * (1 + off.scale * off.shift));
  }
  return SSet(std::move(s));
}

inline bool forbidden(const SSet& s, const CRational& diff) { return diff.is_real() && s.contains(diff.re); }

inline CyclicityReport is_cyclic(const TensorWord& w) {
  const CartanData data = cartan_data(w.type);
  CyclicityReport report;
  const int k = static_cast<int>(w.size());
  for (int m = 1; m <= k; ++m)
    for (int n = m + 1; n <= k; ++n) {
      const auto& fm = w.factors[static_cast<std::size_t>(m - 1)];
      const auto& fn = w.factors[static_cast<std::size_t>(n - 1)];
      CRational diff = fn.param - fm.param;
      if (forbidden(s_set(data, fm.node, fn.node), diff)) report.violations.push_back({m, n, diff, diff.re});
    }
  report.cyclic_guaranteed = report.violations.empty();
  return report;
}

inline IrreducibilityVerdict is_irreducible(const TensorWord& w) {
  const CartanData data = cartan_data(w.type);
  IrreducibilityVerdict verdict;
  const int k = static_cast<int>(w.size());
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      const auto& fi = w.factors[static_cast<std::size_t>(i - 1)];
      const auto& fj = w.factors[static_cast<std::size_t>(j - 1)];
      CRational diff = fj.param - fi.param;
      if (forbidden(s_set(data, fi.node, fj.node), diff)) verdict.evidence.push_back({i, j, diff, diff.re});
    }
  if (verdict.evidence.empty())
    verdict.status = Irreducibility::IrreducibleGuaranteed;
  else if (w.type.family == Family::A)
    verdict.status = Irreducibility::ReducibleProven;
  else
    verdict.status = Irreducibility::NotGuaranteed;
  return verdict;
}

/// Left dual: factors reversed, nodes through -w0, parameters shifted by -kappa.
/// kappa is half the dual Coxeter number in the normalization of cartan_data.
inline TensorWord left_dual(const TensorWord& w) {
  const CartanData data = cartan_data(w.type);
  std::vector<FundamentalFactor> out;
  out.reserve(w.size());
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
    out.push_back({data.dual_node(it->node), it->param - CRational(data.kappa)});
  return TensorWord(w.type, std::move(out));
}

/// Orders all (node, root) pairs by non-increasing real part, then non-increasing
/// imaginary part, then ascending node.
inline TensorWord weyl_factorize(const DrinfeldTuple& t) {
  std::vector<FundamentalFactor> f;
  for (int node = 1; node <= t.type.rank; ++node)
    for (const auto& a : t.poly(node).roots()) f.push_back({node, a});
  if (f.empty()) throw Error("cannot factorize a tuple with no roots");
  std::stable_sort(f.begin(), f.end(), [](const FundamentalFactor& x, const FundamentalFactor& y) {
    if (x.param != y.param) return real_part_greater(x.param, y.param);
    return x.node < y.node;
  });
  return TensorWord(t.type, std::move(f));
}

}  // namespace yangian
