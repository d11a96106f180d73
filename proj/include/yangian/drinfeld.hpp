#pragma once

// Drinfeld polynomials stored as root multisets, l-tuples of them, ordered
// tensor words of fundamental factors, and the Laurent expansion of the
// highest weight pi(u + d) / pi(u) about u = infinity.

#include "exact.hpp"
#include "rootsys.hpp"

#include <algorithm>
#include <vector>

namespace yangian {

/// prod_a (u - a), kept as the multiset of roots in canonical (re, im) order.
class MonicPoly {
public:
  MonicPoly() = default;
  explicit MonicPoly(std::vector<CRational> roots) : roots_(std::move(roots)) {
    std::sort(roots_.begin(), roots_.end(), lex_less);
  }

  const std::vector<CRational>& roots() const { return roots_; }
  std::size_t degree() const { return roots_.size(); }

  void add_root(CRational a) {
    auto pos = std::upper_bound(roots_.begin(), roots_.end(), a, lex_less);
    roots_.insert(pos, std::move(a));
  }

  friend MonicPoly operator*(const MonicPoly& p, const MonicPoly& q) {
    std::vector<CRational> r = p.roots_;
    r.insert(r.end(), q.roots_.begin(), q.roots_.end());
    return MonicPoly(std::move(r));
  }

  friend bool operator==(const MonicPoly& p, const MonicPoly& q) { return p.roots_ == q.roots_; }

private:
  std::vector<CRational> roots_;
};

struct DrinfeldTuple {
  LieType type;
  std::vector<MonicPoly> polys;  // polys[i-1] belongs to node i

  DrinfeldTuple() = default;
  DrinfeldTuple(LieType t, std::vector<MonicPoly> p) : type(t), polys(std::move(p)) {
    validate(type);
    if (static_cast<int>(polys.size()) != type.rank) throw Error("Drinfeld tuple length must equal the rank");
  }
  explicit DrinfeldTuple(LieType t) : DrinfeldTuple(t, std::vector<MonicPoly>(static_cast<std::size_t>(t.rank))) {}

  const MonicPoly& poly(int node) const { return polys.at(static_cast<std::size_t>(node - 1)); }
  std::size_t total_degree() const {
    std::size_t n = 0;
    for (const auto& p : polys) n += p.degree();
    return n;
  }

  friend bool operator==(const DrinfeldTuple&, const DrinfeldTuple&) = default;
};

/// One tensor factor V_a(omega_node).
struct FundamentalFactor {
  int node = 1;
  CRational param;

  friend bool operator==(const FundamentalFactor&, const FundamentalFactor&) = default;
};

/// Ordered tensor product V_{a_1}(omega_{b_1}) (x) ... (x) V_{a_k}(omega_{b_k}).
struct TensorWord {
  LieType type;
  std::vector<FundamentalFactor> factors;

  TensorWord() = default;
  TensorWord(LieType t, std::vector<FundamentalFactor> f) : type(t), factors(std::move(f)) {
    validate(type);
    if (factors.empty()) throw Error("tensor word must have at least one factor");
    for (const auto& x : factors) check_node(type.rank, x.node);
  }

  std::size_t size() const { return factors.size(); }

  friend bool operator==(const TensorWord&, const TensorWord&) = default;
};

/// 1 + sum_{k>=1} c_k u^{-k}, stored as c_0 = 1, c_1, ..., c_order.
/// c_{k+1} is the highest-weight coefficient mu_k.
struct LaurentSeries {
  std::vector<CRational> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;
};

inline LaurentSeries truncated_product(const LaurentSeries& f, const LaurentSeries& g) {
  const std::size_t n = std::min(f.coeffs.size(), g.coeffs.size());
  LaurentSeries r{std::vector<CRational>(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) {
      if (f.coeffs[i].is_zero() || g.coeffs[j].is_zero()) continue;
      r.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
    }
  return r;
}

/// Expansion of pi(u + d) / pi(u) through the u^{-order} term.
///
/// Each root contributes (u - (a - d)) / (u - a) = 1 + sum_{k>=1} d a^{k-1} u^{-k},
/// and the factors are multiplied as truncated series.
inline LaurentSeries mu_series(const MonicPoly& p, int d, int order) {
  if (order < 0) throw Error("series order must be non-negative");
  if (d <= 0) throw Error("symmetrizer must be positive");
  const auto n = static_cast<std::size_t>(order) + 1;
  LaurentSeries result{std::vector<CRational>(n)};
  result.coeffs[0] = 1;
  for (const auto& a : p.roots()) {
    LaurentSeries factor{std::vector<CRational>(n)};
    factor.coeffs[0] = 1;
    CRational term(d);
    for (std::size_t k = 1; k < n; ++k) {
      factor.coeffs[k] = term;
      term *= a;
    }
    result = truncated_product(result, factor);
  }
  return result;
}

inline int default_series_order(std::size_t total_degree) { return 2 * static_cast<int>(total_degree) + 2; }

inline DrinfeldTuple tuple_of_word(const TensorWord& w) {
  DrinfeldTuple t(w.type);
  for (const auto& f : w.factors) t.polys[static_cast<std::size_t>(f.node - 1)].add_root(f.param);
  return t;
}

inline DrinfeldTuple shift_tuple(const DrinfeldTuple& t, const CRational& c) {
  DrinfeldTuple r(t.type);
  for (std::size_t i = 0; i < t.polys.size(); ++i) {
    std::vector<CRational> roots;
    roots.reserve(t.polys[i].degree());
    for (const auto& a : t.polys[i].roots()) roots.push_back(a + c);
    r.polys[i] = MonicPoly(std::move(roots));
  }
  return r;
}

inline TensorWord shift_word(const TensorWord& w, const CRational& c) {
  TensorWord r = w;
  for (auto& f : r.factors) f.param += c;
  return r;
}

}  // namespace yangian
