#pragma once

// Finite-dimensional Y(sl2) modules as four exact generator matrices
// (x0+, x0-, h0, hbar1 = h1 - h0^2/2). Higher modes come from the ladder
// [hbar1, x_k^{+-}] = +-2 x_{k+1}^{+-} and h_k = [x_k^+, x0^-]. Tensor products
// use the coproduct on the generating set, which is exact:
//   D(x0^{+-}) = x0^{+-} (x) 1 + 1 (x) x0^{+-},   D(h0) likewise,
//   D(hbar1) = hbar1 (x) 1 + 1 (x) hbar1 - 2 x0^- (x) x0^+.

#include "exact.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

namespace yangian {

struct Sl2Module {
  ExactMatrix xp;     // x0^+
  ExactMatrix xm;     // x0^-
  ExactMatrix h0;
  ExactMatrix hbar1;  // h1 - h0^2 / 2
  std::vector<std::string> labels;
  std::size_t top_index = 0;

  std::size_t dim() const { return xp.dim(); }
};

/// Violated generator identities: [h0, x0^{+-}] = +-2 x0^{+-}, [x0^+, x0^-] = h0, [h0, hbar1] = 0.
inline std::vector<std::string> generator_violations(const Sl2Module& m) {
  std::vector<std::string> bad;
  const std::size_t n = m.dim();
  if (m.xm.dim() != n || m.h0.dim() != n || m.hbar1.dim() != n) {
    bad.emplace_back("generator dimensions differ");
    return bad;
  }
  if (commutator(m.h0, m.xp) != CRational(2) * m.xp) bad.emplace_back("[h_0,x_0^+]=2x_0^+");
  if (commutator(m.h0, m.xm) != CRational(-2) * m.xm) bad.emplace_back("[h_0,x_0^-]=-2x_0^-");
  if (commutator(m.xp, m.xm) != m.h0) bad.emplace_back("[x_0^+,x_0^-]=h_0");
  if (!commutator(m.h0, m.hbar1).is_zero()) bad.emplace_back("[h_0,hbar_1]=0");
  return bad;
}

/// W_m(a): basis w_0..w_m with
///   x_k^+ w_s = (s+a)^k (s+1) w_{s+1},  x_k^- w_s = (s+a-1)^k (m-s+1) w_{s-1},
///   h_k w_s = ((s+a-1)^k s(m-s+1) - (s+a)^k (s+1)(m-s)) w_s.
/// Only k = 0, 1 are used here; w_m is the highest weight vector.
inline Sl2Module irrep_Wm(int m, const CRational& a) {
  if (m < 1) throw Error("W_m(a) requires m >= 1");
  const auto n = static_cast<std::size_t>(m) + 1;
  Sl2Module mod{ExactMatrix(n), ExactMatrix(n), ExactMatrix(n), ExactMatrix(n), {}, static_cast<std::size_t>(m)};
  for (int s = 0; s <= m; ++s) {
    const auto i = static_cast<std::size_t>(s);
    if (s < m) mod.xp(i + 1, i) = CRational(s + 1);
    if (s > 0) mod.xm(i - 1, i) = CRational(m - s + 1);
    const long h0 = 2L * s - m;
    mod.h0(i, i) = CRational(h0);
    const CRational h1 = (CRational(s - 1) + a) * CRational(static_cast<long>(s) * (m - s + 1)) -
                         (CRational(s) + a) * CRational(static_cast<long>(s + 1) * (m - s));
    mod.hbar1(i, i) = h1 - CRational(make_rational(h0 * h0, 2));
    mod.labels.push_back("w" + std::to_string(s));
  }
  return mod;
}

inline Sl2Module tensor(const Sl2Module& m, const Sl2Module& n) {
  const ExactMatrix im = ExactMatrix::identity(m.dim());
  const ExactMatrix in = ExactMatrix::identity(n.dim());
  Sl2Module r{kron(m.xp, in) + kron(im, n.xp),
              kron(m.xm, in) + kron(im, n.xm),
              kron(m.h0, in) + kron(im, n.h0),
              kron(m.hbar1, in) + kron(im, n.hbar1) - CRational(2) * kron(m.xm, n.xp),
              {},
              m.top_index * n.dim() + n.top_index};
  r.labels.reserve(r.dim());
  for (const auto& a : m.labels)
    for (const auto& b : n.labels) r.labels.push_back(a + "|" + b);
  return r;
}

/// x_k^{+-} and h_k for 0 <= k <= cutoff.
struct ModeOperators {
  std::vector<ExactMatrix> xp;
  std::vector<ExactMatrix> xm;
  std::vector<ExactMatrix> h;

  int cutoff() const { return static_cast<int>(xp.size()) - 1; }
};

inline ModeOperators mode_operators(const Sl2Module& m, int cutoff) {
  if (cutoff < 0) throw Error("mode cutoff must be non-negative");
  ModeOperators ops;
  ops.xp.push_back(m.xp);
  ops.xm.push_back(m.xm);
  const CRational half = make_rational(1, 2);
  for (int k = 0; k < cutoff; ++k) {
    ops.xp.push_back(half * commutator(m.hbar1, ops.xp.back()));
    ops.xm.push_back(-half * commutator(m.hbar1, ops.xm.back()));
  }
  for (const auto& x : ops.xp) ops.h.push_back(commutator(x, m.xm));
  return ops;
}

/// Names of the rank-1 defining relations that fail among modes r, s <= cutoff.
inline std::vector<std::string> check_relations(const Sl2Module& m, int cutoff) {
  if (cutoff < 0) throw Error("mode cutoff must be non-negative");
  std::vector<std::string> bad = generator_violations(m);
  if (!bad.empty() && bad.front() == "generator dimensions differ") return bad;

  const ModeOperators ops = mode_operators(m, 2 * cutoff + 1);
  auto name = [](std::string family, int r, int s) {
    return family + "(r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";
  };
  const std::vector<const std::vector<ExactMatrix>*> signs_x{&ops.xp, &ops.xm};
  for (int r = 0; r <= cutoff; ++r)
    for (int s = 0; s <= cutoff; ++s) {
      const auto ur = static_cast<std::size_t>(r), us = static_cast<std::size_t>(s);
      if (!commutator(ops.h[ur], ops.h[us]).is_zero()) bad.push_back(name("[h_r,h_s]=0", r, s));
      if (commutator(ops.xp[ur], ops.xm[us]) != ops.h[ur + us]) bad.push_back(name("[x_r^+,x_s^-]=h_{r+s}", r, s));
      for (int sign = 0; sign < 2; ++sign) {
        const auto& x = *signs_x[static_cast<std::size_t>(sign)];
        const CRational eps(sign == 0 ? 1 : -1);
        const std::string pm = sign == 0 ? "+" : "-";
        if (r == 0 && commutator(ops.h[0], x[us]) != CRational(2) * eps * x[us])
          bad.push_back(name("[h_0,x_s^" + pm + "]", r, s));
        if (commutator(ops.h[ur + 1], x[us]) - commutator(ops.h[ur], x[us + 1]) !=
            eps * anticommutator(ops.h[ur], x[us]))
          bad.push_back(name("[h_{r+1},x_s^" + pm + "]-[h_r,x_{s+1}^" + pm + "]", r, s));
        if (commutator(x[ur + 1], x[us]) - commutator(x[ur], x[us + 1]) != eps * anticommutator(x[ur], x[us]))
          bad.push_back(name("[x_{r+1}^" + pm + ",x_s^" + pm + "]-[x_r^" + pm + ",x_{s+1}^" + pm + "]", r, s));
      }
    }
  return bad;
}

struct Closure {
  std::size_t dim = 0;
  std::vector<ExactVector> basis;
};

/// Smallest subspace containing the top vector and stable under the four generators.
inline Closure hw_closure(const Sl2Module& m) {
  const std::size_t n = m.dim();
  if (m.top_index >= n) throw Error("top_index out of range");
  const ExactMatrix* gens[] = {&m.xp, &m.xm, &m.h0, &m.hbar1};
  Subspace span(n);
  std::deque<ExactVector> pending;
  ExactVector top = basis_vector(n, m.top_index);
  span.insert(top);
  pending.push_back(std::move(top));
  std::size_t processed = 0;
  while (!pending.empty()) {
    if (++processed > n) throw Error("closure fixpoint did not terminate");
    ExactVector v = std::move(pending.front());
    pending.pop_front();
    for (const ExactMatrix* g : gens) {
      ExactVector image = *g * v;
      if (span.insert(image)) pending.push_back(std::move(image));
    }
  }
  return {span.dim(), span.basis()};
}

namespace detail {

inline ExactVector flatten(const ExactMatrix& a) { return {a.entries().begin(), a.entries().end()}; }

inline ExactMatrix unflatten(const ExactVector& v, std::size_t n) {
  ExactMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = v[i * n + j];
  return a;
}

}  // namespace detail

/// Dimension of the unital associative algebra generated by the four generators.
/// Equals dim^2 exactly when the module is irreducible (Burnside).
inline std::size_t burnside_dim(const Sl2Module& m) {
  const std::size_t n = m.dim();
  const ExactMatrix* gens[] = {&m.xp, &m.xm, &m.h0, &m.hbar1};
  Subspace algebra(n * n);
  std::deque<ExactMatrix> pending;
  ExactMatrix id = ExactMatrix::identity(n);
  algebra.insert(detail::flatten(id));
  pending.push_back(std::move(id));
  std::size_t processed = 0;
  // Words in the generators are spanned by G * (basis element), so left products suffice.
  while (!pending.empty() && algebra.dim() < n * n) {
    if (++processed > n * n) throw Error("algebra saturation did not terminate");
    ExactMatrix e = std::move(pending.front());
    pending.pop_front();
    for (const ExactMatrix* g : gens) {
      ExactMatrix p = *g * e;
      if (algebra.insert(detail::flatten(p))) pending.push_back(std::move(p));
    }
  }
  return algebra.dim();
}

/// Pullback through the shift automorphism tau_c: hbar1 -> hbar1 + c h0.
inline Sl2Module apply_shift(const Sl2Module& m, const CRational& c) {
  Sl2Module r = m;
  r.hbar1 += c * m.h0;
  return r;
}

/// W_1(a_1) (x) ... (x) W_1(a_m) with Re(a_1) >= ... >= Re(a_m).
inline Sl2Module local_weyl_sl2(std::vector<CRational> roots) {
  if (roots.empty()) throw Error("local Weyl module needs at least one root");
  std::stable_sort(roots.begin(), roots.end(), real_part_greater);
  Sl2Module acc = irrep_Wm(1, roots.front());
  for (std::size_t i = 1; i < roots.size(); ++i) acc = tensor(acc, irrep_Wm(1, roots[i]));
  return acc;
}

}  // namespace yangian
