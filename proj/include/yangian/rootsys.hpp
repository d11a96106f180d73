#pragma once

// Classical root systems: Cartan matrices, symmetrizers, Weyl group action on
// weights, longest-element reduced words, the -w0 diagram involution and the
// dual Coxeter number.

#include "exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace yangian {

enum class Family { A, B, C, D };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

struct LieType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const LieType&, const LieType&) = default;
};

inline void validate(const LieType& t) {
  int min_rank = 1;
  if (t.family == Family::B || t.family == Family::C) min_rank = 2;
  if (t.family == Family::D) min_rank = 3;
  if (t.rank < min_rank)
    throw Error(std::string("rank ") + std::to_string(t.rank) + " is invalid for type " + family_letter(t.family) +
                " (minimum " + std::to_string(min_rank) + ")");
}

inline LieType make_type(Family f, int rank) {
  LieType t{f, rank};
  validate(t);
  return t;
}

inline std::string to_string(const LieType& t) { return family_letter(t.family) + std::to_string(t.rank); }

/// Parses "A3", "c4", ... case-insensitively.
inline LieType parse_type(std::string_view s) {
  if (s.size() < 2) throw Error("malformed Lie type '" + std::string(s) + "'");
  Family f;
  switch (std::toupper(static_cast<unsigned char>(s.front()))) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    default: throw Error("unsupported Lie type '" + std::string(s) + "'");
  }
  std::string_view digits = s.substr(1);
  if (!detail::all_digits(digits) || digits.size() > 6)
    throw Error("malformed Lie type '" + std::string(s) + "'");
  return make_type(f, std::stoi(std::string(digits)));
}

using IntMatrix = std::vector<std::vector<int>>;

/// Coefficients in the fundamental-weight basis.
struct WeightVector {
  std::vector<int> coords;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

inline WeightVector fundamental_weight(int rank, int i) {
  WeightVector w{std::vector<int>(static_cast<std::size_t>(rank), 0)};
  w.coords.at(static_cast<std::size_t>(i - 1)) = 1;
  return w;
}

// Nodes are 1-based throughout. matrix[i][j] = a_ij = <alpha_i^vee, alpha_j>,
// so alpha_j = sum_i a_ij omega_i (column j in the fundamental-weight basis).
struct CartanData {
  LieType type;
  IntMatrix matrix;
  std::vector<int> symmetrizers;
  Rational kappa;
  std::vector<int> involution;  // involution[i-1] = -w0(i)
  std::vector<int> longest_word;
  int num_positive_roots = 0;

  int rank() const { return type.rank; }
  int a(int i, int j) const { return matrix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
  int d(int i) const { return symmetrizers[static_cast<std::size_t>(i - 1)]; }
  int dual_node(int i) const { return involution[static_cast<std::size_t>(i - 1)]; }
};

namespace detail {

inline IntMatrix cartan_matrix(const LieType& t) {
  const int l = t.rank;
  IntMatrix m(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l), 0));
  auto at = [&](int i, int j) -> int& { return m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; };
  for (int i = 1; i <= l; ++i) at(i, i) = 2;
  if (t.family == Family::D) {
    for (int i = 1; i + 1 <= l - 1; ++i) at(i, i + 1) = at(i + 1, i) = -1;
    at(l - 2, l) = at(l, l - 2) = -1;
    return m;
  }
  for (int i = 1; i < l; ++i) at(i, i + 1) = at(i + 1, i) = -1;
  if (t.family == Family::B) at(l, l - 1) = -2;  // alpha_l short
  if (t.family == Family::C) at(l - 1, l) = -2;  // alpha_l long
  return m;
}

inline std::vector<int> symmetrizers(const LieType& t) {
  const auto l = static_cast<std::size_t>(t.rank);
  std::vector<int> d(l, 1);
  if (t.family == Family::B)
    for (std::size_t i = 0; i + 1 < l; ++i) d[i] = 2;
  if (t.family == Family::C) d[l - 1] = 2;
  return d;
}

inline std::vector<int> longest_word(const LieType& t) {
  const int l = t.rank;
  std::vector<int> w;
  switch (t.family) {
    case Family::A:
      // (s1)(s2 s1)(s3 s2 s1)...(sl ... s1)
      for (int k = 1; k <= l; ++k)
        for (int j = k; j >= 1; --j) w.push_back(j);
      break;
    case Family::B:
    case Family::C:
      // s_l (s_{l-1} s_l s_{l-1}) ... (s_1 ... s_l ... s_1)
      for (int k = l; k >= 1; --k) {
        for (int j = k; j <= l; ++j) w.push_back(j);
        for (int j = l - 1; j >= k; --j) w.push_back(j);
      }
      break;
    case Family::D:
      // s_l s_{l-1} (s_{l-2} s_l s_{l-1} s_{l-2}) ... (s_1 ... s_{l-2} s_l s_{l-1} s_{l-2} ... s_1)
      w.push_back(l);
      w.push_back(l - 1);
      for (int k = l - 2; k >= 1; --k) {
        for (int j = k; j <= l - 2; ++j) w.push_back(j);
        w.push_back(l);
        w.push_back(l - 1);
        for (int j = l - 2; j >= k; --j) w.push_back(j);
      }
      break;
  }
  return w;
}

// Positive roots in simple-root coordinates, by closing the simple roots under
// simple reflections s_i(beta) = beta - <alpha_i^vee, beta> alpha_i.
inline std::vector<std::vector<int>> positive_roots(const IntMatrix& a) {
  const std::size_t l = a.size();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (std::size_t i = 0; i < l; ++i) {
        int pairing = 0;
        for (std::size_t j = 0; j < l; ++j) pairing += a[i][j] * beta[j];
        std::vector<int> image = beta;
        image[i] -= pairing;
        bool positive = std::all_of(image.begin(), image.end(), [](int c) { return c >= 0; });
        bool nonzero = std::any_of(image.begin(), image.end(), [](int c) { return c != 0; });
        if (positive && nonzero && seen.insert(image).second) next.push_back(image);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

inline void check_node(int rank, int node) {
  if (node < 1 || node > rank)
    throw Error("node " + std::to_string(node) + " out of range 1.." + std::to_string(rank));
}

/// Image of w under s_{word[0]} s_{word[1]} ... s_{word[p-1]} (rightmost acts first).
inline WeightVector weyl_apply(const CartanData& data, const std::vector<int>& word, WeightVector w) {
  const int l = data.rank();
  if (static_cast<int>(w.coords.size()) != l) throw Error("weight has wrong length");
  for (int node : word) check_node(l, node);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int j = *it;
    const int coeff = w.coords[static_cast<std::size_t>(j - 1)];
    if (coeff == 0) continue;
    for (int i = 1; i <= l; ++i) w.coords[static_cast<std::size_t>(i - 1)] -= coeff * data.a(i, j);
  }
  return w;
}

/// Half the dual Coxeter number, computed from the highest root.
inline Rational kappa_of(const IntMatrix& a, const std::vector<int>& d) {
  auto roots = detail::positive_roots(a);
  auto height = [](const std::vector<int>& r) { return std::accumulate(r.begin(), r.end(), 0); };
  const auto& theta = *std::max_element(roots.begin(), roots.end(),
                                        [&](const auto& x, const auto& y) { return height(x) < height(y); });
  // theta is long; its coroot has coefficients theta_i * d_i / d_max on the simple coroots.
  const int d_max = *std::max_element(d.begin(), d.end());
  Rational h_dual = 1;
  for (std::size_t i = 0; i < theta.size(); ++i) h_dual += Rational(theta[i] * d[i], d_max);
  h_dual.canonicalize();
  return h_dual / 2;
}

inline CartanData cartan_data(const LieType& type) {
  validate(type);
  CartanData data;
  data.type = type;
  data.matrix = detail::cartan_matrix(type);
  data.symmetrizers = detail::symmetrizers(type);
  data.longest_word = detail::longest_word(type);
  data.num_positive_roots = static_cast<int>(detail::positive_roots(data.matrix).size());
  data.kappa = kappa_of(data.matrix, data.symmetrizers);

  const int l = type.rank;
  data.involution.assign(static_cast<std::size_t>(l), 0);
  for (int i = 1; i <= l; ++i) {
    WeightVector img = weyl_apply(data, data.longest_word, fundamental_weight(l, i));
    int found = 0;
    for (int j = 1; j <= l && found == 0; ++j) {
      WeightVector neg = fundamental_weight(l, j);
      neg.coords[static_cast<std::size_t>(j - 1)] = -1;
      if (img == neg) found = j;
    }
    if (found == 0) throw Error("longest word does not map omega_" + std::to_string(i) + " to minus a fundamental weight");
    data.involution[static_cast<std::size_t>(i - 1)] = found;
  }
  return data;
}

inline Rational kappa(const LieType& type) { return cartan_data(type).kappa; }

}  // namespace yangian
