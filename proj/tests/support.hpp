#pragma once

// Shared helpers for the test binaries: seeded random exact numbers and a
// plain Gaussian-elimination rank used as an oracle independent of Subspace.

#include <yangian/exact.hpp>
#include <yangian/matrix.hpp>

#include <random>
#include <vector>

namespace testing_support {

using yangian::CRational;
using yangian::Rational;

inline Rational random_rational(std::mt19937& rng, int num_range = 12, int max_den = 7) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, max_den);
  return yangian::make_rational(num(rng), den(rng));
}

inline CRational random_param(std::mt19937& rng, bool complex = false) {
  if (!complex) return CRational(random_rational(rng));
  return CRational(random_rational(rng), random_rational(rng));
}

inline std::size_t rank_of(std::vector<std::vector<CRational>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const CRational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<CRational> flatten(const yangian::ExactMatrix& m) {
  return {m.entries().begin(), m.entries().end()};
}

}  // namespace testing_support
