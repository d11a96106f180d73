#pragma once

// Dimensions of local Weyl modules from the dimensions of the fundamental
// modules: Dim W(pi) = prod_i Dim(W(omega_i))^{m_i}.

#include "criteria.hpp"
#include "drinfeld.hpp"
#include "rootsys.hpp"

#include <map>

namespace yangian {

enum class TableSource { Builtin, User };

struct FundamentalDimTable {
  LieType type;
  std::map<int, Integer> dims;  // node -> dimension
  TableSource source = TableSource::User;
};

inline Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Built-in only for type A: Dim V(omega_i) = binomial(l + 1, i).
inline bool has_builtin_table(const LieType& t) { return t.family == Family::A; }

inline FundamentalDimTable builtin_dim_table(const LieType& t) {
  validate(t);
  if (!has_builtin_table(t))
    throw Error("no built-in fundamental dimensions for type " + to_string(t) + "; supply a table");
  FundamentalDimTable table{t, {}, TableSource::Builtin};
  for (int i = 1; i <= t.rank; ++i) table.dims[i] = binomial(t.rank + 1, i);
  return table;
}

inline FundamentalDimTable user_dim_table(const LieType& t, std::map<int, Integer> dims) {
  validate(t);
  for (const auto& [node, d] : dims) {
    check_node(t.rank, node);
    if (sgn(d) <= 0) throw Error("fundamental dimension for node " + std::to_string(node) + " must be positive");
  }
  return {t, std::move(dims), TableSource::User};
}

namespace detail {

inline const Integer& table_entry(const FundamentalDimTable& table, int node) {
  auto it = table.dims.find(node);
  if (it == table.dims.end()) throw Error("dimension table has no entry for node " + std::to_string(node));
  return it->second;
}

inline void check_table_type(const DrinfeldTuple& t, const FundamentalDimTable& table) {
  if (!(t.type == table.type))
    throw Error("dimension table is for " + to_string(table.type) + " but tuple is " + to_string(t.type));
}

}  // namespace detail

inline Integer dim_local_weyl(const DrinfeldTuple& t, const FundamentalDimTable& table) {
  detail::check_table_type(t, table);
  Integer total = 1;
  for (int node = 1; node <= t.type.rank; ++node) {
    const auto m = t.poly(node).degree();
    if (m == 0) continue;
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), detail::table_entry(table, node).get_mpz_t(), m);
    total *= p;
  }
  return total;
}

struct DimBoundReport {
  Integer weyl_dim;  // product of the factor dimensions of the ordered tensor product
  Integer bound;     // prod_i Dim(W(omega_i))^{m_i}
};

/// weyl_dim is read off the factorized word, bound from the degrees; they must agree.
inline DimBoundReport dim_bound_report(const DrinfeldTuple& t, const FundamentalDimTable& table) {
  detail::check_table_type(t, table);
  DimBoundReport r{1, dim_local_weyl(t, table)};
  if (t.total_degree() > 0)
    for (const auto& f : weyl_factorize(t).factors) r.weyl_dim *= detail::table_entry(table, f.node);
  if (r.weyl_dim != r.bound) throw Error("local Weyl dimension disagrees with the product bound");
  return r;
}

}  // namespace yangian
