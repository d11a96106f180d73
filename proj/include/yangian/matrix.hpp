#pragma once

// Dense square matrices over complex rationals and an incrementally
// row-reduced subspace used by the closure and saturation oracles.

#include "exact.hpp"

#include <map>
#include <span>
#include <vector>

namespace yangian {

using ExactVector = std::vector<CRational>;

class ExactMatrix {
public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), data_(n * n) {
    if (n == 0) throw Error("matrix dimension must be positive");
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t dim() const { return n_; }
  CRational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const CRational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const CRational> entries() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  ExactMatrix& operator+=(const ExactMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
    return *this;
  }
  ExactMatrix& operator-=(const ExactMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
    return *this;
  }
  ExactMatrix& operator*=(const CRational& c) {
    for (auto& x : data_)
      if (!x.is_zero()) x *= c;
    return *this;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const CRational& c, ExactMatrix a) { return a *= c; }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    a.check_same(b);
    const std::size_t n = a.n_;
    ExactMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const CRational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const CRational& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend ExactVector operator*(const ExactMatrix& a, const ExactVector& v) {
    if (v.size() != a.n_) throw Error("vector length does not match matrix dimension");
    ExactVector r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
    return r;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

private:
  void check_same(const ExactMatrix& o) const {
    if (o.n_ != n_) throw Error("matrix dimension mismatch");
  }

  std::size_t n_ = 0;
  std::vector<CRational> data_;
};

inline ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }
inline ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b + b * a; }

/// Kronecker product; the left factor's index varies slowest.
inline ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t p = a.dim(), q = b.dim();
  ExactMatrix r(p * q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < q; ++k)
        for (std::size_t l = 0; l < q; ++l)
          if (!b(k, l).is_zero()) r(i * q + k, j * q + l) = a(i, j) * b(k, l);
    }
  return r;
}

inline ExactVector basis_vector(std::size_t n, std::size_t i) {
  ExactVector v(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const ExactVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Span of inserted vectors, kept in reduced row echelon form.
class Subspace {
public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<ExactVector>& basis() const { return rows_; }

  /// Residue of v after eliminating every pivot column.
  ExactVector reduce(ExactVector v) const {
    if (v.size() != ambient_) throw Error("vector length does not match subspace ambient dimension");
    for (const auto& [col, idx] : pivots_) {
      if (v[col].is_zero()) continue;
      const CRational c = v[col];
      const ExactVector& row = rows_[idx];
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!row[j].is_zero()) v[j] -= c * row[j];
    }
    return v;
  }

  bool contains(const ExactVector& v) const { return is_zero(reduce(v)); }

  /// Adds v to the span. Returns false when v was already in it.
  bool insert(const ExactVector& v) {
    ExactVector r = reduce(v);
    std::size_t pivot = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!r[j].is_zero()) {
        pivot = j;
        break;
      }
    if (pivot == ambient_) return false;
    const CRational inv = CRational(1) / r[pivot];
    for (auto& x : r)
      if (!x.is_zero()) x *= inv;
    for (auto& row : rows_) {
      if (row[pivot].is_zero()) continue;
      const CRational c = row[pivot];
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!r[j].is_zero()) row[j] -= c * r[j];
    }
    pivots_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

private:
  std::size_t ambient_;
  std::vector<ExactVector> rows_;
  std::map<std::size_t, std::size_t> pivots_;  // pivot column -> row index
};

}  // namespace yangian
