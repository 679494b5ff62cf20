#ifndef SOLVCERT_LINALG_HPP
#define SOLVCERT_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "solvcert/errors.hpp"

// Exact linear algebra over a field F (see field.hpp). Vectors are dense for
// reduction and sparse for storage; pivots are the first nonzero column, so the
// column numbering decides which entries lead.

namespace solvcert {

template <class F>
using SparseRow = std::vector<std::pair<std::size_t, typename F::value_type>>;

template <class F>
SparseRow<F> to_sparse(const F& field, const std::vector<typename F::value_type>& dense) {
  SparseRow<F> out;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (!field.is_zero(dense[c])) out.emplace_back(c, dense[c]);
  return out;
}

template <class F>
std::vector<typename F::value_type> to_dense(const F& field, const SparseRow<F>& row, std::size_t n_cols) {
  std::vector<typename F::value_type> out(n_cols, field.zero());
  for (const auto& [c, v] : row) out.at(c) = v;
  return out;
}

/// Incrementally maintained row echelon form. Each stored row is monic at its
/// pivot and has no entries left of it.
template <class F>
class EchelonBasis {
 public:
  using Scalar = typename F::value_type;

  EchelonBasis(F field, std::size_t n_cols) : field_(std::move(field)), n_cols_(n_cols), pivot_row_(n_cols, npos) {}

  std::size_t n_cols() const { return n_cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow<F>>& rows() const { return rows_; }

  /// Reduces v in place against the stored rows (single left-to-right sweep).
  void reduce(std::vector<Scalar>& v) const {
    if (v.size() != n_cols_) throw ArityError("vector length does not match the echelon basis");
    for (std::size_t c = 0; c < n_cols_; ++c) {
      if (field_.is_zero(v[c]) || pivot_row_[c] == npos) continue;
      Scalar factor = v[c];
      for (const auto& [col, val] : rows_[pivot_row_[c]]) field_.sub_mul(v[col], factor, val);
    }
  }

  bool contains(std::vector<Scalar> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [&](const Scalar& x) { return field_.is_zero(x); });
  }

  /// Adds v to the span. Returns the new pivot column, or npos if v was dependent.
  std::size_t insert(std::vector<Scalar> v) {
    reduce(v);
    std::size_t pivot = 0;
    while (pivot < n_cols_ && field_.is_zero(v[pivot])) ++pivot;
    if (pivot == n_cols_) return npos;
    Scalar inv = field_.inv(v[pivot]);
    SparseRow<F> row;
    for (std::size_t c = pivot; c < n_cols_; ++c)
      if (!field_.is_zero(v[c])) row.emplace_back(c, field_.mul(v[c], inv));
    pivot_row_[pivot] = rows_.size();
    rows_.push_back(std::move(row));
    return pivot;
  }

  std::size_t insert(const SparseRow<F>& v) { return insert(to_dense(field_, v, n_cols_)); }

  bool is_pivot(std::size_t c) const { return pivot_row_.at(c) != npos; }

  /// Rows in reduced row echelon form, ordered by pivot.
  std::vector<SparseRow<F>> reduced_rows() const {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < n_cols_; ++c)
      if (pivot_row_[c] != npos) pivots.push_back(c);
    std::vector<std::vector<Scalar>> dense;
    for (std::size_t p : pivots) dense.push_back(to_dense(field_, rows_[pivot_row_[p]], n_cols_));
    for (std::size_t i = pivots.size(); i-- > 0;) {
      for (std::size_t j = 0; j < i; ++j) {
        Scalar factor = dense[j][pivots[i]];
        if (field_.is_zero(factor)) continue;
        for (std::size_t c = pivots[i]; c < n_cols_; ++c)
          if (!field_.is_zero(dense[i][c])) field_.sub_mul(dense[j][c], factor, dense[i][c]);
      }
    }
    std::vector<SparseRow<F>> out;
    for (auto& d : dense) out.push_back(to_sparse(field_, d));
    return out;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  F field_;
  std::size_t n_cols_;
  std::vector<SparseRow<F>> rows_;
  std::vector<std::size_t> pivot_row_;
};

template <class F>
std::size_t rank_of(const F& field, const std::vector<SparseRow<F>>& rows, std::size_t n_cols) {
  EchelonBasis<F> e(field, n_cols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

/// Basis of {x : A x = 0} where A is given by its rows.
template <class F>
std::vector<std::vector<typename F::value_type>> nullspace(const F& field, const std::vector<SparseRow<F>>& rows,
                                                           std::size_t n_cols) {
  EchelonBasis<F> e(field, n_cols);
  for (const auto& r : rows) e.insert(r);
  auto rref = e.reduced_rows();
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(n_cols, false);
  for (const auto& r : rref) {
    pivot_of_row.push_back(r.front().first);
    is_pivot[r.front().first] = true;
  }
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < n_cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> x(n_cols, field.zero());
    x[free] = field.one();
    for (std::size_t i = 0; i < rref.size(); ++i)
      for (const auto& [c, v] : rref[i])
        if (c == free) x[pivot_of_row[i]] = field.neg(v);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace solvcert

#endif  // SOLVCERT_LINALG_HPP
