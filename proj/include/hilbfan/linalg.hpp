#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilbfan/error.hpp"
#include "hilbfan/multipoly.hpp"
#include "hilbfan/scalar.hpp"

namespace hilbfan {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  /// Keep only the first n rows.
  void truncate_rows(std::size_t n) {
    rows_ = std::min(rows_, n);
    data_.resize(rows_ * cols_);
  }
  void append_row(std::span<const T> r) {
    if (r.size() != cols_) throw Error(ErrorCode::dimension, "row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarVec = std::vector<Scalar>;
using ScalarMatrix = Matrix<Scalar>;
using PolyVec = std::vector<MultiPoly>;

/// Matrix of polynomials with optional printable column labels.
struct PolyMatrix {
  Matrix<MultiPoly> entries;
  std::vector<std::string> column_labels;
};

/// Determinant by fraction-free (Bareiss) elimination. Integer input stays
/// integral throughout.
Scalar det_fraction_free(const ScalarMatrix& m);
MultiPoly det_fraction_free(const Matrix<MultiPoly>& m);

/// In-place row echelon form. Columns are visited in `column_order` (natural
/// order when empty); zero rows are dropped. With `reduced`, pivots are
/// normalized to 1 and cleared above as well. Returns the pivot column of
/// each remaining row.
std::vector<std::size_t> row_echelon(ScalarMatrix& m, std::span<const std::size_t> column_order = {},
                                     bool reduced = true);

/// Canonical reduced row-echelon basis of the span of `vectors`.
std::vector<ScalarVec> span_reduce(const std::vector<ScalarVec>& vectors);
ScalarMatrix span_reduce(ScalarMatrix m);

std::size_t rank(ScalarMatrix m);

/// Reduce v against an RREF basis (pivots as returned by row_echelon).
/// Returns the remainder; zero iff v lies in the span.
ScalarVec reduce_against(ScalarVec v, const ScalarMatrix& rref, std::span<const std::size_t> pivots);

/// Limit of the row space under a one-parameter torus scaling column j by
/// t^{weight_j}, t -> infinity. Weights compare lexicographically, the
/// second component refining ties of the first. Result is in RREF.
using WeightKey = std::array<long long, 2>;
ScalarMatrix initial_subspace(const ScalarMatrix& rows, std::span<const WeightKey> weights);

/// Flat limit as t -> infinity of the span of rows whose entries are Laurent
/// polynomials in t with coefficients polynomial in a, b, c (treated as
/// transcendentals). Output rows are t-free. When no parameters occur the
/// result is in canonical RREF form.
std::vector<PolyVec> t_limit_basis(std::vector<PolyVec> rows);

/// A nonzero combination c with sum_k c_k rows_k = 0, if one exists.
/// Entries are polynomials (no t); computed fraction-free.
std::optional<PolyVec> null_combination(const std::vector<PolyVec>& rows);

}  // namespace hilbfan
