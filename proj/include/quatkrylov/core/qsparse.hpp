#pragma once

#include <array>
#include <vector>

#include "quatkrylov/core/qmatrix.hpp"

namespace quatkrylov {

struct QTriplet {
  Index row;
  Index col;
  Quaternion value;
};

/// Compressed-column quaternion matrix. One shared sparsity pattern, four value arrays.
class QSparseMatrix {
 public:
  QSparseMatrix() = default;
  QSparseMatrix(Index rows, Index cols);

  /// Duplicate (row, col) entries are summed. Explicit zeros are kept.
  static QSparseMatrix from_triplets(Index rows, Index cols, const std::vector<QTriplet>& trips);
  static QSparseMatrix from_dense(const QMatrix& a, double drop_tol = 0.0);
  static QSparseMatrix identity(Index n);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index nnz() const { return static_cast<Index>(row_idx_.size()); }

  /// True when every imaginary value is zero; matvec then takes a cheaper path.
  bool real_only() const { return real_only_; }

  const std::vector<Index>& col_ptr() const { return col_ptr_; }
  const std::vector<Index>& row_idx() const { return row_idx_; }
  const std::vector<double>& values(int c) const { return vals_[c]; }

  Quaternion value_at(Index pos) const {
    const auto p = static_cast<std::size_t>(pos);
    return {vals_[0][p], vals_[1][p], vals_[2][p], vals_[3][p]};
  }

  /// Entry lookup by binary search in the column. Zero if absent.
  Quaternion coeff(Index r, Index c) const;

  std::vector<Quaternion> diagonal() const;

  /// Leading k-by-k block.
  QSparseMatrix principal(Index k) const;

  QSparseMatrix adjoint() const;
  std::vector<QTriplet> triplets() const;
  QMatrix to_dense() const;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  bool real_only_ = true;
  std::vector<Index> col_ptr_;
  std::vector<Index> row_idx_;
  std::array<std::vector<double>, 4> vals_;
};

QVector matvec(const QSparseMatrix& a, const QVector& x);
inline QVector operator*(const QSparseMatrix& a, const QVector& x) { return matvec(a, x); }
double fnorm(const QSparseMatrix& a);

}  // namespace quatkrylov
