#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "quatkrylov/core/qsparse.hpp"

namespace quatkrylov {

/// Type-erased square or rectangular quaternion operator x -> Ax.
class QLinearOperator {
 public:
  using Apply = std::function<QVector(const QVector&)>;

  QLinearOperator() = default;
  QLinearOperator(Index rows, Index cols, Apply f, std::optional<double> frob = std::nullopt)
      : rows_(rows), cols_(cols), apply_(std::move(f)), frob_(frob) {}

  static QLinearOperator dense(QMatrix a) {
    auto p = std::make_shared<const QMatrix>(std::move(a));
    return {p->rows(), p->cols(), [p](const QVector& x) { return matvec(*p, x); }, fnorm(*p)};
  }
  static QLinearOperator sparse(QSparseMatrix a) {
    auto p = std::make_shared<const QSparseMatrix>(std::move(a));
    return {p->rows(), p->cols(), [p](const QVector& x) { return matvec(*p, x); }, fnorm(*p)};
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  /// Frobenius norm when cheaply known.
  std::optional<double> frobenius() const { return frob_; }

  QVector apply(const QVector& x) const {
    if (x.size() != cols_) throw DimensionError("operator apply: length mismatch");
    return apply_(x);
  }
  QVector operator()(const QVector& x) const { return apply(x); }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  Apply apply_;
  std::optional<double> frob_;
};

}  // namespace quatkrylov
