#pragma once

#include <memory>
#include <vector>

#include <Eigen/Sparse>

#include "quatkrylov/core/qvector.hpp"

namespace quatkrylov::tv {

using SpMat = Eigen::SparseMatrix<double>;

/// (n-1) x n forward difference with rows [1, -1].
SpMat d1d(Index n);

/// Real difference operators acting on column-major stacked images (or 1-D signals).
/// Image mode: D_h = D_1d (x) I, D_v = I (x) D_1d, each (n-1)n x n^2.
/// Signal mode: one direction, D_1d itself.
/// Copies share the underlying matrices.
class DifferenceStack {
 public:
  static DifferenceStack image(Index n);
  static DifferenceStack signal(Index n);

  /// Image side (image mode) or signal length.
  Index side() const { return d_->side; }
  /// Number of unknowns N.
  Index size() const { return d_->size; }
  /// Rows per direction, N~.
  Index rows() const { return d_->rows; }
  int directions() const { return static_cast<int>(d_->dirs.size()); }
  bool is_image() const { return directions() == 2; }

  const SpMat& direction(int d) const { return d_->dirs.at(static_cast<std::size_t>(d)); }
  const SpMat& D_h() const { return direction(0); }
  const SpMat& D_v() const { return direction(1); }
  /// [D_h; D_v], directions() * N~ rows.
  const SpMat& stacked() const { return d_->hv; }

  /// D_hv x, componentwise.
  QVector apply(const QVector& x) const;
  /// D_hv^T y.
  QVector apply_transpose(const QVector& y) const;
  /// sum over directions of |[D_d x]_i|^2, length N~.
  Eigen::VectorXd squared_gradient(const QVector& x) const;

 private:
  struct Data {
    Index side = 0;
    Index size = 0;
    Index rows = 0;
    std::vector<SpMat> dirs;
    SpMat hv;
  };
  explicit DifferenceStack(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static DifferenceStack build(Index side, Index size, std::vector<SpMat> dirs);

  std::shared_ptr<const Data> d_;
};

}  // namespace quatkrylov::tv
