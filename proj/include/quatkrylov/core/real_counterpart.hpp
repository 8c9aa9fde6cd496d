#pragma once

#include <Eigen/Dense>

#include "quatkrylov/core/qsparse.hpp"

namespace quatkrylov {

/// 4m x 4n real matrix
///   [A0 -A1 -A2 -A3]
///   [A1  A0 -A3  A2]
///   [A2  A3  A0 -A1]
///   [A3 -A2  A1  A0]
Eigen::MatrixXd to_real_counterpart(const QMatrix& a);

/// Inverse of to_real_counterpart. Every block must match the sign pattern within tol
/// (relative to the largest entry), otherwise StructureError.
QMatrix from_real_counterpart(const Eigen::MatrixXd& r, double tol = 1e-12);

/// Real counterpart of a sparse matrix, stored as a real-valued quaternion sparse matrix.
QSparseMatrix real_counterpart_sparse(const QSparseMatrix& a);

/// Embeds a real vector as a quaternion vector with zero imaginary parts.
QVector embed_real(const Eigen::VectorXd& v);

}  // namespace quatkrylov
