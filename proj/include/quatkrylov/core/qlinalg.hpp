#pragma once

#include "quatkrylov/core/qmatrix.hpp"

namespace quatkrylov {

struct LstsqResult {
  QVector x;
  double resnorm = 0.0;
};

/// Minimum-norm minimizer of ||A x - b||_2 over quaternion x, through the real counterpart.
LstsqResult qlstsq(const QMatrix& a, const QVector& b);

/// Upper triangular factor R of a quaternion Householder QR, A = Q R with Q unitary.
/// R has min(rows, cols) rows and a real nonnegative diagonal.
QMatrix householder_r(const QMatrix& a);

/// Least squares on a stacked system [A; B] x ~ [a; b] without forming the stack explicitly.
LstsqResult qlstsq_stacked(const QMatrix& a, const QVector& rhs_a, const QMatrix& b,
                           const QVector& rhs_b);

}  // namespace quatkrylov
