#pragma once

// Reference implementations used only by the tests. They avoid the library's fast paths.

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "quatkrylov/core/qmatrix.hpp"

namespace qk_oracle {

using quatkrylov::Index;
using quatkrylov::QMatrix;
using quatkrylov::Quaternion;
using quatkrylov::QVector;

// e_a * e_b = sign * e_idx for basis {1, i, j, k}
struct BasisProduct {
  int sign;
  int idx;
};

inline constexpr std::array<std::array<BasisProduct, 4>, 4> kTable = {{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
    {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
    {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
    {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
}};

inline Quaternion table_mul(const Quaternion& a, const Quaternion& b) {
  std::array<double, 4> r{};
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      r[kTable[p][q].idx] += kTable[p][q].sign * a[p] * b[q];
    }
  }
  return {r[0], r[1], r[2], r[3]};
}

inline double qdist(const Quaternion& a, const Quaternion& b) { return (a - b).abs(); }

// Entrywise product loops with the table multiplication.
inline QVector naive_matvec(const QMatrix& a, const QVector& x) {
  QVector y(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    Quaternion s;
    for (Index j = 0; j < a.cols(); ++j) s += table_mul(a(i, j), x[j]);
    y.set(i, s);
  }
  return y;
}

inline QMatrix naive_matmat(const QMatrix& a, const QMatrix& b) {
  QMatrix c(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < b.cols(); ++k) {
      Quaternion s;
      for (Index j = 0; j < a.cols(); ++j) s += table_mul(a(i, j), b(j, k));
      c.set(i, k, s);
    }
  }
  return c;
}

inline double qvdist(const QVector& a, const QVector& b) {
  double s = 0.0;
  for (Index i = 0; i < a.size(); ++i) s += (a[i] - b[i]).norm_sq();
  return std::sqrt(s);
}

inline double qmdist(const QMatrix& a, const QMatrix& b) {
  double s = 0.0;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) s += (a(i, j) - b(i, j)).norm_sq();
  }
  return std::sqrt(s);
}

// 4x4 real matrix of left multiplication by q, built from the table.
inline Eigen::Matrix4d left_mult(const Quaternion& q) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  for (int p = 0; p < 4; ++p) {
    for (int s = 0; s < 4; ++s) m(kTable[p][s].idx, s) += kTable[p][s].sign * q[p];
  }
  return m;
}

}  // namespace qk_oracle
