#pragma once

#include <array>
#include <vector>
#include <Eigen/Dense>

#include "quatkrylov/core/qvector.hpp"

namespace quatkrylov {

/// Dense quaternion matrix A = A0 + A1 i + A2 j + A3 k, one column-major real matrix per part.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(Index rows, Index cols) {
    for (auto& p : parts_) p = Eigen::MatrixXd::Zero(rows, cols);
  }
  QMatrix(const Eigen::MatrixXd& a0, const Eigen::MatrixXd& a1, const Eigen::MatrixXd& a2,
          const Eigen::MatrixXd& a3);

  static QMatrix zeros(Index rows, Index cols) { return QMatrix(rows, cols); }
  static QMatrix identity(Index n);
  /// Real-valued quaternion matrix (imaginary parts zero).
  static QMatrix from_real(const Eigen::MatrixXd& a0);
  /// Matrix with the given columns.
  static QMatrix from_columns(const std::vector<QVector>& cols);

  Index rows() const { return parts_[0].rows(); }
  Index cols() const { return parts_[0].cols(); }

  Eigen::MatrixXd& part(int c) { return parts_[c]; }
  const Eigen::MatrixXd& part(int c) const { return parts_[c]; }

  Quaternion operator()(Index r, Index c) const {
    return {parts_[0](r, c), parts_[1](r, c), parts_[2](r, c), parts_[3](r, c)};
  }
  void set(Index r, Index c, const Quaternion& q) {
    parts_[0](r, c) = q.re;
    parts_[1](r, c) = q.i;
    parts_[2](r, c) = q.j;
    parts_[3](r, c) = q.k;
  }

  QVector col(Index c) const;
  void set_col(Index c, const QVector& v);
  QMatrix block(Index r0, Index c0, Index nr, Index nc) const;

  /// Conjugate transpose A0^T - A1^T i - A2^T j - A3^T k.
  QMatrix adjoint() const;

  bool is_pure() const { return parts_[0].isZero(0.0); }

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(double s);

 private:
  std::array<Eigen::MatrixXd, 4> parts_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(QMatrix a, double s);

QVector matvec(const QMatrix& a, const QVector& x);
QMatrix matmat(const QMatrix& a, const QMatrix& b);
inline QVector operator*(const QMatrix& a, const QVector& x) { return matvec(a, x); }
inline QMatrix operator*(const QMatrix& a, const QMatrix& b) { return matmat(a, b); }

/// Frobenius norm (sum |a_ij|^2)^(1/2).
double fnorm(const QMatrix& a);

}  // namespace quatkrylov
