#include "quatkrylov/core/qmatrix.hpp"

#include <string>

namespace quatkrylov {

namespace {

std::string dims(Index r, Index c) { return std::to_string(r) + "x" + std::to_string(c); }

}  // namespace

QMatrix::QMatrix(const Eigen::MatrixXd& a0, const Eigen::MatrixXd& a1, const Eigen::MatrixXd& a2,
                 const Eigen::MatrixXd& a3)
    : parts_{a0, a1, a2, a3} {
  for (const auto& p : parts_) {
    if (p.rows() != a0.rows() || p.cols() != a0.cols()) {
      throw DimensionError("QMatrix: parts have different shapes");
    }
  }
}

QMatrix QMatrix::identity(Index n) {
  QMatrix m(n, n);
  m.parts_[0].setIdentity();
  return m;
}

QMatrix QMatrix::from_real(const Eigen::MatrixXd& a0) {
  QMatrix m(a0.rows(), a0.cols());
  m.parts_[0] = a0;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) {
  if (cols.empty()) return {};
  QMatrix m(cols.front().size(), static_cast<Index>(cols.size()));
  for (Index c = 0; c < m.cols(); ++c) m.set_col(c, cols[static_cast<std::size_t>(c)]);
  return m;
}

QVector QMatrix::col(Index c) const {
  return QVector(parts_[0].col(c), parts_[1].col(c), parts_[2].col(c), parts_[3].col(c));
}

void QMatrix::set_col(Index c, const QVector& v) {
  if (v.size() != rows()) throw DimensionError("set_col: length mismatch");
  for (int p = 0; p < 4; ++p) parts_[p].col(c) = v.part(p);
}

QMatrix QMatrix::block(Index r0, Index c0, Index nr, Index nc) const {
  return QMatrix(parts_[0].block(r0, c0, nr, nc), parts_[1].block(r0, c0, nr, nc),
                 parts_[2].block(r0, c0, nr, nc), parts_[3].block(r0, c0, nr, nc));
}

QMatrix QMatrix::adjoint() const {
  return QMatrix(parts_[0].transpose(), -parts_[1].transpose(), -parts_[2].transpose(),
                 -parts_[3].transpose());
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (o.rows() != rows() || o.cols() != cols()) throw DimensionError("QMatrix +=: shape mismatch");
  for (int c = 0; c < 4; ++c) parts_[c] += o.parts_[c];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (o.rows() != rows() || o.cols() != cols()) throw DimensionError("QMatrix -=: shape mismatch");
  for (int c = 0; c < 4; ++c) parts_[c] -= o.parts_[c];
  return *this;
}

QMatrix& QMatrix::operator*=(double s) {
  for (auto& p : parts_) p *= s;
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator*(QMatrix a, double s) { return a *= s; }

QVector matvec(const QMatrix& a, const QVector& x) {
  if (a.cols() != x.size()) {
    throw DimensionError("matvec: " + dims(a.rows(), a.cols()) + " times length " +
                         std::to_string(x.size()));
  }
  const auto& A0 = a.part(0);
  const auto& A1 = a.part(1);
  const auto& A2 = a.part(2);
  const auto& A3 = a.part(3);
  const auto& x0 = x.part(0);
  const auto& x1 = x.part(1);
  const auto& x2 = x.part(2);
  const auto& x3 = x.part(3);
  QVector y(a.rows());
  y.part(0).noalias() = A0 * x0 - A1 * x1 - A2 * x2 - A3 * x3;
  y.part(1).noalias() = A0 * x1 + A1 * x0 + A2 * x3 - A3 * x2;
  y.part(2).noalias() = A0 * x2 - A1 * x3 + A2 * x0 + A3 * x1;
  y.part(3).noalias() = A0 * x3 + A1 * x2 - A2 * x1 + A3 * x0;
  return y;
}

QMatrix matmat(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmat: " + dims(a.rows(), a.cols()) + " times " +
                         dims(b.rows(), b.cols()));
  }
  const auto& A0 = a.part(0);
  const auto& A1 = a.part(1);
  const auto& A2 = a.part(2);
  const auto& A3 = a.part(3);
  const auto& B0 = b.part(0);
  const auto& B1 = b.part(1);
  const auto& B2 = b.part(2);
  const auto& B3 = b.part(3);
  QMatrix c(a.rows(), b.cols());
  c.part(0).noalias() = A0 * B0 - A1 * B1 - A2 * B2 - A3 * B3;
  c.part(1).noalias() = A0 * B1 + A1 * B0 + A2 * B3 - A3 * B2;
  c.part(2).noalias() = A0 * B2 - A1 * B3 + A2 * B0 + A3 * B1;
  c.part(3).noalias() = A0 * B3 + A1 * B2 - A2 * B1 + A3 * B0;
  return c;
}

double fnorm(const QMatrix& a) {
  double s = 0.0;
  for (int c = 0; c < 4; ++c) s += a.part(c).squaredNorm();
  return std::sqrt(s);
}

}  // namespace quatkrylov
