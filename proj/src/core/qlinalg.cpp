#include "quatkrylov/core/qlinalg.hpp"

#include <Eigen/QR>

#include "quatkrylov/core/real_counterpart.hpp"

namespace quatkrylov {

namespace {

LstsqResult solve_real(const Eigen::MatrixXd& r, const Eigen::VectorXd& rhs) {
  LstsqResult out;
  if (r.cols() == 0) {
    out.x = QVector(0);
    out.resnorm = rhs.norm();
    return out;
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(r);
  const Eigen::VectorXd s = cod.solve(rhs);
  out.x = QVector::from_stacked(s);
  out.resnorm = (rhs - r * s).norm();
  return out;
}

}  // namespace

LstsqResult qlstsq(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.size()) throw DimensionError("qlstsq: rhs length mismatch");
  return solve_real(to_real_counterpart(a), b.stacked());
}

LstsqResult qlstsq_stacked(const QMatrix& a, const QVector& rhs_a, const QMatrix& b,
                           const QVector& rhs_b) {
  if (a.cols() != b.cols()) throw DimensionError("qlstsq_stacked: column mismatch");
  if (a.rows() != rhs_a.size() || b.rows() != rhs_b.size()) {
    throw DimensionError("qlstsq_stacked: rhs length mismatch");
  }
  const Eigen::MatrixXd ra = to_real_counterpart(a);
  const Eigen::MatrixXd rb = to_real_counterpart(b);
  Eigen::MatrixXd r(ra.rows() + rb.rows(), ra.cols());
  r << ra, rb;
  Eigen::VectorXd rhs(r.rows());
  rhs << rhs_a.stacked(), rhs_b.stacked();
  return solve_real(r, rhs);
}

QMatrix householder_r(const QMatrix& a) {
  const Index m = a.rows(), n = a.cols();
  const Index steps = std::min(m, n);
  std::vector<QVector> cols;
  cols.reserve(static_cast<std::size_t>(n));
  for (Index c = 0; c < n; ++c) cols.push_back(a.col(c));

  for (Index k = 0; k < steps; ++k) {
    const Index len = m - k;
    QVector x = cols[static_cast<std::size_t>(k)].segment(k, len);
    const double alpha = norm2(x);
    if (alpha == 0.0) continue;
    const Quaternion x0 = x[0];
    const double ax0 = x0.abs();
    const Quaternion u = ax0 > 0.0 ? x0 * (1.0 / ax0) : Quaternion{1.0};
    // v = x + e1 u alpha, H x = -u alpha e1
    QVector v = x;
    v.set(0, x0 + u * alpha);
    const double vv = v.squared_norm();
    for (Index c = k; c < n; ++c) {
      QVector& col = cols[static_cast<std::size_t>(c)];
      QVector seg = col.segment(k, len);
      const Quaternion s = inner(seg, v) * (2.0 / vv);
      seg.add_scaled(v, -s);
      for (int p = 0; p < 4; ++p) col.part(p).segment(k, len) = seg.part(p);
    }
    // make the diagonal real nonnegative: scale row k on the left by conj(d)/|d|
    const Quaternion d = cols[static_cast<std::size_t>(k)][k];
    const double ad = d.abs();
    if (ad > 0.0) {
      const Quaternion ph = d.conj() * (1.0 / ad);
      for (Index c = k; c < n; ++c) {
        QVector& col = cols[static_cast<std::size_t>(c)];
        col.set(k, ph * col[k]);
      }
    }
  }

  QMatrix r(steps, n);
  for (Index c = 0; c < n; ++c) {
    const Index top = std::min(c + 1, steps);
    for (Index row = 0; row < top; ++row) r.set(row, c, cols[static_cast<std::size_t>(c)][row]);
  }
  return r;
}

}  // namespace quatkrylov
