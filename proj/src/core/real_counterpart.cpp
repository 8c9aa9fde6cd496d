#include "quatkrylov/core/real_counterpart.hpp"

#include <cmath>
#include <string>

namespace quatkrylov {

namespace {

// sign and source part of block (br, bc)
constexpr int kPart[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr int kSign[4][4] = {{1, -1, -1, -1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}};

}  // namespace

Eigen::MatrixXd to_real_counterpart(const QMatrix& a) {
  const Index m = a.rows(), n = a.cols();
  Eigen::MatrixXd r(4 * m, 4 * n);
  for (int br = 0; br < 4; ++br) {
    for (int bc = 0; bc < 4; ++bc) {
      r.block(br * m, bc * n, m, n) = kSign[br][bc] * a.part(kPart[br][bc]);
    }
  }
  return r;
}

QMatrix from_real_counterpart(const Eigen::MatrixXd& r, double tol) {
  if (r.rows() % 4 != 0 || r.cols() % 4 != 0) {
    throw StructureError("from_real_counterpart: dimensions " + std::to_string(r.rows()) + "x" +
                         std::to_string(r.cols()) + " are not multiples of 4");
  }
  const Index m = r.rows() / 4, n = r.cols() / 4;
  QMatrix a(r.block(0, 0, m, n), r.block(m, 0, m, n), r.block(2 * m, 0, m, n),
            r.block(3 * m, 0, m, n));
  const double scale = std::max(1.0, r.cwiseAbs().maxCoeff());
  for (int br = 0; br < 4; ++br) {
    for (int bc = 1; bc < 4; ++bc) {
      const double dev =
          (r.block(br * m, bc * n, m, n) - kSign[br][bc] * a.part(kPart[br][bc])).cwiseAbs().maxCoeff();
      if (dev > tol * scale) {
        throw StructureError("from_real_counterpart: block (" + std::to_string(br) + ", " +
                             std::to_string(bc) + ") breaks the quaternion sign pattern");
      }
    }
  }
  return a;
}

QSparseMatrix real_counterpart_sparse(const QSparseMatrix& a) {
  const Index m = a.rows(), n = a.cols();
  std::vector<QTriplet> trips;
  trips.reserve(static_cast<std::size_t>(a.nnz()) * 16);
  for (const auto& t : a.triplets()) {
    for (int br = 0; br < 4; ++br) {
      for (int bc = 0; bc < 4; ++bc) {
        const double v = kSign[br][bc] * t.value[kPart[br][bc]];
        if (v != 0.0) trips.push_back({br * m + t.row, bc * n + t.col, Quaternion{v}});
      }
    }
  }
  return QSparseMatrix::from_triplets(4 * m, 4 * n, trips);
}

QVector embed_real(const Eigen::VectorXd& v) {
  QVector q(v.size());
  q.part(0) = v;
  return q;
}

}  // namespace quatkrylov
