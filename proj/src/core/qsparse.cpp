#include "quatkrylov/core/qsparse.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace quatkrylov {

QSparseMatrix::QSparseMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), col_ptr_(static_cast<std::size_t>(cols) + 1, 0) {
  if (rows < 0 || cols < 0) throw DimensionError("QSparseMatrix: negative dimension");
}

QSparseMatrix QSparseMatrix::from_triplets(Index rows, Index cols,
                                           const std::vector<QTriplet>& trips) {
  QSparseMatrix m(rows, cols);
  for (const auto& t : trips) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
      throw DimensionError("from_triplets: entry (" + std::to_string(t.row) + ", " +
                           std::to_string(t.col) + ") outside " + std::to_string(rows) + "x" +
                           std::to_string(cols));
    }
  }
  std::vector<std::size_t> order(trips.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (trips[a].col != trips[b].col) return trips[a].col < trips[b].col;
    return trips[a].row < trips[b].row;
  });

  m.row_idx_.reserve(trips.size());
  for (auto& v : m.vals_) v.reserve(trips.size());
  Index last_r = -1, last_c = -1;
  for (std::size_t idx : order) {
    const auto& t = trips[idx];
    if (t.row == last_r && t.col == last_c) {
      for (int c = 0; c < 4; ++c) m.vals_[c].back() += t.value[c];
    } else {
      m.row_idx_.push_back(t.row);
      for (int c = 0; c < 4; ++c) m.vals_[c].push_back(t.value[c]);
      ++m.col_ptr_[static_cast<std::size_t>(t.col) + 1];
      last_r = t.row;
      last_c = t.col;
    }
  }
  for (std::size_t c = 0; c < static_cast<std::size_t>(cols); ++c) {
    m.col_ptr_[c + 1] += m.col_ptr_[c];
  }
  m.real_only_ = true;
  for (int c = 1; c < 4 && m.real_only_; ++c) {
    m.real_only_ = std::all_of(m.vals_[c].begin(), m.vals_[c].end(),
                               [](double v) { return v == 0.0; });
  }
  return m;
}

QSparseMatrix QSparseMatrix::from_dense(const QMatrix& a, double drop_tol) {
  std::vector<QTriplet> trips;
  for (Index c = 0; c < a.cols(); ++c) {
    for (Index r = 0; r < a.rows(); ++r) {
      const Quaternion q = a(r, c);
      if (q.abs() > drop_tol) {
        trips.push_back({r, c, q});
      }
    }
  }
  return from_triplets(a.rows(), a.cols(), trips);
}

QSparseMatrix QSparseMatrix::identity(Index n) {
  std::vector<QTriplet> trips;
  trips.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) trips.push_back({i, i, Quaternion{1.0}});
  return from_triplets(n, n, trips);
}

Quaternion QSparseMatrix::coeff(Index r, Index c) const {
  const auto b = row_idx_.begin() + col_ptr_[static_cast<std::size_t>(c)];
  const auto e = row_idx_.begin() + col_ptr_[static_cast<std::size_t>(c) + 1];
  const auto it = std::lower_bound(b, e, r);
  if (it == e || *it != r) return {};
  return value_at(static_cast<Index>(it - row_idx_.begin()));
}

std::vector<Quaternion> QSparseMatrix::diagonal() const {
  const Index n = std::min(rows_, cols_);
  std::vector<Quaternion> d(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = coeff(i, i);
  return d;
}

QSparseMatrix QSparseMatrix::principal(Index k) const {
  if (k < 0 || k > rows_ || k > cols_) {
    throw DimensionError("principal: order " + std::to_string(k) + " exceeds " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  std::vector<QTriplet> trips;
  for (Index c = 0; c < k; ++c) {
    for (Index p = col_ptr_[static_cast<std::size_t>(c)];
         p < col_ptr_[static_cast<std::size_t>(c) + 1]; ++p) {
      const Index r = row_idx_[static_cast<std::size_t>(p)];
      if (r < k) trips.push_back({r, c, value_at(p)});
    }
  }
  return from_triplets(k, k, trips);
}

QSparseMatrix QSparseMatrix::adjoint() const {
  std::vector<QTriplet> trips;
  trips.reserve(row_idx_.size());
  for (Index c = 0; c < cols_; ++c) {
    for (Index p = col_ptr_[static_cast<std::size_t>(c)];
         p < col_ptr_[static_cast<std::size_t>(c) + 1]; ++p) {
      trips.push_back({c, row_idx_[static_cast<std::size_t>(p)], value_at(p).conj()});
    }
  }
  return from_triplets(cols_, rows_, trips);
}

std::vector<QTriplet> QSparseMatrix::triplets() const {
  std::vector<QTriplet> trips;
  trips.reserve(row_idx_.size());
  for (Index c = 0; c < cols_; ++c) {
    for (Index p = col_ptr_[static_cast<std::size_t>(c)];
         p < col_ptr_[static_cast<std::size_t>(c) + 1]; ++p) {
      trips.push_back({row_idx_[static_cast<std::size_t>(p)], c, value_at(p)});
    }
  }
  return trips;
}

QMatrix QSparseMatrix::to_dense() const {
  QMatrix d(rows_, cols_);
  for (const auto& t : triplets()) {
    for (int c = 0; c < 4; ++c) d.part(c)(t.row, t.col) += t.value[c];
  }
  return d;
}

QVector matvec(const QSparseMatrix& a, const QVector& x) {
  if (a.cols() != x.size()) {
    throw DimensionError("sparse matvec: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times length " + std::to_string(x.size()));
  }
  QVector y(a.rows());
  const auto& cp = a.col_ptr();
  const auto& ri = a.row_idx();
  const double* v0 = a.values(0).data();
  double* y0 = y.part(0).data();
  double* y1 = y.part(1).data();
  double* y2 = y.part(2).data();
  double* y3 = y.part(3).data();
  const double* x0 = x.part(0).data();
  const double* x1 = x.part(1).data();
  const double* x2 = x.part(2).data();
  const double* x3 = x.part(3).data();
  const Index n = a.cols();
  if (a.real_only()) {
    for (Index c = 0; c < n; ++c) {
      const double b0 = x0[c], b1 = x1[c], b2 = x2[c], b3 = x3[c];
      for (Index p = cp[static_cast<std::size_t>(c)]; p < cp[static_cast<std::size_t>(c) + 1];
           ++p) {
        const Index r = ri[static_cast<std::size_t>(p)];
        const double s = v0[p];
        y0[r] += s * b0;
        y1[r] += s * b1;
        y2[r] += s * b2;
        y3[r] += s * b3;
      }
    }
    return y;
  }
  const double* v1 = a.values(1).data();
  const double* v2 = a.values(2).data();
  const double* v3 = a.values(3).data();
  for (Index c = 0; c < n; ++c) {
    const double b0 = x0[c], b1 = x1[c], b2 = x2[c], b3 = x3[c];
    for (Index p = cp[static_cast<std::size_t>(c)]; p < cp[static_cast<std::size_t>(c) + 1]; ++p) {
      const Index r = ri[static_cast<std::size_t>(p)];
      const double a0 = v0[p], a1 = v1[p], a2 = v2[p], a3 = v3[p];
      y0[r] += a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3;
      y1[r] += a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2;
      y2[r] += a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1;
      y3[r] += a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0;
    }
  }
  return y;
}

double fnorm(const QSparseMatrix& a) {
  double s = 0.0;
  for (int c = 0; c < 4; ++c) {
    for (double v : a.values(c)) s += v * v;
  }
  return std::sqrt(s);
}

}  // namespace quatkrylov
