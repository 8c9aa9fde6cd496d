#include "quatkrylov/tv/difference.hpp"

#include "quatkrylov/core/errors.hpp"

namespace quatkrylov::tv {

namespace {

SpMat identity(Index n) {
  SpMat i(n, n);
  i.setIdentity();
  return i;
}

SpMat kron(const SpMat& a, const SpMat& b) {
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (Index ca = 0; ca < a.outerSize(); ++ca) {
    for (SpMat::InnerIterator ia(a, ca); ia; ++ia) {
      for (Index cb = 0; cb < b.outerSize(); ++cb) {
        for (SpMat::InnerIterator ib(b, cb); ib; ++ib) {
          t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                         ia.value() * ib.value());
        }
      }
    }
  }
  SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

}  // namespace

SpMat d1d(Index n) {
  if (n < 2) throw DimensionError("d1d: need n >= 2");
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<std::size_t>(2 * (n - 1)));
  for (Index i = 0; i + 1 < n; ++i) {
    t.emplace_back(i, i, 1.0);
    t.emplace_back(i, i + 1, -1.0);
  }
  SpMat d(n - 1, n);
  d.setFromTriplets(t.begin(), t.end());
  return d;
}

DifferenceStack DifferenceStack::build(Index side, Index size, std::vector<SpMat> dirs) {
  auto d = std::make_shared<Data>();
  d->side = side;
  d->size = size;
  d->rows = dirs.front().rows();
  std::vector<Eigen::Triplet<double>> t;
  Index offset = 0;
  for (const SpMat& m : dirs) {
    for (Index c = 0; c < m.outerSize(); ++c) {
      for (SpMat::InnerIterator it(m, c); it; ++it) {
        t.emplace_back(offset + it.row(), it.col(), it.value());
      }
    }
    offset += m.rows();
  }
  d->hv = SpMat(offset, size);
  d->hv.setFromTriplets(t.begin(), t.end());
  d->dirs = std::move(dirs);
  return DifferenceStack(std::move(d));
}

DifferenceStack DifferenceStack::image(Index n) {
  const SpMat d = d1d(n);
  const SpMat i = identity(n);
  return build(n, n * n, {kron(d, i), kron(i, d)});
}

DifferenceStack DifferenceStack::signal(Index n) { return build(n, n, {d1d(n)}); }

QVector DifferenceStack::apply(const QVector& x) const {
  if (x.size() != size()) throw DimensionError("DifferenceStack::apply: length mismatch");
  QVector y(stacked().rows());
  for (int c = 0; c < 4; ++c) y.part(c) = stacked() * x.part(c);
  return y;
}

QVector DifferenceStack::apply_transpose(const QVector& y) const {
  if (y.size() != stacked().rows()) {
    throw DimensionError("DifferenceStack::apply_transpose: length mismatch");
  }
  QVector x(size());
  for (int c = 0; c < 4; ++c) x.part(c) = stacked().transpose() * y.part(c);
  return x;
}

Eigen::VectorXd DifferenceStack::squared_gradient(const QVector& x) const {
  const QVector g = apply(x);
  Eigen::VectorXd s = Eigen::VectorXd::Zero(rows());
  for (int d = 0; d < directions(); ++d) {
    for (int c = 0; c < 4; ++c) s += g.part(c).segment(d * rows(), rows()).array().square().matrix();
  }
  return s;
}

}  // namespace quatkrylov::tv
