#include "quatkrylov/core/random.hpp"

namespace quatkrylov {

Quaternion random_quaternion(Rng& rng) {
  std::normal_distribution<double> nd;
  const double a = nd(rng), b = nd(rng), c = nd(rng), d = nd(rng);
  return {a, b, c, d};
}

QVector random_qvector(Index n, Rng& rng) {
  std::normal_distribution<double> nd;
  QVector v(n);
  for (int c = 0; c < 4; ++c) {
    for (Index i = 0; i < n; ++i) v.part(c)[i] = nd(rng);
  }
  return v;
}

QMatrix random_qmatrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> nd;
  QMatrix m(rows, cols);
  for (int c = 0; c < 4; ++c) {
    for (Index j = 0; j < cols; ++j) {
      for (Index i = 0; i < rows; ++i) m.part(c)(i, j) = nd(rng);
    }
  }
  return m;
}

QMatrix random_diag_dominant(Index n, Rng& rng, double dominance, double spread) {
  if (!(dominance > 0.0) || !(spread >= 1.0)) {
    throw InvalidParameter("random_diag_dominant: need dominance > 0 and spread >= 1");
  }
  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  std::uniform_real_distribution<double> us(1.0, spread);
  QMatrix m(n, n);
  for (int c = 0; c < 4; ++c) {
    for (Index j = 0; j < n; ++j) {
      for (Index i = 0; i < n; ++i) m.part(c)(i, j) = ud(rng);
    }
  }
  for (Index i = 0; i < n; ++i) {
    double off = 0.0;
    for (Index j = 0; j < n; ++j) {
      if (j != i) off += m(i, j).abs();
    }
    m.set(i, i, Quaternion{dominance * us(rng) * off});
  }
  return m;
}

}  // namespace quatkrylov
