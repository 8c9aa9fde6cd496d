#include "quatkrylov/krylov/arnoldi.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "quatkrylov/core/qlinalg.hpp"
#include "quatkrylov/core/real_counterpart.hpp"

namespace quatkrylov::krylov {

ArnoldiDecomposition ArnoldiDecomposition::start(const QVector& r0) {
  ArnoldiDecomposition dec;
  dec.beta = norm2(r0);
  if (dec.beta == 0.0) throw InvalidParameter("Arnoldi: zero starting vector");
  dec.V.push_back(r0 * (1.0 / dec.beta));
  return dec;
}

QMatrix ArnoldiDecomposition::hbar() const {
  QMatrix h(m + 1, m);
  for (int j = 0; j < m; ++j) {
    const auto& col = H[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < col.size(); ++i) h.set(static_cast<Index>(i), j, col[i]);
  }
  return h;
}

QMatrix ArnoldiDecomposition::basis() const { return QMatrix::from_columns(V); }
QMatrix ArnoldiDecomposition::zbasis() const { return QMatrix::from_columns(Z); }

StepStatus arnoldi_step(const QLinearOperator& a, ArnoldiDecomposition& dec,
                        const Preconditioner* precond, Side side, const StepState& state,
                        double breakdown_tol, bool reorthogonalize) {
  const int j = dec.m;
  if (j >= static_cast<int>(dec.V.size())) {
    throw InvalidParameter("arnoldi_step: no basis vector for column " + std::to_string(j));
  }
  const QVector& v = dec.V[static_cast<std::size_t>(j)];
  QVector w;
  switch (side) {
    case Side::None:
      w = a.apply(v);
      break;
    case Side::Left:
      w = precond ? precond->apply(a.apply(v), state) : a.apply(v);
      break;
    case Side::Right:
      w = a.apply(precond ? precond->apply(v, state) : v);
      break;
    case Side::Flexible: {
      QVector z = precond ? precond->apply(v, state) : v;
      w = a.apply(z);
      dec.Z.push_back(std::move(z));
      break;
    }
  }
  dec.op_scale = std::max(dec.op_scale, norm2(w));

  std::vector<Quaternion> col(static_cast<std::size_t>(j) + 2);
  const int passes = reorthogonalize ? 2 : 1;
  for (int pass = 0; pass < passes; ++pass) {
    for (int i = 0; i <= j; ++i) {
      const QVector& vi = dec.V[static_cast<std::size_t>(i)];
      const Quaternion h = inner(w, vi);
      w.add_scaled(vi, -h);
      col[static_cast<std::size_t>(i)] += h;
    }
  }
  const double hn = norm2(w);
  col[static_cast<std::size_t>(j) + 1] = Quaternion{hn};
  dec.H.push_back(std::move(col));
  dec.m = j + 1;

  double scale = dec.op_scale;
  if (side == Side::None && a.frobenius()) scale = *a.frobenius();
  if (hn <= breakdown_tol * scale || hn == 0.0) return StepStatus::Breakdown;
  dec.V.push_back(w * (1.0 / hn));
  return StepStatus::Ok;
}

HqlsResult solve_hqls(const QMatrix& hbar, double beta) {
  if (hbar.cols() < 1 || hbar.rows() != hbar.cols() + 1) {
    throw DimensionError("solve_hqls: expected an (m+1) x m matrix");
  }
  QVector rhs(hbar.rows());
  rhs.set(0, Quaternion{beta});
  const LstsqResult ls = qlstsq(hbar, rhs);
  return {ls.x, ls.resnorm};
}

HessenbergLS::HessenbergLS(double beta) : g_{Quaternion{beta}}, resnorm_(std::abs(beta)) {}

double HessenbergLS::add_column(std::vector<Quaternion> h) {
  const std::size_t j = r_.size();
  if (h.size() != j + 2) throw DimensionError("HessenbergLS: column length mismatch");
  for (std::size_t i = 0; i < j; ++i) {
    const Rotation& q = rot_[i];
    const Quaternion a = h[i], b = h[i + 1];
    h[i] = q.c * (q.ubar * a) + q.s * (q.wbar * b);
    h[i + 1] = -q.s * (q.ubar * a) + q.c * (q.wbar * b);
  }
  const Quaternion a = h[j], b = h[j + 1];
  const double na = a.abs(), nb = b.abs();
  const double rho = std::hypot(na, nb);
  Rotation q;
  if (rho == 0.0) {
    regular_ = false;
  } else {
    q.c = na / rho;
    q.s = nb / rho;
    if (na > 0.0) q.ubar = a.conj() * (1.0 / na);
    if (nb > 0.0) q.wbar = b.conj() * (1.0 / nb);
  }
  h[j] = Quaternion{rho};
  h.pop_back();
  r_.push_back(std::move(h));
  rot_.push_back(q);

  const Quaternion gj = g_[j];
  g_[j] = q.c * (q.ubar * gj);
  g_.push_back(-q.s * (q.ubar * gj));
  resnorm_ = g_.back().abs();
  return resnorm_;
}

QVector HessenbergLS::solve() const {
  const Index m = static_cast<Index>(r_.size());
  if (!regular_) throw DivisionByZero("HessenbergLS: singular triangular factor");
  QVector y(m);
  for (Index i = m - 1; i >= 0; --i) {
    Quaternion s = g_[static_cast<std::size_t>(i)];
    for (Index k = i + 1; k < m; ++k) {
      s -= r_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] * y[k];
    }
    // diagonal is real and positive
    y.set(i, s * (1.0 / r_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].re));
  }
  return y;
}

int grade(const QLinearOperator& a, const QVector& v, double tol) {
  if (norm2(v) == 0.0) throw InvalidParameter("grade: zero vector");
  const Index n = a.rows();
  std::vector<QVector> cols{v * (1.0 / norm2(v))};
  int rank = 1;
  for (Index k = 1; k <= n; ++k) {
    QVector next = a.apply(cols.back());
    const double nn = norm2(next);
    if (nn == 0.0) return static_cast<int>(k);
    cols.push_back(next * (1.0 / nn));
    const Eigen::MatrixXd r = to_real_counterpart(QMatrix::from_columns(cols));
    Eigen::BDCSVD<Eigen::MatrixXd> svd(r);
    const auto& sv = svd.singularValues();
    const double cut = tol * sv[0];
    const int real_rank = static_cast<int>((sv.array() > cut).count());
    const int qrank = real_rank / 4;
    if (qrank <= rank) return rank;
    rank = qrank;
  }
  return rank;
}

}  // namespace quatkrylov::krylov
