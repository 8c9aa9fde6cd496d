#include "quatkrylov/krylov/preconditioner.hpp"

#include <cmath>
#include <string>

namespace quatkrylov::krylov {

SgsPreconditioner::SgsPreconditioner(QSparseMatrix a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols()) throw DimensionError("SGS: matrix must be square");
  diag_ = a_.diagonal();
  inv_diag_.resize(diag_.size());
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (diag_[i].norm_sq() == 0.0) {
      throw PreconditionerError("SGS: zero diagonal entry at row " + std::to_string(i));
    }
    inv_diag_[i] = qinv(diag_[i]);
  }
}

QVector SgsPreconditioner::do_apply(const QVector& v, const StepState&) const {
  const Index n = a_.rows();
  if (v.size() != n) throw DimensionError("SGS apply: length mismatch");
  const auto& cp = a_.col_ptr();
  const auto& ri = a_.row_idx();
  std::vector<Quaternion> w(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = v[i];

  // (D + L) t = v, column oriented
  for (Index j = 0; j < n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const Quaternion tj = inv_diag_[uj] * w[uj];
    w[uj] = tj;
    for (Index p = cp[uj]; p < cp[uj + 1]; ++p) {
      const Index r = ri[static_cast<std::size_t>(p)];
      if (r > j) w[static_cast<std::size_t>(r)] -= a_.value_at(p) * tj;
    }
  }
  // u = D t
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = diag_[i] * w[i];
  // (D + U) z = u
  for (Index j = n - 1; j >= 0; --j) {
    const auto uj = static_cast<std::size_t>(j);
    const Quaternion zj = inv_diag_[uj] * w[uj];
    w[uj] = zj;
    for (Index p = cp[uj]; p < cp[uj + 1]; ++p) {
      const Index r = ri[static_cast<std::size_t>(p)];
      if (r < j) w[static_cast<std::size_t>(r)] -= a_.value_at(p) * zj;
    }
  }
  QVector z(n);
  for (Index i = 0; i < n; ++i) z.set(i, w[static_cast<std::size_t>(i)]);
  return z;
}

JacobiSqrtResidual::JacobiSqrtResidual(QLinearOperator a, QVector b, double floor)
    : a_(std::move(a)), b_(std::move(b)), floor_(floor) {
  if (a_.rows() != b_.size()) throw DimensionError("jacobi-sqrt-res: rhs length mismatch");
  if (!(floor_ > 0.0)) throw InvalidParameter("jacobi-sqrt-res: floor must be positive");
}

Eigen::VectorXd JacobiSqrtResidual::weights(const QVector& residual) const {
  return residual.abs().array().sqrt().max(floor_).matrix();
}

QVector JacobiSqrtResidual::do_apply(const QVector& v, const StepState& s) const {
  if (v.size() != b_.size()) throw DimensionError("jacobi-sqrt-res apply: length mismatch");
  Eigen::VectorXd d;
  if (s.residual != nullptr) {
    d = weights(*s.residual);
  } else if (s.x != nullptr) {
    d = weights(b_ - a_.apply(*s.x));
  } else {
    d = weights(b_);
  }
  QVector z = v;
  for (int c = 0; c < 4; ++c) z.part(c).array() /= d.array();
  return z;
}

PreconditionerPtr identity_preconditioner() { return std::make_shared<IdentityPreconditioner>(); }

PreconditionerPtr sgs_preconditioner(const QSparseMatrix& a) {
  return std::make_shared<SgsPreconditioner>(a);
}

PreconditionerPtr sgs_preconditioner(const QMatrix& a) {
  return std::make_shared<SgsPreconditioner>(QSparseMatrix::from_dense(a));
}

PreconditionerPtr jacobi_sqrt_residual(const QLinearOperator& a, const QVector& b, double floor) {
  return std::make_shared<JacobiSqrtResidual>(a, b, floor);
}

}  // namespace quatkrylov::krylov
