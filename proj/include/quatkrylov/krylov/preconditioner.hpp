#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "quatkrylov/core/linear_operator.hpp"

namespace quatkrylov::krylov {

/// What a step-dependent preconditioner may look at. Pointers may be null.
struct StepState {
  int iteration = 0;
  const QVector* x = nullptr;
  const QVector* residual = nullptr;
};

/// Applies P^{-1}. Implementations must be reentrant.
class Preconditioner {
 public:
  virtual ~Preconditioner() = default;

  QVector apply(const QVector& v, const StepState& s) const { return do_apply(v, s); }
  QVector apply(const QVector& v, int iteration = 0) const {
    return do_apply(v, StepState{iteration, nullptr, nullptr});
  }

  /// True when apply needs the current iterate and residual (flexible use only).
  virtual bool needs_iterate() const { return false; }
  virtual std::string name() const = 0;

 protected:
  virtual QVector do_apply(const QVector& v, const StepState& s) const = 0;
};

using PreconditionerPtr = std::shared_ptr<const Preconditioner>;

class IdentityPreconditioner final : public Preconditioner {
 public:
  std::string name() const override { return "none"; }

 protected:
  QVector do_apply(const QVector& v, const StepState&) const override { return v; }
};

/// Symmetric Gauss-Seidel: P = (D+L) D^{-1} (D+U).
class SgsPreconditioner final : public Preconditioner {
 public:
  explicit SgsPreconditioner(QSparseMatrix a);
  std::string name() const override { return "sgs"; }

 protected:
  QVector do_apply(const QVector& v, const StepState& s) const override;

 private:
  QSparseMatrix a_;
  std::vector<Quaternion> diag_;
  std::vector<Quaternion> inv_diag_;
};

/// P_j = diag(max(sqrt|r_j|, floor)) with r_j = b - A x_j.
class JacobiSqrtResidual final : public Preconditioner {
 public:
  JacobiSqrtResidual(QLinearOperator a, QVector b, double floor = 1e-8);
  bool needs_iterate() const override { return true; }
  std::string name() const override { return "jacobi-sqrt-res"; }

  /// The diagonal used for a given residual.
  Eigen::VectorXd weights(const QVector& residual) const;

 protected:
  QVector do_apply(const QVector& v, const StepState& s) const override;

 private:
  QLinearOperator a_;
  QVector b_;
  double floor_;
};

/// Wraps a callable.
class FunctionPreconditioner final : public Preconditioner {
 public:
  using Fn = std::function<QVector(const QVector&, const StepState&)>;
  FunctionPreconditioner(Fn f, std::string name, bool needs_iterate = false)
      : f_(std::move(f)), name_(std::move(name)), needs_iterate_(needs_iterate) {}
  bool needs_iterate() const override { return needs_iterate_; }
  std::string name() const override { return name_; }

 protected:
  QVector do_apply(const QVector& v, const StepState& s) const override { return f_(v, s); }

 private:
  Fn f_;
  std::string name_;
  bool needs_iterate_;
};

PreconditionerPtr identity_preconditioner();
PreconditionerPtr sgs_preconditioner(const QSparseMatrix& a);
PreconditionerPtr sgs_preconditioner(const QMatrix& a);
PreconditionerPtr jacobi_sqrt_residual(const QLinearOperator& a, const QVector& b,
                                       double floor = 1e-8);

}  // namespace quatkrylov::krylov
