#pragma once

#include <optional>

#include "quatkrylov/core/linear_operator.hpp"
#include "quatkrylov/core/qmatrix.hpp"
#include "quatkrylov/krylov/types.hpp"
#include "quatkrylov/tv/qtv.hpp"

namespace quatkrylov::tv {

struct QTVConfig {
  /// Weight of QTV in ||Ax - b||^2 + lambda QTV(x). Zero gives the unregularized solvers.
  double lambda = 1e-2;
  /// Reweighting sweeps per Arnoldi step.
  int outer_max = 1;
  krylov::SolverConfig inner;
  double eps_irn = 1e-8;
  PinvOptions pinv;
  /// Unregularized runs stop once ||b - A x|| <= discrepancy (absolute); with auto_lambda it
  /// is the residual the chosen lambda aims for.
  std::optional<double> discrepancy;
  /// Stop once ||x_j - x_{j-1}|| <= step_tol ||x_j||. Zero disables.
  double step_tol = 0.0;
  /// Pick lambda per step so that the residual matches the discrepancy (needs discrepancy).
  bool auto_lambda = false;

  void validate() const;
};

struct QTVReport : krylov::SolveReport {
  /// ||b - A x_j||^2 + lambda QTV(x_j) per step, entry 0 for x0.
  std::vector<double> objective_history;
  /// Lambda used at the last step.
  double lambda = 0.0;
};

/// Flexible QGMRES with the step-dependent preconditioner z = (W_j D_hv)^+ (D_hv v) + mean(v),
/// W_1 = I, weights refreshed from x_j after every step (scaled to max 1 inside the
/// preconditioner). Each step solves min ||beta e1 - Hbar y||^2 + (lambda/2) ||W D_hv Z y||^2
/// and x = x0 + Z y.
QTVReport qtv_fqgmres(const QLinearOperator& a, const QVector& b, const DifferenceStack& stack,
                      const QTVConfig& cfg, const QVector& x0 = {});

/// Arnoldi on A; each step solves min ||Hbar y - beta e1||^2 + (lambda/2) ||R y||^2 where
/// P V_m = Q R, P = W D_hv, and refreshes W from x = x0 + V y.
QTVReport qtv_fqgmres_improved(const QLinearOperator& a, const QVector& b,
                               const DifferenceStack& stack, const QTVConfig& cfg,
                               const QVector& x0 = {});

/// Image operators: the side is sqrt of the operator size.
QTVReport qtv_fqgmres(const QLinearOperator& a, const QVector& b, const QTVConfig& cfg);
QTVReport qtv_fqgmres_improved(const QLinearOperator& a, const QVector& b, const QTVConfig& cfg);

/// Minimizer of ||hbar y - beta e1||^2 + weight ||penalty y||^2.
QVector solve_reduced(const QMatrix& hbar, double beta, const QMatrix& penalty, double weight);

/// Triangular factor of P V_m.
QMatrix penalty_factor(const WeightedDifference& p, const std::vector<QVector>& basis);

/// ||b - A x||^2 + lambda QTV(x).
double tv_objective(const QLinearOperator& a, const QVector& b, const QVector& x,
                    const DifferenceStack& stack, double lambda);

}  // namespace quatkrylov::tv
