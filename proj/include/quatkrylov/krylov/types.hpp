#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatkrylov/core/qvector.hpp"

namespace quatkrylov::krylov {

enum class Termination { Converged, MaxIter, Breakdown, Stagnation };

std::string to_string(Termination t);
Termination termination_from_string(const std::string& s);

struct SolverConfig {
  double tol = 1e-6;
  int max_iter = 1000;
  /// Cycle length. Unset means no restarts.
  std::optional<int> restart;
  /// h_{j+1,j} <= breakdown_tol * scale signals breakdown; scale is ||A||_F when known.
  double breakdown_tol = 1e-13;
  /// Terminate after this many consecutive steps with relative decrease below stagnation_rtol.
  int stagnation_window = 20;
  double stagnation_rtol = 1e-14;
  /// Second Gram-Schmidt pass in every Arnoldi step.
  bool reorthogonalize = false;

  void validate() const;
};

struct SolveReport {
  std::string solver;
  QVector x;
  /// Entry 0 is the initial residual norm, then one entry per Arnoldi step.
  std::vector<double> residual_history;
  /// History holds norms of the preconditioned residual (left preconditioning).
  bool preconditioned_history = false;
  /// Indices into residual_history where a restart cycle begins.
  std::vector<int> cycle_starts;
  /// ||b - A x|| recomputed at exit.
  double true_residual = 0.0;
  double bnorm = 0.0;
  /// Norm the history is measured against: ||b||, or ||P^{-1} b|| for left preconditioning.
  double reference_norm = 0.0;
  double tol = 0.0;
  int iterations = 0;
  double wall_time = 0.0;
  Termination termination = Termination::MaxIter;

  double relative_residual() const { return bnorm > 0.0 ? true_residual / bnorm : true_residual; }
  /// Converged, or a breakdown whose final residual meets the tolerance.
  bool converged() const;
};

}  // namespace quatkrylov::krylov
