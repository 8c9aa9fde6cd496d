#pragma once

#include <string>

#include "quatkrylov/krylov/arnoldi.hpp"

namespace quatkrylov::krylov {

/// Shared driver for every variant. An empty x0 means zero.
SolveReport gmres(const QLinearOperator& a, const QVector& b, const QVector& x0,
                  const Preconditioner* precond, Side side, const SolverConfig& cfg,
                  std::string name = {});

SolveReport qgmres(const QLinearOperator& a, const QVector& b, const QVector& x0,
                   const SolverConfig& cfg);
SolveReport qgmres_left(const QLinearOperator& a, const QVector& b, const QVector& x0,
                        const Preconditioner& p, const SolverConfig& cfg);
SolveReport qgmres_right(const QLinearOperator& a, const QVector& b, const QVector& x0,
                         const Preconditioner& p, const SolverConfig& cfg);
SolveReport fqgmres(const QLinearOperator& a, const QVector& b, const QVector& x0,
                    const Preconditioner& p, const SolverConfig& cfg);

}  // namespace quatkrylov::krylov
