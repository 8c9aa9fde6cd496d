#include "quatkrylov/krylov/gmres.hpp"

#include <chrono>
#include <optional>

namespace quatkrylov::krylov {

namespace {

const char* default_name(Side side) {
  switch (side) {
    case Side::None:
      return "qgmres";
    case Side::Left:
      return "qgmres-lp";
    case Side::Right:
      return "qgmres-rp";
    case Side::Flexible:
      return "fqgmres";
  }
  return "gmres";
}

QVector combine(const std::vector<QVector>& basis, const QVector& y, Index n) {
  QVector out(n);
  for (Index i = 0; i < y.size(); ++i) out.add_scaled(basis[static_cast<std::size_t>(i)], y[i]);
  return out;
}

}  // namespace

SolveReport gmres(const QLinearOperator& a, const QVector& b, const QVector& x0,
                  const Preconditioner* precond, Side side, const SolverConfig& cfg,
                  std::string name) {
  const auto t0 = std::chrono::steady_clock::now();
  cfg.validate();
  const Index n = a.rows();
  if (a.cols() != n) throw DimensionError("gmres: operator must be square");
  if (b.size() != n) throw DimensionError("gmres: rhs length mismatch");
  if (x0.size() != 0 && x0.size() != n) throw DimensionError("gmres: x0 length mismatch");

  SolveReport rep;
  rep.solver = name.empty() ? default_name(side) : std::move(name);
  rep.tol = cfg.tol;
  rep.preconditioned_history = side == Side::Left;
  rep.bnorm = norm2(b);
  QVector x = x0.size() == 0 ? QVector(n) : x0;

  int total = 0;
  auto finish = [&](Termination t) {
    rep.termination = t;
    rep.iterations = total;
    rep.true_residual = norm2(b - a.apply(x));
    rep.x = std::move(x);
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  };

  if (rep.bnorm == 0.0) {
    x = QVector(n);
    rep.residual_history.push_back(0.0);
    rep.cycle_starts.push_back(0);
    return finish(Termination::Converged);
  }
  rep.reference_norm =
      (side == Side::Left && precond) ? norm2(precond->apply(b, StepState{})) : rep.bnorm;
  const double target = cfg.tol * rep.reference_norm;
  const bool track_iterate = side == Side::Flexible && precond && precond->needs_iterate();
  const int cycle_len = cfg.restart.value_or(cfg.max_iter);

  int stagnant = 0;
  while (true) {
    QVector r = b - a.apply(x);
    const StepState s0{total, &x, &r};
    const QVector rt = (side == Side::Left && precond) ? precond->apply(r, s0) : r;
    const double beta = norm2(rt);
    rep.cycle_starts.push_back(static_cast<int>(rep.residual_history.size()));
    if (rep.residual_history.empty()) {
      rep.residual_history.push_back(beta);
    } else {
      rep.cycle_starts.back() -= 1;
    }
    if (beta <= target) return finish(Termination::Converged);
    if (total >= cfg.max_iter) return finish(Termination::MaxIter);

    ArnoldiDecomposition dec = ArnoldiDecomposition::start(rt);
    HessenbergLS ls(beta);
    std::optional<HqlsResult> fallback;
    QVector xj = x, rj = r;
    std::optional<Termination> done;

    for (int j = 0; j < cycle_len; ++j) {
      const StepState st{total, &xj, &rj};
      const StepStatus status =
          arnoldi_step(a, dec, precond, side, st, cfg.breakdown_tol, cfg.reorthogonalize);
      ++total;
      double res = ls.add_column(dec.H.back());
      if (!ls.regular()) {
        fallback = solve_hqls(dec.hbar(), beta);
        res = fallback->resnorm;
      }
      const double prev = rep.residual_history.back();
      rep.residual_history.push_back(res);

      if (track_iterate && status == StepStatus::Ok) {
        const QVector y = fallback ? fallback->y : ls.solve();
        xj = x + combine(dec.Z, y, n);
        rj = b - a.apply(xj);
      }

      stagnant = (prev > 0.0 && (prev - res) / prev < cfg.stagnation_rtol) ? stagnant + 1 : 0;
      if (status == StepStatus::Breakdown) {
        done = Termination::Breakdown;
      } else if (res <= target) {
        done = Termination::Converged;
      } else if (stagnant >= cfg.stagnation_window) {
        done = Termination::Stagnation;
      } else if (total >= cfg.max_iter) {
        done = Termination::MaxIter;
      }
      if (done) break;
    }

    const QVector y = fallback ? fallback->y : ls.solve();
    switch (side) {
      case Side::None:
      case Side::Left:
        x += combine(dec.V, y, n);
        break;
      case Side::Right: {
        const QVector u = combine(dec.V, y, n);
        x += precond ? precond->apply(u, StepState{total, &x, nullptr}) : u;
        break;
      }
      case Side::Flexible:
        x += combine(dec.Z, y, n);
        break;
    }
    if (done) return finish(*done);
  }
}

SolveReport qgmres(const QLinearOperator& a, const QVector& b, const QVector& x0,
                   const SolverConfig& cfg) {
  return gmres(a, b, x0, nullptr, Side::None, cfg);
}

SolveReport qgmres_left(const QLinearOperator& a, const QVector& b, const QVector& x0,
                        const Preconditioner& p, const SolverConfig& cfg) {
  return gmres(a, b, x0, &p, Side::Left, cfg);
}

SolveReport qgmres_right(const QLinearOperator& a, const QVector& b, const QVector& x0,
                         const Preconditioner& p, const SolverConfig& cfg) {
  return gmres(a, b, x0, &p, Side::Right, cfg);
}

SolveReport fqgmres(const QLinearOperator& a, const QVector& b, const QVector& x0,
                    const Preconditioner& p, const SolverConfig& cfg) {
  return gmres(a, b, x0, &p, Side::Flexible, cfg);
}

}  // namespace quatkrylov::krylov
