#include "quatkrylov/tv/solvers.hpp"

#include <chrono>
#include <cmath>
#include <memory>

#include "quatkrylov/core/qlinalg.hpp"
#include "quatkrylov/core/real_counterpart.hpp"
#include "quatkrylov/krylov/arnoldi.hpp"

namespace quatkrylov::tv {

using krylov::Termination;

void QTVConfig::validate() const {
  if (!(lambda >= 0.0) || std::isinf(lambda)) throw InvalidParameter("QTVConfig: lambda must be >= 0");
  if (outer_max < 1) throw InvalidParameter("QTVConfig: outer_max must be >= 1");
  if (!(eps_irn > 0.0)) throw InvalidParameter("QTVConfig: eps_irn must be > 0");
  if (!(step_tol >= 0.0)) throw InvalidParameter("QTVConfig: step_tol must be >= 0");
  if (discrepancy && !(*discrepancy >= 0.0)) {
    throw InvalidParameter("QTVConfig: discrepancy must be >= 0");
  }
  if (auto_lambda && !discrepancy) {
    throw InvalidParameter("QTVConfig: auto_lambda needs a discrepancy target");
  }
  if (inner.restart) throw InvalidParameter("QTVConfig: restarts are not supported");
  if (pinv.max_iter < 1 || !(pinv.tol > 0.0)) throw InvalidParameter("QTVConfig: bad pinv options");
  inner.validate();
}

QVector solve_reduced(const QMatrix& hbar, double beta, const QMatrix& penalty, double weight) {
  if (penalty.cols() != hbar.cols()) throw DimensionError("solve_reduced: column mismatch");
  QVector c(hbar.rows());
  c.set(0, Quaternion{beta});
  if (weight == 0.0) return qlstsq(hbar, c).x;
  QMatrix s = penalty;
  s *= std::sqrt(weight);
  return qlstsq_stacked(hbar, c, s, QVector(penalty.rows())).x;
}

QMatrix penalty_factor(const WeightedDifference& p, const std::vector<QVector>& basis) {
  std::vector<QVector> cols;
  cols.reserve(basis.size());
  for (const QVector& v : basis) cols.push_back(p.apply(v));
  return householder_r(QMatrix::from_columns(cols));
}

double tv_objective(const QLinearOperator& a, const QVector& b, const QVector& x,
                    const DifferenceStack& stack, double lambda) {
  const double r = (b - a.apply(x)).squared_norm();
  return lambda == 0.0 ? r : r + lambda * qtv(x, stack);
}

namespace {

double projected_residual(const QMatrix& hbar, double beta, const QVector& y) {
  QVector r = matvec(hbar, y);
  r *= -1.0;
  r.set(0, r[0] + Quaternion{beta});
  return norm2(r);
}

QVector combine(const std::vector<QVector>& basis, const QVector& y, Index n) {
  QVector out(n);
  for (Index i = 0; i < y.size(); ++i) out.add_scaled(basis[static_cast<std::size_t>(i)], y[i]);
  return out;
}

// Largest lambda in [1e-14, 1e6] whose projected residual stays below target; 0 if even the
// smallest misses it. Bisection on log lambda over normal equations of the small problem.
double discrepancy_lambda(const QMatrix& hbar, double beta, const QMatrix& penalty, double target) {
  const Eigen::MatrixXd h = to_real_counterpart(hbar), p = to_real_counterpart(penalty);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(h.rows());
  c[0] = beta;
  const Eigen::MatrixXd hh = h.transpose() * h, pp = p.transpose() * p;
  const Eigen::VectorXd hc = h.transpose() * c;
  auto residual = [&](double lam) {
    const Eigen::VectorXd y = (hh + 0.5 * lam * pp).ldlt().solve(hc);
    return (c - h * y).norm();
  };
  double lo = std::log(1e-14), hi = std::log(1e6);
  if (residual(std::exp(lo)) > target) return 0.0;
  if (residual(std::exp(hi)) <= target) return std::exp(hi);
  for (int it = 0; it < 50; ++it) {
    const double mid = 0.5 * (lo + hi);
    (residual(std::exp(mid)) <= target ? lo : hi) = mid;
  }
  return std::exp(lo);
}

Index image_side(const QLinearOperator& a) {
  const auto n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(a.cols()))));
  if (n * n != a.cols()) throw DimensionError("qtv solver: operator size is not a square image");
  return n;
}

// Shared bookkeeping of the two solvers.
class Run {
 public:
  Run(const QLinearOperator& a, const QVector& b, const DifferenceStack& stack, const QTVConfig& cfg,
      const QVector& x0, const char* name)
      : a_(a), b_(b), stack_(stack), cfg_(cfg), t0_(std::chrono::steady_clock::now()) {
    cfg.validate();
    const Index n = a.rows();
    if (a.cols() != n) throw DimensionError("qtv solver: operator must be square");
    if (b.size() != n) throw DimensionError("qtv solver: rhs length mismatch");
    if (stack.size() != n) throw DimensionError("qtv solver: difference stack size mismatch");
    if (x0.size() != 0 && x0.size() != n) throw DimensionError("qtv solver: x0 length mismatch");
    rep.solver = name;
    rep.tol = cfg.inner.tol;
    rep.bnorm = norm2(b);
    rep.reference_norm = rep.bnorm;
    rep.lambda = cfg.lambda;
    rep.cycle_starts.push_back(0);
    x0_ = x0.size() == 0 ? QVector(n) : x0;
    x = x0_;
  }

  const QVector& x0() const { return x0_; }

  QTVReport finish(Termination t, int iterations) {
    rep.termination = t;
    rep.iterations = iterations;
    rep.true_residual = norm2(b_ - a_.apply(x));
    rep.x = std::move(x);
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    return std::move(rep);
  }

  void record(double res) {
    rep.residual_history.push_back(res);
    rep.objective_history.push_back(res * res + (cfg_.lambda == 0.0 ? 0.0 : cfg_.lambda * qtv(x, stack_)));
  }

  // Stop test after a step that produced x (previous iterate in prev).
  std::optional<Termination> check(krylov::StepStatus status, const QVector& prev, int total) {
    const auto& h = rep.residual_history;
    const double res = h.back(), last = h[h.size() - 2];
    stagnant_ = (last > 0.0 && (last - res) / last < cfg_.inner.stagnation_rtol) ? stagnant_ + 1 : 0;
    if (status == krylov::StepStatus::Breakdown) return Termination::Breakdown;
    if (res <= cfg_.inner.tol * rep.bnorm) return Termination::Converged;
    if (cfg_.discrepancy && cfg_.lambda == 0.0 && !cfg_.auto_lambda && res <= *cfg_.discrepancy) {
      return Termination::Converged;
    }
    if (cfg_.step_tol > 0.0 && norm2(x - prev) <= cfg_.step_tol * norm2(x)) {
      return Termination::Converged;
    }
    if (cfg_.lambda == 0.0 && !cfg_.auto_lambda && stagnant_ >= cfg_.inner.stagnation_window) {
      return Termination::Stagnation;
    }
    if (total >= cfg_.inner.max_iter) return Termination::MaxIter;
    return std::nullopt;
  }

  QTVReport rep;
  QVector x;

 private:
  const QLinearOperator& a_;
  const QVector& b_;
  const DifferenceStack& stack_;
  const QTVConfig& cfg_;
  std::chrono::steady_clock::time_point t0_;
  QVector x0_;
  int stagnant_ = 0;
};

}  // namespace

namespace {

// Shared loop. Flexible: Arnoldi with the pseudoinverse preconditioner, x = x0 + Z y.
// Otherwise plain Arnoldi on A, x = x0 + V y.
QTVReport run_tv(const QLinearOperator& a, const QVector& b, const DifferenceStack& stack,
                 const QTVConfig& cfg, const QVector& x0, bool flexible) {
  Run run(a, b, stack, cfg, x0, flexible ? "qtv-fqgmres" : "qtv-fqgmres-improved");
  const Index n = a.rows();
  if (run.rep.bnorm == 0.0) {
    run.x = QVector(n);
    run.record(0.0);
    return run.finish(Termination::Converged, 0);
  }
  const QVector r0 = b - a.apply(run.x);
  const double beta = norm2(r0);
  run.record(beta);
  if (beta <= cfg.inner.tol * run.rep.bnorm) return run.finish(Termination::Converged, 0);

  const bool regularized = cfg.lambda > 0.0 || cfg.auto_lambda;
  const bool zero_start = x0.size() == 0 || x0.squared_norm() == 0.0;
  // W_1 = I unless a nonzero starting guess carries information.
  IRNWeights weights = zero_start ? IRNWeights{Eigen::VectorXd::Ones(stack.rows()), cfg.eps_irn,
                                               stack.directions()}
                                  : build_weights(run.x, stack, cfg.eps_irn);

  std::shared_ptr<const WeightedDifference> current;
  auto refresh_preconditioner = [&] {
    IRNWeights w = weights;
    w.w /= w.w.maxCoeff();
    current = std::make_shared<const WeightedDifference>(stack, std::move(w), cfg.pinv);
  };
  if (flexible && !zero_start) refresh_preconditioner();
  krylov::FunctionPreconditioner pre(
      [&](const QVector& v, const krylov::StepState&) {
        if (!current) return v;
        QVector z = current->pinv(stack.apply(v));
        for (int c = 0; c < 4; ++c) z.part(c).array() += v.part(c).mean();
        return z;
      },
      "qtv-pinv");

  krylov::ArnoldiDecomposition dec = krylov::ArnoldiDecomposition::start(r0);
  krylov::HessenbergLS ls(beta);
  bool fallback = false;
  std::vector<QVector> dcols;  // D_hv applied to each search direction
  for (int j = 0;; ++j) {
    const krylov::StepStatus status = krylov::arnoldi_step(
        a, dec, flexible ? &pre : nullptr, flexible ? krylov::Side::Flexible : krylov::Side::None,
        krylov::StepState{j, &run.x, nullptr}, cfg.inner.breakdown_tol, cfg.inner.reorthogonalize);
    ls.add_column(dec.H.back());
    fallback = fallback || !ls.regular();
    const QMatrix hbar = dec.hbar();
    const std::vector<QVector>& dirs = flexible ? dec.Z : dec.V;
    const QVector prev = run.x;
    QVector y;
    if (!regularized) {
      y = fallback ? krylov::solve_hqls(hbar, beta).y : ls.solve();
      run.x = run.x0() + combine(dirs, y, n);
      if (flexible) weights = build_weights(run.x, stack, cfg.eps_irn);
    } else {
      dcols.push_back(stack.apply(dirs[static_cast<std::size_t>(j)]));
      for (int sweep = 0; sweep < cfg.outer_max; ++sweep) {
        const Eigen::ArrayXd wf = weights.full().array();
        std::vector<QVector> pz;
        pz.reserve(dcols.size());
        for (const QVector& g : dcols) {
          QVector c = g;
          for (int p = 0; p < 4; ++p) c.part(p).array() *= wf;
          pz.push_back(std::move(c));
        }
        const QMatrix r = householder_r(QMatrix::from_columns(pz));
        double lam = cfg.lambda;
        if (cfg.auto_lambda) {
          lam = discrepancy_lambda(hbar, beta, r, *cfg.discrepancy);
        }
        run.rep.lambda = lam;
        y = solve_reduced(hbar, beta, r, 0.5 * lam);
        run.x = run.x0() + combine(dirs, y, n);
        weights = build_weights(run.x, stack, cfg.eps_irn);
      }
    }
    if (flexible) refresh_preconditioner();
    run.record(projected_residual(hbar, beta, y));
    if (auto t = run.check(status, prev, j + 1)) return run.finish(*t, j + 1);
  }
}

}  // namespace

QTVReport qtv_fqgmres(const QLinearOperator& a, const QVector& b, const DifferenceStack& stack,
                      const QTVConfig& cfg, const QVector& x0) {
  return run_tv(a, b, stack, cfg, x0, true);
}

QTVReport qtv_fqgmres_improved(const QLinearOperator& a, const QVector& b,
                               const DifferenceStack& stack, const QTVConfig& cfg,
                               const QVector& x0) {
  return run_tv(a, b, stack, cfg, x0, false);
}

QTVReport qtv_fqgmres(const QLinearOperator& a, const QVector& b, const QTVConfig& cfg) {
  return qtv_fqgmres(a, b, DifferenceStack::image(image_side(a)), cfg);
}

QTVReport qtv_fqgmres_improved(const QLinearOperator& a, const QVector& b, const QTVConfig& cfg) {
  return qtv_fqgmres_improved(a, b, DifferenceStack::image(image_side(a)), cfg);
}

}  // namespace quatkrylov::tv
