#include "quatkrylov/tv/qtv.hpp"

#include <cmath>
#include <limits>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

#include "quatkrylov/core/errors.hpp"
#include "quatkrylov/core/parallel.hpp"

namespace quatkrylov::tv {

double qtv(const QVector& x, const DifferenceStack& stack) {
  if (x.size() != stack.size()) throw DimensionError("qtv: length mismatch");
  return stack.squared_gradient(x).array().sqrt().sum();
}

double qtv(const QVector& x, Index n) {
  if (x.size() != n * n) throw DimensionError("qtv: length must be n^2");
  return qtv(x, DifferenceStack::image(n));
}

Eigen::MatrixXd psi_map(const QVector& x) {
  Eigen::MatrixXd m(x.size(), 4);
  for (int c = 0; c < 4; ++c) m.col(c) = x.part(c);
  return m;
}

QVector psi_inverse(const Eigen::MatrixXd& m) {
  if (m.cols() != 4) throw DimensionError("psi_inverse: need 4 columns");
  return {m.col(0), m.col(1), m.col(2), m.col(3)};
}

Tensor3 gradient_tensor(const Eigen::MatrixXd& psi, const DifferenceStack& stack) {
  if (psi.rows() != stack.size() || psi.cols() != 4) {
    throw DimensionError("gradient_tensor: Psi shape mismatch");
  }
  Tensor3 t(stack.rows(), stack.directions(), 4);
  for (int d = 0; d < stack.directions(); ++d) {
    for (int k = 0; k < 4; ++k) {
      const Eigen::VectorXd g = stack.direction(d) * psi.col(k);
      for (Index i = 0; i < g.size(); ++i) t(i, d, k) = g[i];
    }
  }
  return t;
}

namespace {

// Accumulates |a|^e terms; e = inf keeps the maximum.
struct PowerSum {
  explicit PowerSum(double e) : e(e) {}
  void add(double a) {
    a = std::abs(a);
    if (std::isinf(e)) {
      acc = std::max(acc, a);
    } else {
      acc += std::pow(a, e);
    }
  }
  double value() const { return std::isinf(e) ? acc : std::pow(acc, 1.0 / e); }
  double e;
  double acc = 0.0;
};

}  // namespace

double ctv_norm(const Tensor3& u, double p, double q, double r) {
  if (!(p >= 1.0) || !(q >= 1.0) || !(r >= 1.0)) {
    throw InvalidParameter("ctv_norm: exponents must be >= 1");
  }
  PowerSum outer(r);
  for (Index i = 0; i < u.pixels(); ++i) {
    PowerSum mid(q);
    for (Index j = 0; j < u.derivatives(); ++j) {
      PowerSum inner(p);
      for (Index k = 0; k < u.colours(); ++k) inner.add(u(i, j, k));
      mid.add(inner.value());
    }
    outer.add(mid.value());
  }
  return outer.value();
}

Eigen::VectorXd IRNWeights::full() const { return w.replicate(directions, 1); }

IRNWeights build_weights(const QVector& x, const DifferenceStack& stack, double eps_irn) {
  if (!(eps_irn >= 0.0)) throw InvalidParameter("build_weights: eps_irn must be >= 0");
  IRNWeights out;
  out.eps_irn = eps_irn;
  out.directions = stack.directions();
  out.w = (stack.squared_gradient(x).array() + eps_irn * eps_irn).pow(-0.25).matrix();
  return out;
}

double weighted_norm_sq(const QVector& x, const DifferenceStack& stack, const IRNWeights& w) {
  if (w.w.size() != stack.rows()) throw DimensionError("weighted_norm_sq: weight length mismatch");
  const QVector g = stack.apply(x);
  const Eigen::ArrayXd wf = w.full().array().square();
  double s = 0.0;
  for (int c = 0; c < 4; ++c) s += (wf * g.part(c).array().square()).sum();
  return s;
}

QVector remove_mean(const QVector& v) {
  QVector out = v;
  if (v.size() == 0) return out;
  for (int c = 0; c < 4; ++c) out.part(c).array() -= v.part(c).mean();
  return out;
}

struct WeightedDifference::Solver {
  SpMat normal;
  Eigen::ConjugateGradient<SpMat, Eigen::Lower | Eigen::Upper> cg;
  // Cholesky of the normal matrix with unknown 0 pinned to zero.
  Eigen::SimplicialLDLT<SpMat> ldlt;
};

WeightedDifference::WeightedDifference(DifferenceStack stack, IRNWeights weights, PinvOptions opts)
    : stack_(std::move(stack)), opts_(opts), solver_(std::make_unique<Solver>()) {
  if (weights.w.size() != stack_.rows()) {
    throw DimensionError("WeightedDifference: weight length mismatch");
  }
  if (!(weights.w.array() > 0.0).all()) {
    throw InvalidParameter("WeightedDifference: weights must be positive");
  }
  wfull_ = weights.full();
  const SpMat wd = wfull_.asDiagonal() * stack_.stacked();
  solver_->normal = wd.transpose() * wd;
  if (opts_.method == PinvOptions::Method::ConjugateGradient) {
    solver_->cg.setTolerance(opts_.tol);
    solver_->cg.setMaxIterations(opts_.max_iter);
    solver_->cg.compute(solver_->normal);
  } else {
    const Index n = stack_.size();
    const SpMat pinned = solver_->normal.bottomRightCorner(n - 1, n - 1);
    solver_->ldlt.compute(pinned);
    if (solver_->ldlt.info() != Eigen::Success) {
      throw Error("WeightedDifference: Cholesky factorization failed");
    }
  }
}

WeightedDifference::WeightedDifference(DifferenceStack stack, PinvOptions opts)
    : WeightedDifference(stack,
                         IRNWeights{Eigen::VectorXd::Ones(stack.rows()), 0.0, stack.directions()},
                         opts) {}

WeightedDifference::~WeightedDifference() = default;

QVector WeightedDifference::apply(const QVector& z) const {
  QVector g = stack_.apply(z);
  for (int c = 0; c < 4; ++c) g.part(c).array() *= wfull_.array();
  return g;
}

QVector WeightedDifference::pinv(const QVector& v) const {
  if (v.size() != stack_.stacked().rows()) throw DimensionError("pinv: length mismatch");
  const Index n = stack_.size();
  QVector z(n);
  for_each_part([&](int c) {
    const Eigen::VectorXd rhs =
        stack_.stacked().transpose() * (wfull_.array() * v.part(c).array()).matrix();
    if (rhs.squaredNorm() == 0.0) return;
    if (opts_.method == PinvOptions::Method::ConjugateGradient) {
      z.part(c) = solver_->cg.solve(rhs);
    } else {
      z.part(c)[0] = 0.0;
      z.part(c).tail(n - 1) = solver_->ldlt.solve(rhs.tail(n - 1));
    }
    z.part(c).array() -= z.part(c).mean();
  });
  return z;
}

QVector apply_p_pinv(const WeightedDifference& p, const QVector& v) { return p.pinv(v); }

}  // namespace quatkrylov::tv
