#pragma once

#include <memory>
#include <vector>

#include "quatkrylov/tv/difference.hpp"

namespace quatkrylov::tv {

/// QTV(x) = sum_i (|[D_h x]_i|^2 + |[D_v x]_i|^2)^{1/2}.
double qtv(const QVector& x, const DifferenceStack& stack);
/// Image of side n, x of length n^2.
double qtv(const QVector& x, Index n);

/// Psi(x): N x 4 real matrix with columns (real, r, g, b).
Eigen::MatrixXd psi_map(const QVector& x);
QVector psi_inverse(const Eigen::MatrixXd& m);

/// Real tensor indexed (pixel, derivative, colour).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(Index pix, Index der, Index col)
      : pix_(pix), der_(der), col_(col), data_(static_cast<std::size_t>(pix * der * col), 0.0) {}

  Index pixels() const { return pix_; }
  Index derivatives() const { return der_; }
  Index colours() const { return col_; }

  double& operator()(Index i, Index j, Index k) { return data_[offset(i, j, k)]; }
  double operator()(Index i, Index j, Index k) const { return data_[offset(i, j, k)]; }

 private:
  std::size_t offset(Index i, Index j, Index k) const {
    return static_cast<std::size_t>((i * der_ + j) * col_ + k);
  }
  Index pix_ = 0, der_ = 0, col_ = 0;
  std::vector<double> data_;
};

/// D Psi(x): entry (i, d, k) = [D_d x^k]_i.
Tensor3 gradient_tensor(const Eigen::MatrixXd& psi, const DifferenceStack& stack);

/// (sum_i (sum_j (sum_k |u_ijk|^p)^{q/p})^{r/q})^{1/r}. Exponents may be +infinity.
double ctv_norm(const Tensor3& u, double p, double q, double r);

/// Diagonal of W~ (length N~) from the previous iterate.
struct IRNWeights {
  Eigen::VectorXd w;
  double eps_irn = 0.0;
  int directions = 2;

  /// diag(W~, W~, ...) over all directions.
  Eigen::VectorXd full() const;
};

/// w_i = (sum_d |[D_d x]_i|^2 + eps_irn^2)^{-1/4}.
IRNWeights build_weights(const QVector& x, const DifferenceStack& stack, double eps_irn = 1e-8);

/// ||W D_hv x||_2^2.
double weighted_norm_sq(const QVector& x, const DifferenceStack& stack, const IRNWeights& w);

struct PinvOptions {
  enum class Method { ConjugateGradient, Cholesky };
  Method method = Method::ConjugateGradient;
  /// Relative residual tolerance on the normal equations (conjugate gradient only).
  double tol = 1e-10;
  int max_iter = 500;
};

/// P = W D_hv with its pseudoinverse. The normal matrix is assembled once per weight set.
class WeightedDifference {
 public:
  WeightedDifference(DifferenceStack stack, IRNWeights weights, PinvOptions opts = {});
  /// Unit weights.
  explicit WeightedDifference(DifferenceStack stack, PinvOptions opts = {});
  ~WeightedDifference();
  WeightedDifference(const WeightedDifference&) = delete;
  WeightedDifference& operator=(const WeightedDifference&) = delete;

  const DifferenceStack& stack() const { return stack_; }
  const Eigen::VectorXd& row_weights() const { return wfull_; }

  /// P z.
  QVector apply(const QVector& z) const;
  /// Minimum-norm least-squares solution of P z = v, per component.
  QVector pinv(const QVector& v) const;

 private:
  struct Solver;
  DifferenceStack stack_;
  Eigen::VectorXd wfull_;
  PinvOptions opts_;
  std::unique_ptr<Solver> solver_;
};

QVector apply_p_pinv(const WeightedDifference& p, const QVector& v);

/// Subtracts the per-component mean (projection onto the complement of the constants).
QVector remove_mean(const QVector& v);

}  // namespace quatkrylov::tv
