#pragma once

#include <vector>

#include "quatkrylov/core/linear_operator.hpp"
#include "quatkrylov/core/qmatrix.hpp"
#include "quatkrylov/krylov/preconditioner.hpp"
#include "quatkrylov/krylov/types.hpp"

namespace quatkrylov::krylov {

enum class Side { None, Left, Right, Flexible };

/// A V_m = V_{m+1} Hbar_m, or A Z_m = V_{m+1} Hbar_m in the flexible case.
struct ArnoldiDecomposition {
  std::vector<QVector> V;
  std::vector<QVector> Z;
  /// Column j holds h_{0..j+1, j}.
  std::vector<std::vector<Quaternion>> H;
  double beta = 0.0;
  int m = 0;
  /// Largest ||w|| seen before orthogonalization; breakdown scale when ||A||_F is unknown.
  double op_scale = 0.0;

  /// Starts a decomposition from r0 (beta = ||r0||, v1 = r0 / beta).
  static ArnoldiDecomposition start(const QVector& r0);

  QMatrix hbar() const;
  QMatrix basis() const;
  QMatrix zbasis() const;
};

enum class StepStatus { Ok, Breakdown };

/// One modified Gram-Schmidt Arnoldi step on column dec.m, preconditioned on the given side.
/// Breakdown when h_{m+1,m} <= breakdown_tol * scale, where scale is ||A||_F for the
/// unpreconditioned operator when known and the largest ||A v_j|| seen otherwise.
/// On breakdown v_{m+1} is not appended.
StepStatus arnoldi_step(const QLinearOperator& a, ArnoldiDecomposition& dec,
                        const Preconditioner* precond, Side side, const StepState& state,
                        double breakdown_tol, bool reorthogonalize = false);

struct HqlsResult {
  QVector y;
  double resnorm = 0.0;
};

/// Minimizer of ||beta e1 - Hbar y||_2 through the real counterpart; minimum norm if rank deficient.
HqlsResult solve_hqls(const QMatrix& hbar, double beta);

/// Progressive least squares on the Hessenberg matrix with 2x2 quaternion rotations.
class HessenbergLS {
 public:
  explicit HessenbergLS(double beta);
  /// Adds column j (length j+2, last entry real >= 0). Returns the new residual norm.
  double add_column(std::vector<Quaternion> h);
  double resnorm() const { return resnorm_; }
  int size() const { return static_cast<int>(r_.size()); }
  /// False once a zero pivot made the triangular factor singular.
  bool regular() const { return regular_; }
  QVector solve() const;

 private:
  // [[c ubar, s wbar], [-s ubar, c wbar]]
  struct Rotation {
    Quaternion ubar{1.0};
    Quaternion wbar{1.0};
    double c = 1.0;
    double s = 0.0;
  };
  std::vector<std::vector<Quaternion>> r_;
  std::vector<Rotation> rot_;
  std::vector<Quaternion> g_;
  double resnorm_;
  bool regular_ = true;
};

/// Grade of v with respect to A: numerical rank of the real counterpart of [v, Av, ...].
int grade(const QLinearOperator& a, const QVector& v, double tol = 1e-10);

}  // namespace quatkrylov::krylov
