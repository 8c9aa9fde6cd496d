#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quatkrylov/core/linear_operator.hpp"
#include "quatkrylov/core/qlinalg.hpp"
#include "quatkrylov/core/random.hpp"
#include "quatkrylov/core/real_counterpart.hpp"

using namespace quatkrylov;
using qk_oracle::qmdist;
using qk_oracle::qvdist;

namespace {

double rel(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return (a - b).norm() / b.norm(); }

// Real counterpart written out block by block from the left-multiplication matrices.
Eigen::MatrixXd counterpart_oracle(const QMatrix& a) {
  const Index m = a.rows(), n = a.cols();
  Eigen::MatrixXd r(4 * m, 4 * n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Eigen::Matrix4d l = qk_oracle::left_mult(a(i, j));
      for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4; ++q) r(p * m + i, q * n + j) = l(p, q);
      }
    }
  }
  return r;
}

}  // namespace

TEST(QMatrixOps, IdentityTimesVector) {
  Rng rng(1);
  const QVector x = random_qvector(6, rng);
  EXPECT_EQ(qvdist(matvec(QMatrix::identity(6), x), x), 0.0);
}

TEST(QMatrixOps, ScalarRelationPerEntry) {
  QMatrix a = QMatrix::identity(4);
  a.part(1) = a.part(0);
  a.part(0).setZero();
  const QVector x = QVector::constant(4, Quaternion::unit_j());
  const QVector y = matvec(a, x);
  EXPECT_EQ(qvdist(y, QVector::constant(4, Quaternion::unit_k())), 0.0);
}

TEST(QMatrixOps, MatvecMatchesOracles) {
  Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    const QMatrix a = random_qmatrix(3, 3, rng);
    const QVector x = random_qvector(3, rng);
    const QVector y = matvec(a, x);
    EXPECT_LT(qvdist(y, qk_oracle::naive_matvec(a, x)), 1e-13);
    const Eigen::VectorXd ry = counterpart_oracle(a) * x.stacked();
    EXPECT_LT((y.stacked() - ry).norm() / ry.norm(), 1e-12);
  }
  EXPECT_THROW(matvec(QMatrix(3, 2), QVector(3)), DimensionError);
}

TEST(QMatrixOps, MatmatMatchesOracle) {
  Rng rng(3);
  const QMatrix a = random_qmatrix(5, 4, rng), b = random_qmatrix(4, 3, rng);
  EXPECT_LT(qmdist(matmat(a, b), qk_oracle::naive_matmat(a, b)), 1e-12);
  EXPECT_THROW(matmat(a, a), DimensionError);
}

TEST(RealCounterpart, ScalarExamples) {
  EXPECT_TRUE(to_real_counterpart(QMatrix::identity(1)).isApprox(Eigen::Matrix4d::Identity()));
  QMatrix i1(1, 1);
  i1.set(0, 0, Quaternion::unit_i());
  Eigen::Matrix4d expected;
  expected << 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0;
  EXPECT_EQ(to_real_counterpart(i1), Eigen::MatrixXd(expected));
}

TEST(RealCounterpart, MatchesLeftMultiplicationOracle) {
  Rng rng(4);
  const QMatrix a = random_qmatrix(3, 5, rng);
  EXPECT_EQ(to_real_counterpart(a), counterpart_oracle(a));
}

TEST(RealCounterpart, Homomorphism) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const QMatrix a = random_qmatrix(4, 4, rng), b = random_qmatrix(4, 4, rng);
    const Eigen::MatrixXd prod = to_real_counterpart(a) * to_real_counterpart(b);
    EXPECT_LE(rel(to_real_counterpart(matmat(a, b)), prod), 1e-12);
  }
  const QMatrix a = random_qmatrix(5, 4, rng), b = random_qmatrix(4, 3, rng);
  const Eigen::MatrixXd prod = to_real_counterpart(a) * to_real_counterpart(b);
  EXPECT_LE(rel(to_real_counterpart(matmat(a, b)), prod), 1e-12);
}

TEST(RealCounterpart, RoundTripAndIsometry) {
  Rng rng(6);
  const QMatrix a = random_qmatrix(4, 6, rng);
  const Eigen::MatrixXd r = to_real_counterpart(a);
  EXPECT_EQ(qmdist(from_real_counterpart(r), a), 0.0);
  EXPECT_NEAR(2.0 * fnorm(a), r.norm(), 1e-12 * r.norm());
}

TEST(RealCounterpart, RejectsMalformedBlocks) {
  Rng rng(7);
  Eigen::MatrixXd r = to_real_counterpart(random_qmatrix(2, 2, rng));
  r(5, 7) += 0.5;
  EXPECT_THROW(from_real_counterpart(r), StructureError);
  EXPECT_THROW(from_real_counterpart(Eigen::MatrixXd::Zero(6, 8)), StructureError);
}

TEST(RealCounterpart, SparseVersionMatchesDense) {
  Rng rng(8);
  const QMatrix a = random_qmatrix(4, 3, rng);
  const QSparseMatrix s = real_counterpart_sparse(QSparseMatrix::from_dense(a));
  EXPECT_TRUE(s.real_only());
  EXPECT_LT((s.to_dense().part(0) - to_real_counterpart(a)).norm(), 1e-15);
}

TEST(QMatrixOps, NormCompatibility) {
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const QMatrix a = random_qmatrix(6, 5, rng);
    const QVector x = random_qvector(5, rng);
    EXPECT_LE(norm2(matvec(a, x)), fnorm(a) * norm2(x) * (1 + 1e-14));
  }
}

TEST(QMatrixOps, AdjointProperties) {
  Rng rng(10);
  const QMatrix a = random_qmatrix(5, 4, rng), b = random_qmatrix(4, 3, rng);
  EXPECT_EQ(qmdist(a.adjoint().adjoint(), a), 0.0);
  const QMatrix lhs = matmat(a, b).adjoint();
  const QMatrix rhs = matmat(b.adjoint(), a.adjoint());
  EXPECT_LE(qmdist(lhs, rhs) / fnorm(rhs), 1e-12);
  for (Index i = 0; i < 5; ++i) {
    for (Index j = 0; j < 4; ++j) EXPECT_EQ(a.adjoint()(j, i), a(i, j).conj());
  }
}

TEST(QMatrixOps, PureMatrix) {
  Rng rng(11);
  QMatrix a = random_qmatrix(3, 3, rng);
  EXPECT_FALSE(a.is_pure());
  a.part(0).setZero();
  EXPECT_TRUE(a.is_pure());
}

TEST(QSparse, TripletsSumDuplicates) {
  const QSparseMatrix s = QSparseMatrix::from_triplets(
      3, 3, {{0, 0, Quaternion(1, 0, 0, 0)}, {2, 1, Quaternion(0, 1, 0, 0)},
             {0, 0, Quaternion(0, 0, 2, 0)}, {1, 2, Quaternion(0, 0, 0, 3)}});
  EXPECT_EQ(s.nnz(), 3);
  EXPECT_EQ(s.coeff(0, 0), Quaternion(1, 0, 2, 0));
  EXPECT_EQ(s.coeff(1, 1), Quaternion{});
  EXPECT_FALSE(s.real_only());
  EXPECT_THROW(QSparseMatrix::from_triplets(2, 2, {{2, 0, Quaternion{1.0}}}), DimensionError);
}

TEST(QSparse, MatvecMatchesDense) {
  Rng rng(12);
  QMatrix a = random_qmatrix(7, 5, rng);
  std::uniform_real_distribution<double> u(0, 1);
  for (Index i = 0; i < 7; ++i) {
    for (Index j = 0; j < 5; ++j) {
      if (u(rng) < 0.5) a.set(i, j, Quaternion{});
    }
  }
  const QSparseMatrix s = QSparseMatrix::from_dense(a);
  const QVector x = random_qvector(5, rng);
  EXPECT_LT(qvdist(matvec(s, x), qk_oracle::naive_matvec(a, x)), 1e-13);
  EXPECT_EQ(qmdist(s.to_dense(), a), 0.0);
  EXPECT_NEAR(fnorm(s), fnorm(a), 1e-13);
  EXPECT_EQ(qmdist(s.adjoint().to_dense(), a.adjoint()), 0.0);

  const QMatrix real = QMatrix::from_real(a.part(0));
  const QSparseMatrix rs = QSparseMatrix::from_dense(real);
  EXPECT_TRUE(rs.real_only());
  EXPECT_LT(qvdist(matvec(rs, x), qk_oracle::naive_matvec(real, x)), 1e-13);
}

TEST(QSparse, PrincipalSubmatrix) {
  Rng rng(13);
  const QMatrix a = random_qmatrix(5, 5, rng);
  const QSparseMatrix p = QSparseMatrix::from_dense(a).principal(3);
  EXPECT_EQ(p.rows(), 3);
  EXPECT_EQ(qmdist(p.to_dense(), a.block(0, 0, 3, 3)), 0.0);
  EXPECT_THROW(QSparseMatrix::from_dense(a).principal(6), DimensionError);
}

TEST(QLinalg, LeastSquaresNormalEquations) {
  Rng rng(14);
  const QMatrix a = random_qmatrix(8, 4, rng);
  const QVector b = random_qvector(8, rng);
  const LstsqResult ls = qlstsq(a, b);
  // residual orthogonal to range(A): A^* (b - A x) = 0
  const QVector r = b - matvec(a, ls.x);
  EXPECT_LT(norm2(matvec(a.adjoint(), r)), 1e-12 * norm2(b) * fnorm(a));
  EXPECT_NEAR(ls.resnorm, norm2(r), 1e-12);
}

TEST(QLinalg, HouseholderFactorPreservesNorms) {
  Rng rng(15);
  for (Index rows : {9, 4}) {
    const QMatrix a = random_qmatrix(rows, 6, rng);
    const QMatrix r = householder_r(a);
    EXPECT_EQ(r.rows(), std::min<Index>(rows, 6));
    for (Index i = 0; i < r.rows(); ++i) {
      EXPECT_GE(r(i, i).re, 0.0);
      EXPECT_NEAR(r(i, i).abs(), r(i, i).re, 1e-13);
      for (Index j = 0; j < std::min(i, r.cols()); ++j) EXPECT_EQ(r(i, j), Quaternion{});
    }
    const Eigen::MatrixXd ra = to_real_counterpart(a), rr = to_real_counterpart(r);
    EXPECT_LT(rel(rr.transpose() * rr, ra.transpose() * ra), 1e-12);
  }
}
