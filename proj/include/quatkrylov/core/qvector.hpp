#pragma once

#include <array>
#include <cstddef>
#include <Eigen/Dense>

#include "quatkrylov/core/quaternion.hpp"

namespace quatkrylov {

using Index = Eigen::Index;

/// Quaternion vector stored as four parallel real arrays (real, i, j, k parts).
class QVector {
 public:
  QVector() = default;
  explicit QVector(Index n) {
    for (auto& p : parts_) p = Eigen::VectorXd::Zero(n);
  }
  QVector(const Eigen::VectorXd& p0, const Eigen::VectorXd& p1, const Eigen::VectorXd& p2,
          const Eigen::VectorXd& p3);

  static QVector zeros(Index n) { return QVector(n); }
  /// Every entry equal to q.
  static QVector constant(Index n, const Quaternion& q);
  static QVector unit(Index n, Index pos);

  Index size() const { return parts_[0].size(); }

  Eigen::VectorXd& part(int c) { return parts_[c]; }
  const Eigen::VectorXd& part(int c) const { return parts_[c]; }

  Quaternion operator[](Index idx) const {
    return {parts_[0][idx], parts_[1][idx], parts_[2][idx], parts_[3][idx]};
  }
  void set(Index idx, const Quaternion& q) {
    parts_[0][idx] = q.re;
    parts_[1][idx] = q.i;
    parts_[2][idx] = q.j;
    parts_[3][idx] = q.k;
  }

  void set_zero() {
    for (auto& p : parts_) p.setZero();
  }

  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);
  QVector& operator*=(double s);

  /// this += v * alpha (right scalar multiplication).
  void add_scaled(const QVector& v, const Quaternion& alpha);

  /// Returns v * alpha.
  QVector times(const Quaternion& alpha) const;

  /// Entrywise alpha * v_i (left scalar multiplication).
  QVector left_times(const Quaternion& alpha) const;

  QVector conj() const;

  /// Moduli |v_i|.
  Eigen::VectorXd abs() const;

  double squared_norm() const;

  /// Stacked [re; i; j; k] real vector, the first column of the real counterpart.
  Eigen::VectorXd stacked() const;
  static QVector from_stacked(const Eigen::VectorXd& s);

  QVector segment(Index start, Index len) const;

 private:
  std::array<Eigen::VectorXd, 4> parts_;
};

QVector operator+(QVector a, const QVector& b);
QVector operator-(QVector a, const QVector& b);
QVector operator*(QVector a, double s);
QVector operator*(double s, QVector a);

/// <w, v> = sum_i conj(v_i) * w_i. Right-linear in w: <w a, v> = <w, v> a.
Quaternion inner(const QVector& w, const QVector& v);

/// p-norm (sum |v_i|^p)^(1/p), p >= 1.
double vnorm(const QVector& v, double p = 2.0);

inline double norm2(const QVector& v) { return std::sqrt(v.squared_norm()); }

}  // namespace quatkrylov
