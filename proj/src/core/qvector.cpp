#include "quatkrylov/core/qvector.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace quatkrylov {

namespace {

void check_same(const QVector& a, const QVector& b, const char* what) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": length mismatch " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  }
}

}  // namespace

QVector::QVector(const Eigen::VectorXd& p0, const Eigen::VectorXd& p1, const Eigen::VectorXd& p2,
                 const Eigen::VectorXd& p3)
    : parts_{p0, p1, p2, p3} {
  const Index n = p0.size();
  if (p1.size() != n || p2.size() != n || p3.size() != n) {
    throw DimensionError("QVector: parts have different lengths");
  }
}

QVector QVector::constant(Index n, const Quaternion& q) {
  QVector v(n);
  for (int c = 0; c < 4; ++c) v.parts_[c].setConstant(q[c]);
  return v;
}

QVector QVector::unit(Index n, Index pos) {
  QVector v(n);
  v.parts_[0][pos] = 1.0;
  return v;
}

QVector& QVector::operator+=(const QVector& o) {
  check_same(*this, o, "QVector +=");
  for (int c = 0; c < 4; ++c) parts_[c] += o.parts_[c];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  check_same(*this, o, "QVector -=");
  for (int c = 0; c < 4; ++c) parts_[c] -= o.parts_[c];
  return *this;
}

QVector& QVector::operator*=(double s) {
  for (auto& p : parts_) p *= s;
  return *this;
}

void QVector::add_scaled(const QVector& v, const Quaternion& a) {
  check_same(*this, v, "QVector add_scaled");
  if (&v == this) {
    *this = times(a) + *this;
    return;
  }
  const auto& [v0, v1, v2, v3] = v.parts_;
  // (v * a) componentwise, Hamilton product with the vector entry on the left
  parts_[0] += a.re * v0 - a.i * v1 - a.j * v2 - a.k * v3;
  parts_[1] += a.i * v0 + a.re * v1 + a.k * v2 - a.j * v3;
  parts_[2] += a.j * v0 - a.k * v1 + a.re * v2 + a.i * v3;
  parts_[3] += a.k * v0 + a.j * v1 - a.i * v2 + a.re * v3;
}

QVector QVector::times(const Quaternion& alpha) const {
  QVector out(size());
  out.add_scaled(*this, alpha);
  return out;
}

QVector QVector::left_times(const Quaternion& a) const {
  const auto& [v0, v1, v2, v3] = parts_;
  QVector out;
  out.parts_[0] = a.re * v0 - a.i * v1 - a.j * v2 - a.k * v3;
  out.parts_[1] = a.re * v1 + a.i * v0 + a.j * v3 - a.k * v2;
  out.parts_[2] = a.re * v2 - a.i * v3 + a.j * v0 + a.k * v1;
  out.parts_[3] = a.re * v3 + a.i * v2 - a.j * v1 + a.k * v0;
  return out;
}

QVector QVector::conj() const {
  QVector out(*this);
  for (int c = 1; c < 4; ++c) out.parts_[c] = -out.parts_[c];
  return out;
}

Eigen::VectorXd QVector::abs() const {
  return (parts_[0].array().square() + parts_[1].array().square() +
          parts_[2].array().square() + parts_[3].array().square())
      .sqrt()
      .matrix();
}

double QVector::squared_norm() const {
  double s = 0.0;
  for (const auto& p : parts_) s += p.squaredNorm();
  return s;
}

Eigen::VectorXd QVector::stacked() const {
  const Index n = size();
  Eigen::VectorXd s(4 * n);
  for (int c = 0; c < 4; ++c) s.segment(c * n, n) = parts_[c];
  return s;
}

QVector QVector::from_stacked(const Eigen::VectorXd& s) {
  if (s.size() % 4 != 0) throw DimensionError("from_stacked: length not a multiple of 4");
  const Index n = s.size() / 4;
  return QVector(s.segment(0, n), s.segment(n, n), s.segment(2 * n, n), s.segment(3 * n, n));
}

QVector QVector::segment(Index start, Index len) const {
  return QVector(parts_[0].segment(start, len), parts_[1].segment(start, len),
                 parts_[2].segment(start, len), parts_[3].segment(start, len));
}

QVector operator+(QVector a, const QVector& b) { return a += b; }
QVector operator-(QVector a, const QVector& b) { return a -= b; }
QVector operator*(QVector a, double s) { return a *= s; }
QVector operator*(double s, QVector a) { return a *= s; }

Quaternion inner(const QVector& w, const QVector& v) {
  check_same(w, v, "inner");
  const auto& v0 = v.part(0);
  const auto& v1 = v.part(1);
  const auto& v2 = v.part(2);
  const auto& v3 = v.part(3);
  const auto& w0 = w.part(0);
  const auto& w1 = w.part(1);
  const auto& w2 = w.part(2);
  const auto& w3 = w.part(3);
  // conj(v_i) * w_i summed over i
  return {v0.dot(w0) + v1.dot(w1) + v2.dot(w2) + v3.dot(w3),
          v0.dot(w1) - v1.dot(w0) - v2.dot(w3) + v3.dot(w2),
          v0.dot(w2) + v1.dot(w3) - v2.dot(w0) - v3.dot(w1),
          v0.dot(w3) - v1.dot(w2) + v2.dot(w1) - v3.dot(w0)};
}

double vnorm(const QVector& v, double p) {
  if (!(p >= 1.0)) throw InvalidParameter("vnorm: p must be >= 1");
  if (v.size() == 0) return 0.0;
  if (p == 2.0) return norm2(v);
  const Eigen::VectorXd a = v.abs();
  if (std::isinf(p)) return a.maxCoeff();
  if (p == 1.0) return a.sum();
  const double scale = a.maxCoeff();
  if (scale == 0.0) return 0.0;
  return scale * std::pow((a / scale).array().pow(p).sum(), 1.0 / p);
}

}  // namespace quatkrylov
