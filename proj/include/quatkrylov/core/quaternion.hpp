#pragma once

#include <cmath>
#include <ostream>

#include "quatkrylov/core/errors.hpp"

namespace quatkrylov {

/// Quaternion q = re + i*x + j*y + k*z with i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
  double re = 0.0;
  double i = 0.0;
  double j = 0.0;
  double k = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double real) : re(real) {}  // NOLINT(implicit)
  constexpr Quaternion(double r, double a, double b, double c) : re(r), i(a), j(b), k(c) {}

  static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double operator[](int c) const {
    return c == 0 ? re : c == 1 ? i : c == 2 ? j : k;
  }

  constexpr Quaternion conj() const { return {re, -i, -j, -k}; }
  constexpr double norm_sq() const { return re * re + i * i + j * j + k * k; }
  double abs() const { return std::sqrt(norm_sq()); }
  constexpr bool is_pure() const { return re == 0.0; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    re += o.re;
    i += o.i;
    j += o.j;
    k += o.k;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    re -= o.re;
    i -= o.i;
    j -= o.j;
    k -= o.k;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    re *= s;
    i *= s;
    j *= s;
    k *= s;
    return *this;
  }
};

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.re == b.re && a.i == b.i && a.j == b.j && a.k == b.k;
}

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.re, -a.i, -a.j, -a.k}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.re * b.re - a.i * b.i - a.j * b.j - a.k * b.k,
          a.re * b.i + a.i * b.re + a.j * b.k - a.k * b.j,
          a.re * b.j - a.i * b.k + a.j * b.re + a.k * b.i,
          a.re * b.k + a.i * b.j - a.j * b.i + a.k * b.re};
}

inline Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }

/// 1/q = conj(q)/|q|^2.
inline Quaternion qinv(const Quaternion& q) {
  const double n2 = q.norm_sq();
  if (n2 == 0.0) throw DivisionByZero("qinv: zero quaternion has no inverse");
  return q.conj() * (1.0 / n2);
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.re << ", " << q.i << "i, " << q.j << "j, " << q.k << "k)";
}

}  // namespace quatkrylov
