#pragma once

#include <cstdint>
#include <string>

#include "quatkrylov/core/qmatrix.hpp"

namespace quatkrylov::imaging {

/// y(t) = sum_{s < order} x(t - s) w(s), samples before t = 0 taken as zero.
struct SignalFilterSystem {
  Index length = 0;
  Index order = 0;
  /// length x order, entry (t, s) = x(t - s).
  QMatrix matrix;

  /// y for a given filter.
  QVector apply(const QVector& w) const;
};

SignalFilterSystem build_signal_system(const QVector& x, Index order);

/// Square system for the filter: the Toeplitz block itself when length == order, otherwise the
/// normal equations X^* X w = X^* y.
struct SquareSystem {
  QMatrix a;
  QVector b;
};
SquareSystem square_system(const SignalFilterSystem& sys, const QVector& y);

/// Pure quaternion RGB waveform: each channel a sum of three sinusoids with seeded frequencies
/// and phases.
QVector synthetic_signal(Index length, std::uint64_t seed);

/// Piecewise-constant quaternion filter taps with the given number of pieces.
QVector synthetic_filter(Index order, std::uint64_t seed, int pieces = 4);

/// CSV with columns t,r,g,b (header optional). Rows are sorted by t on read.
QVector read_signal_csv(const std::string& path);
void write_signal_csv(const std::string& path, const QVector& x);

}  // namespace quatkrylov::imaging
