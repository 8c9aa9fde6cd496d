#include "quatkrylov/imaging/signal.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "quatkrylov/core/errors.hpp"

namespace quatkrylov::imaging {

QVector SignalFilterSystem::apply(const QVector& w) const { return matvec(matrix, w); }

SignalFilterSystem build_signal_system(const QVector& x, Index order) {
  if (order < 1) throw DimensionError("build_signal_system: order must be >= 1");
  if (x.size() < order) throw DimensionError("build_signal_system: signal shorter than filter");
  SignalFilterSystem sys;
  sys.length = x.size();
  sys.order = order;
  sys.matrix = QMatrix(x.size(), order);
  for (Index s = 0; s < order; ++s) {
    for (Index t = s; t < x.size(); ++t) sys.matrix.set(t, s, x[t - s]);
  }
  return sys;
}

SquareSystem square_system(const SignalFilterSystem& sys, const QVector& y) {
  if (y.size() != sys.length) throw DimensionError("square_system: target length mismatch");
  if (sys.length == sys.order) return {sys.matrix, y};
  const QMatrix ah = sys.matrix.adjoint();
  return {ah * sys.matrix, matvec(ah, y)};
}

QVector synthetic_signal(Index length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> freq(0.005, 0.12), phase(0.0, 2.0 * std::numbers::pi),
      amp(0.2, 1.0);
  QVector x(length);
  for (int c = 1; c < 4; ++c) {
    for (int k = 0; k < 3; ++k) {
      const double f = freq(rng), p = phase(rng), a = amp(rng);
      for (Index t = 0; t < length; ++t) {
        x.part(c)[t] += a * std::sin(2.0 * std::numbers::pi * f * static_cast<double>(t) + p);
      }
    }
  }
  return x;
}

QVector synthetic_filter(Index order, std::uint64_t seed, int pieces) {
  if (order < 1 || pieces < 1) throw InvalidParameter("synthetic_filter: bad order or pieces");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  QVector w(order);
  const Index len = std::max<Index>(1, (order + pieces - 1) / pieces);
  for (Index start = 0; start < order; start += len) {
    const Quaternion q{nd(rng), nd(rng), nd(rng), nd(rng)};
    for (Index t = start; t < std::min(order, start + len); ++t) w.set(t, q);
  }
  // taps sum to about one in modulus so y stays on the scale of x
  w *= 1.0 / std::max(1.0, norm2(w));
  return w;
}

QVector read_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("read_signal_csv: cannot open " + path);
  std::vector<std::array<double, 4>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    std::array<double, 4> v{};
    if (!(ss >> v[0] >> v[1] >> v[2] >> v[3])) {
      if (rows.empty() && lineno == 1) continue;  // header
      throw FormatError("read_signal_csv: bad row " + std::to_string(lineno) + " in " + path);
    }
    rows.push_back(v);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  QVector x(static_cast<Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    x.set(static_cast<Index>(i), Quaternion{0.0, rows[i][1], rows[i][2], rows[i][3]});
  }
  return x;
}

void write_signal_csv(const std::string& path, const QVector& x) {
  std::ofstream out(path);
  if (!out) throw IoError("write_signal_csv: cannot open " + path);
  out << "t,r,g,b\n" << std::setprecision(17);
  for (Index t = 0; t < x.size(); ++t) {
    out << t << ',' << x.part(1)[t] << ',' << x.part(2)[t] << ',' << x.part(3)[t] << '\n';
  }
}

}  // namespace quatkrylov::imaging
