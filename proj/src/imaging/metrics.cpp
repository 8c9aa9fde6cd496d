#include "quatkrylov/imaging/metrics.hpp"

#include <cmath>
#include <limits>

#include "quatkrylov/core/errors.hpp"

namespace quatkrylov::imaging {

namespace {

constexpr int kWin = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

void check_same(const ColorImage& a, const ColorImage& b) {
  if (a.height() != b.height() || a.width() != b.width()) {
    throw DimensionError("image metric: size mismatch");
  }
}

double sq_error(const ColorImage& a, const ColorImage& b) {
  double s = 0.0;
  for (int c = 0; c < 3; ++c) s += (a.channel(c) - b.channel(c)).squaredNorm();
  return s;
}

// Local weighted statistics at every pixel.
struct LocalStats {
  Eigen::MatrixXd mx, my, vx, vy, cxy;
};

LocalStats local_stats(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionError("ssim: size mismatch");
  Eigen::VectorXd g(kWin);
  for (int i = 0; i < kWin; ++i) {
    const double d = i - kWin / 2;
    g[i] = std::exp(-d * d / (2.0 * kSigma * kSigma));
  }
  const Index h = x.rows(), w = x.cols();
  LocalStats s{Eigen::MatrixXd::Zero(h, w), Eigen::MatrixXd::Zero(h, w), Eigen::MatrixXd::Zero(h, w),
               Eigen::MatrixXd::Zero(h, w), Eigen::MatrixXd::Zero(h, w)};
  for (Index c = 0; c < w; ++c) {
    for (Index r = 0; r < h; ++r) {
      double ws = 0, sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
      for (int dc = 0; dc < kWin; ++dc) {
        const Index cc = c + dc - kWin / 2;
        if (cc < 0 || cc >= w) continue;
        for (int dr = 0; dr < kWin; ++dr) {
          const Index rr = r + dr - kWin / 2;
          if (rr < 0 || rr >= h) continue;
          const double wt = g[dr] * g[dc];
          const double a = x(rr, cc), b = y(rr, cc);
          ws += wt;
          sx += wt * a;
          sy += wt * b;
          sxx += wt * a * a;
          syy += wt * b * b;
          sxy += wt * a * b;
        }
      }
      const double mx = sx / ws, my = sy / ws;
      s.mx(r, c) = mx;
      s.my(r, c) = my;
      s.vx(r, c) = std::max(0.0, sxx / ws - mx * mx);
      s.vy(r, c) = std::max(0.0, syy / ws - my * my);
      s.cxy(r, c) = sxy / ws - mx * my;
    }
  }
  return s;
}

}  // namespace

double psnr(const ColorImage& ref, const ColorImage& test) {
  check_same(ref, test);
  const double mse = sq_error(ref, test) / (3.0 * static_cast<double>(ref.pixels()));
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(1.0 / mse);
}

double snr(const ColorImage& ref, const ColorImage& test) {
  check_same(ref, test);
  double mean = 0.0;
  for (int c = 0; c < 3; ++c) mean += ref.channel(c).sum();
  mean /= 3.0 * static_cast<double>(ref.pixels());
  double sig = 0.0;
  for (int c = 0; c < 3; ++c) sig += (ref.channel(c).array() - mean).square().sum();
  const double err = sq_error(ref, test);
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(sig / err);
}

double ssim_channel(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const LocalStats s = local_stats(a, b);
  const Eigen::ArrayXXd num = (2.0 * s.mx.array() * s.my.array() + kC1) * (2.0 * s.cxy.array() + kC2);
  const Eigen::ArrayXXd den = (s.mx.array().square() + s.my.array().square() + kC1) *
                              (s.vx.array() + s.vy.array() + kC2);
  return (num / den).mean();
}

double ssim(const ColorImage& a, const ColorImage& b) {
  check_same(a, b);
  double s = 0.0;
  for (int c = 0; c < 3; ++c) s += ssim_channel(a.channel(c), b.channel(c));
  return s / 3.0;
}

SsimComponents ssim_components(const ColorImage& a, const ColorImage& b) {
  check_same(a, b);
  constexpr double kC3 = kC2 / 2.0;
  SsimComponents out{0.0, 0.0, 0.0};
  for (int c = 0; c < 3; ++c) {
    const LocalStats s = local_stats(a.channel(c), b.channel(c));
    const Eigen::ArrayXXd sx = s.vx.array().sqrt(), sy = s.vy.array().sqrt();
    out.luminance += ((2.0 * s.mx.array() * s.my.array() + kC1) /
                      (s.mx.array().square() + s.my.array().square() + kC1)).mean();
    out.contrast += ((2.0 * sx * sy + kC2) / (s.vx.array() + s.vy.array() + kC2)).mean();
    out.structure += ((s.cxy.array() + kC3) / (sx * sy + kC3)).mean();
  }
  out.luminance /= 3.0;
  out.contrast /= 3.0;
  out.structure /= 3.0;
  return out;
}

}  // namespace quatkrylov::imaging
