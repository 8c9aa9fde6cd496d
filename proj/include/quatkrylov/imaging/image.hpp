#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "quatkrylov/core/qvector.hpp"

namespace quatkrylov::imaging {

/// RGB image, channels nominally in [0, 1]. Values are only clamped on export.
class ColorImage {
 public:
  ColorImage() = default;
  ColorImage(Index height, Index width);

  Index height() const { return ch_[0].rows(); }
  Index width() const { return ch_[0].cols(); }
  Index pixels() const { return height() * width(); }

  /// 0 = red, 1 = green, 2 = blue.
  Eigen::MatrixXd& channel(int c) { return ch_.at(static_cast<std::size_t>(c)); }
  const Eigen::MatrixXd& channel(int c) const { return ch_.at(static_cast<std::size_t>(c)); }

  ColorImage clamped() const;

 private:
  std::array<Eigen::MatrixXd, 3> ch_;
};

/// Column-major stacking into a pure quaternion vector: r -> i, g -> j, b -> k.
QVector image_to_qvec(const ColorImage& img);
/// Inverse of image_to_qvec; the real part is dropped.
ColorImage qvec_to_image(const QVector& x, Index height, Index width);

/// 8-bit RGB PNG. Other PNG layouts are converted by libpng.
ColorImage read_png(const std::string& path);
/// Writes the clamped image as 8-bit RGB.
void write_png(const std::string& path, const ColorImage& img);

}  // namespace quatkrylov::imaging
