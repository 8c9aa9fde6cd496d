#include "quatkrylov/imaging/image.hpp"

#include <png.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "quatkrylov/core/errors.hpp"

namespace quatkrylov::imaging {

ColorImage::ColorImage(Index height, Index width) {
  if (height < 0 || width < 0) throw DimensionError("ColorImage: negative size");
  for (auto& c : ch_) c = Eigen::MatrixXd::Zero(height, width);
}

ColorImage ColorImage::clamped() const {
  ColorImage out = *this;
  for (auto& c : out.ch_) c = c.cwiseMax(0.0).cwiseMin(1.0);
  return out;
}

QVector image_to_qvec(const ColorImage& img) {
  QVector x(img.pixels());
  for (int c = 0; c < 3; ++c) {
    x.part(c + 1) = Eigen::Map<const Eigen::VectorXd>(img.channel(c).data(), img.pixels());
  }
  return x;
}

ColorImage qvec_to_image(const QVector& x, Index height, Index width) {
  if (height < 0 || width < 0 || x.size() != height * width) {
    throw DimensionError("qvec_to_image: length does not match height * width");
  }
  ColorImage img(height, width);
  for (int c = 0; c < 3; ++c) {
    img.channel(c) = Eigen::Map<const Eigen::MatrixXd>(x.part(c + 1).data(), height, width);
  }
  return img;
}

ColorImage read_png(const std::string& path) {
  png_image im;
  std::memset(&im, 0, sizeof im);
  im.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&im, path.c_str())) {
    throw IoError("read_png: " + path + ": " + im.message);
  }
  im.format = PNG_FORMAT_RGB;
  std::vector<png_byte> buf(PNG_IMAGE_SIZE(im));
  if (!png_image_finish_read(&im, nullptr, buf.data(), 0, nullptr)) {
    png_image_free(&im);
    throw IoError("read_png: " + path + ": " + im.message);
  }
  const Index h = im.height, w = im.width;
  ColorImage img(h, w);
  for (Index r = 0; r < h; ++r) {
    for (Index c = 0; c < w; ++c) {
      const png_byte* p = &buf[static_cast<std::size_t>((r * w + c) * 3)];
      for (int k = 0; k < 3; ++k) img.channel(k)(r, c) = p[k] / 255.0;
    }
  }
  return img;
}

void write_png(const std::string& path, const ColorImage& img) {
  const ColorImage cl = img.clamped();
  const Index h = img.height(), w = img.width();
  std::vector<png_byte> buf(static_cast<std::size_t>(h * w * 3));
  for (Index r = 0; r < h; ++r) {
    for (Index c = 0; c < w; ++c) {
      for (int k = 0; k < 3; ++k) {
        buf[static_cast<std::size_t>((r * w + c) * 3 + k)] =
            static_cast<png_byte>(std::lround(cl.channel(k)(r, c) * 255.0));
      }
    }
  }
  png_image im;
  std::memset(&im, 0, sizeof im);
  im.version = PNG_IMAGE_VERSION;
  im.width = static_cast<png_uint_32>(w);
  im.height = static_cast<png_uint_32>(h);
  im.format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&im, path.c_str(), 0, buf.data(), 0, nullptr)) {
    throw IoError("write_png: " + path + ": " + im.message);
  }
}

}  // namespace quatkrylov::imaging
