#pragma once

#include <string>

#include "quatkrylov/core/qsparse.hpp"

namespace quatkrylov::imaging {

enum class Boundary { Zero, Periodic, Reflexive };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

struct BlurModel {
  /// PSF side length.
  int bandwidth = 9;
  double sigma = 2.0;
  Boundary boundary = Boundary::Periodic;
};

/// Gaussian PSF normalized to sum 1.
Eigen::MatrixXd gaussian_psf(int bandwidth, double sigma);

/// Real channel-wise convolution (x * psf)(r, c) = sum psf(a, b) x(r - a + a0, c - b + b0) on a
/// column-major height x width image, with (a0, b0) = (rows / 2, cols / 2) the PSF centre.
QSparseMatrix build_blur_operator(const Eigen::MatrixXd& psf, Boundary boundary, Index height,
                                  Index width);
QSparseMatrix build_blur_operator(const BlurModel& model, Index height, Index width);

}  // namespace quatkrylov::imaging
