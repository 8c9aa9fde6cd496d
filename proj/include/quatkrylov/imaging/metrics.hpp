#pragma once

#include "quatkrylov/imaging/image.hpp"

namespace quatkrylov::imaging {

/// 10 log10(1 / MSE), MSE over all three channels. +inf when the images are equal.
double psnr(const ColorImage& ref, const ColorImage& test);

/// 10 log10(||ref - mean(ref)||^2 / ||ref - test||^2), one global mean over all channels.
double snr(const ColorImage& ref, const ColorImage& test);

struct SsimComponents {
  double luminance = 1.0;
  double contrast = 1.0;
  double structure = 1.0;
};

/// Mean local SSIM with an 11x11 Gaussian window (sigma 1.5), K1 = 0.01, K2 = 0.03, data range 1,
/// averaged over channels. Near the border the window is truncated and renormalized.
double ssim(const ColorImage& a, const ColorImage& b);

/// Channel- and pixel-averaged luminance, contrast and structure terms (C3 = C2 / 2).
SsimComponents ssim_components(const ColorImage& a, const ColorImage& b);

/// Single-channel SSIM map averaged over pixels.
double ssim_channel(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace quatkrylov::imaging
