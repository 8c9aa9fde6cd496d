#include "quatkrylov/imaging/blur.hpp"

#include <cmath>
#include <map>

namespace quatkrylov::imaging {

std::string to_string(Boundary b) {
  switch (b) {
    case Boundary::Zero:
      return "zero";
    case Boundary::Periodic:
      return "periodic";
    case Boundary::Reflexive:
      return "reflexive";
  }
  return "?";
}

Boundary boundary_from_string(const std::string& s) {
  if (s == "zero") return Boundary::Zero;
  if (s == "periodic") return Boundary::Periodic;
  if (s == "reflexive") return Boundary::Reflexive;
  throw InvalidParameter("unknown boundary: " + s);
}

Eigen::MatrixXd gaussian_psf(int bandwidth, double sigma) {
  if (bandwidth < 1 || !(sigma > 0.0)) {
    throw InvalidParameter("gaussian_psf: need bandwidth >= 1 and sigma > 0");
  }
  Eigen::MatrixXd p(bandwidth, bandwidth);
  const double c = (bandwidth - 1) / 2.0;
  for (int i = 0; i < bandwidth; ++i) {
    for (int j = 0; j < bandwidth; ++j) {
      p(i, j) = std::exp(-((i - c) * (i - c) + (j - c) * (j - c)) / (2.0 * sigma * sigma));
    }
  }
  return p / p.sum();
}

namespace {

// Maps an out-of-range index into [0, n) or returns -1 when the pixel is dropped.
Index fold(Index i, Index n, Boundary b) {
  if (i >= 0 && i < n) return i;
  switch (b) {
    case Boundary::Zero:
      return -1;
    case Boundary::Periodic:
      return ((i % n) + n) % n;
    case Boundary::Reflexive: {
      const Index period = 2 * n;
      Index k = ((i % period) + period) % period;
      return k < n ? k : period - 1 - k;
    }
  }
  return -1;
}

}  // namespace

QSparseMatrix build_blur_operator(const Eigen::MatrixXd& psf, Boundary boundary, Index height,
                                  Index width) {
  if (psf.rows() < 1 || psf.cols() < 1) throw DimensionError("blur: empty PSF");
  if (psf.rows() > height || psf.cols() > width) throw DimensionError("blur: PSF larger than image");
  const Index a0 = psf.rows() / 2, b0 = psf.cols() / 2;
  std::vector<QTriplet> t;
  t.reserve(static_cast<std::size_t>(height * width * psf.size()));
  for (Index c = 0; c < width; ++c) {
    for (Index r = 0; r < height; ++r) {
      // accumulate per source pixel so wrapped taps merge before insertion
      std::map<Index, double> row;
      for (Index b = 0; b < psf.cols(); ++b) {
        for (Index a = 0; a < psf.rows(); ++a) {
          if (psf(a, b) == 0.0) continue;
          const Index rr = fold(r - a + a0, height, boundary);
          const Index cc = fold(c - b + b0, width, boundary);
          if (rr < 0 || cc < 0) continue;
          row[cc * height + rr] += psf(a, b);
        }
      }
      for (const auto& [col, v] : row) t.push_back({c * height + r, col, Quaternion{v}});
    }
  }
  return QSparseMatrix::from_triplets(height * width, height * width, t);
}

QSparseMatrix build_blur_operator(const BlurModel& model, Index height, Index width) {
  return build_blur_operator(gaussian_psf(model.bandwidth, model.sigma), model.boundary, height,
                             width);
}

}  // namespace quatkrylov::imaging
