#include "quatkrylov/imaging/noise.hpp"

#include <cmath>
#include <random>

#include "quatkrylov/core/errors.hpp"

namespace quatkrylov::imaging {

QVector add_gaussian_noise(const QVector& x, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw InvalidParameter("add_gaussian_noise: sigma must be >= 0");
  QVector y = x;
  if (sigma == 0.0) return y;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, sigma);
  for (int c = 1; c < 4; ++c) {
    for (Index i = 0; i < y.size(); ++i) y.part(c)[i] += nd(rng);
  }
  return y;
}

double expected_noise_norm(Index n, double sigma) {
  return sigma * std::sqrt(3.0 * static_cast<double>(n));
}

}  // namespace quatkrylov::imaging
