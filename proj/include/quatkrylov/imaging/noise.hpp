#pragma once

#include <cstdint>

#include "quatkrylov/core/qvector.hpp"

namespace quatkrylov::imaging {

/// Adds i.i.d. N(0, sigma^2) to the three imaginary parts. Deterministic for a given seed.
QVector add_gaussian_noise(const QVector& x, double sigma, std::uint64_t seed);

/// Expected ||noise||_2 for n pixels: sigma * sqrt(3 n).
double expected_noise_norm(Index n, double sigma);

}  // namespace quatkrylov::imaging
