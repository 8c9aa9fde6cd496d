#pragma once

#include <cstdint>
#include <random>

#include "quatkrylov/core/qsparse.hpp"

namespace quatkrylov {

using Rng = std::mt19937_64;

/// Standard normal components.
Quaternion random_quaternion(Rng& rng);
QVector random_qvector(Index n, Rng& rng);
QMatrix random_qmatrix(Index rows, Index cols, Rng& rng);

/// Uniform [-1, 1] components off the diagonal. The diagonal is real and equals
/// dominance * u_i * (sum of off-diagonal moduli in row i) with u_i uniform in [1, spread].
QMatrix random_diag_dominant(Index n, Rng& rng, double dominance = 1.0, double spread = 5.0);

}  // namespace quatkrylov
