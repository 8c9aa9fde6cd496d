#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quatkrylov/core/linear_operator.hpp"
#include "quatkrylov/imaging/blur.hpp"
#include "quatkrylov/imaging/image.hpp"
#include "quatkrylov/krylov/types.hpp"
#include "quatkrylov/tv/solvers.hpp"

namespace quatkrylov::cli {

struct BenchRun {
  std::uint64_t seed = 0;
  int iterations = 0;
  double time = 0.0;
  double residual = 0.0;
  bool converged = false;
  std::string termination;
};

struct BenchRow {
  std::string solver;
  std::vector<BenchRun> runs;

  double mean_iterations() const;
  double mean_time() const;
  double mean_residual() const;
  int converged_count() const;
};

struct BenchTable {
  std::string suite;
  std::string caption;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<BenchRow> rows;

  /// Throws InvalidParameter for an unknown solver label.
  const BenchRow& row(const std::string& solver) const;
};

std::string to_csv(const BenchTable& t);
std::string to_markdown(const BenchTable& t);

/// precond-table: random diagonally dominant n x n, random b, x0 = 0.
struct PrecondSuite {
  Index n = 500;
  int seeds = 20;
  std::uint64_t seed0 = 1;
  double tol = 1e-6;
  int max_iter = 1000;
};
BenchTable precond_table(const PrecondSuite& s);

/// sparse-table: four-part sparse quaternion matrix, b with all components one.
struct SparseSuite {
  Index n = 3000;
  int seeds = 1;
  std::uint64_t seed0 = 1;
  double tol = 1e-6;
  int max_iter = 1000;
  /// Directory holding bcspwr10.mtx, af23560.mtx, rw5151.mtx, rdb5000.mtx. Unset: surrogate.
  std::optional<std::string> mm_dir;
};
BenchTable sparse_table(const SparseSuite& s);

/// Sparse n x n stand-in for the Matrix Market composite: A0 a power-network pattern (ring plus
/// random chords, unit values), A1 a convection-diffusion stencil, A2 a random-walk transition
/// matrix, A3 a reaction-diffusion stencil, all on a near-square grid with n nodes.
QSparseMatrix sparse_surrogate(Index n, std::uint64_t seed);

/// The Matrix Market composite from a directory, leading n x n block of each part.
QSparseMatrix matrix_market_composite(const std::string& dir, Index n);

/// signal-table: filter identification, order taps from length samples.
struct SignalSuite {
  Index order = 100;
  Index length = 300;
  int seeds = 1;
  std::uint64_t seed0 = 1;
  double tol = 1e-6;
  int max_iter = 2000;
  double lambda = 1e-8;
};
BenchTable signal_table(const SignalSuite& s);

/// Real counterpart of A as an operator on real-embedded vectors: v -> stacked(A from_stacked(v)).
QLinearOperator real_counterpart_operator(const QLinearOperator& a);

/// GMRES row: QGMRES on the real counterpart system.
krylov::SolveReport real_gmres(const QLinearOperator& a, const QVector& b,
                               const krylov::SolverConfig& cfg);
/// IRFGMRES row: flexible GMRES on the real counterpart with z = v ./ sqrt|r_j|.
krylov::SolveReport real_irfgmres(const QLinearOperator& a, const QVector& b,
                                  const krylov::SolverConfig& cfg);

enum class RestoreSolver { QtvFqgmres, QtvFqgmresImproved, Fqgmres };
std::string to_string(RestoreSolver s);
RestoreSolver restore_solver_from_string(const std::string& s);

struct RestoreOptions {
  /// Unset: identity blur.
  std::optional<imaging::BlurModel> blur = imaging::BlurModel{};
  double noise = 5.0 / 255.0;
  std::uint64_t seed = 1;
  RestoreSolver solver = RestoreSolver::QtvFqgmresImproved;
  double lambda = 0.003;
  bool auto_lambda = false;
  double tol = 1e-6;
  int max_iter = 60;
  double step_tol = 1e-4;
  /// Discrepancy factor tau for the unregularized run: stop at ||r|| <= tau * sigma sqrt(3N).
  double tau = 1.0;
};

struct RestoreResult {
  imaging::ColorImage observed;
  imaging::ColorImage restored;
  tv::QTVReport report;
  std::map<std::string, double> metrics;
};

/// Degrades the truth (blur, then noise) and restores it.
RestoreResult restore_image(const imaging::ColorImage& truth, const RestoreOptions& o);
/// Restores a given observation; metrics against truth.
RestoreResult restore_image(const imaging::ColorImage& truth, const imaging::ColorImage& observed,
                            const RestoreOptions& o);

}  // namespace quatkrylov::cli
