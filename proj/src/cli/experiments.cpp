#include "quatkrylov/cli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <future>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "quatkrylov/core/parallel.hpp"
#include "quatkrylov/core/random.hpp"
#include "quatkrylov/core/real_counterpart.hpp"
#include "quatkrylov/imaging/metrics.hpp"
#include "quatkrylov/imaging/noise.hpp"
#include "quatkrylov/imaging/signal.hpp"
#include "quatkrylov/io/matrix_market.hpp"
#include "quatkrylov/krylov/gmres.hpp"
#include "quatkrylov/krylov/preconditioner.hpp"
#include "quatkrylov/tv/difference.hpp"

namespace quatkrylov::cli {

using krylov::SolveReport;
using krylov::SolverConfig;

namespace {

template <class F>
double mean_of(const std::vector<BenchRun>& runs, F f) {
  if (runs.empty()) return 0.0;
  double s = 0.0;
  for (const auto& r : runs) s += f(r);
  return s / static_cast<double>(runs.size());
}

BenchRun to_run(std::uint64_t seed, const SolveReport& rep) {
  return {seed, rep.iterations, rep.wall_time, rep.relative_residual(), rep.converged(),
          krylov::to_string(rep.termination)};
}

std::string fmt(double v, int prec, bool sci) {
  std::ostringstream s;
  if (sci) s << std::scientific;
  else s << std::fixed;
  s << std::setprecision(prec) << v;
  return s.str();
}

/// Runs one job per seed, in parallel when QUATKRYLOV_THREADS > 1. Each job fills one slot.
template <class Job>
void per_seed(int seeds, Job job) {
  const int threads = std::max(1, thread_count());
  if (threads == 1 || seeds == 1) {
    for (int s = 0; s < seeds; ++s) job(s);
    return;
  }
  std::vector<std::future<void>> fs;
  for (int s = 0; s < seeds; ++s) {
    fs.push_back(std::async(std::launch::async, job, s));
    if (static_cast<int>(fs.size()) == threads) {
      for (auto& f : fs) f.get();
      fs.clear();
    }
  }
  for (auto& f : fs) f.get();
}

BenchTable collect(std::string suite, std::string caption,
                   std::vector<std::pair<std::string, std::string>> params,
                   const std::vector<std::string>& names,
                   const std::vector<std::vector<BenchRun>>& per_seed_runs) {
  BenchTable t{std::move(suite), std::move(caption), std::move(params), {}};
  for (std::size_t k = 0; k < names.size(); ++k) {
    BenchRow row{names[k], {}};
    for (const auto& runs : per_seed_runs) row.runs.push_back(runs[k]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

double BenchRow::mean_iterations() const {
  return mean_of(runs, [](const BenchRun& r) { return static_cast<double>(r.iterations); });
}
double BenchRow::mean_time() const {
  return mean_of(runs, [](const BenchRun& r) { return r.time; });
}
double BenchRow::mean_residual() const {
  return mean_of(runs, [](const BenchRun& r) { return r.residual; });
}
int BenchRow::converged_count() const {
  return static_cast<int>(
      std::count_if(runs.begin(), runs.end(), [](const BenchRun& r) { return r.converged; }));
}

const BenchRow& BenchTable::row(const std::string& solver) const {
  for (const auto& r : rows) {
    if (r.solver == solver) return r;
  }
  throw InvalidParameter("bench table " + suite + " has no row " + solver);
}

std::string to_csv(const BenchTable& t) {
  std::ostringstream s;
  s << "suite,solver,seed,iterations,time,residual,converged,termination\n";
  s << std::setprecision(10);
  for (const auto& row : t.rows) {
    for (const auto& r : row.runs) {
      s << t.suite << ',' << row.solver << ',' << r.seed << ',' << r.iterations << ',' << r.time
        << ',' << r.residual << ',' << (r.converged ? 1 : 0) << ',' << r.termination << '\n';
    }
  }
  return s.str();
}

std::string to_markdown(const BenchTable& t) {
  std::ostringstream s;
  s << "### " << t.caption << "\n\n";
  for (const auto& [k, v] : t.params) s << "- " << k << ": " << v << "\n";
  s << "\n| Algorithm | Iter | CPU time | Residual | Converged |\n";
  s << "|---|---:|---:|---:|---:|\n";
  for (const auto& row : t.rows) {
    s << "| " << row.solver << " | " << fmt(row.mean_iterations(), 1, false) << " | "
      << fmt(row.mean_time(), 4, false) << " | " << fmt(row.mean_residual(), 4, true) << " | "
      << row.converged_count() << "/" << row.runs.size() << " |\n";
  }
  return s.str();
}

QLinearOperator real_counterpart_operator(const QLinearOperator& a) {
  const Index n = a.cols();
  std::optional<double> frob;
  if (a.frobenius()) frob = 2.0 * *a.frobenius();
  return {4 * a.rows(), 4 * n,
          [a](const QVector& v) {
            return embed_real(a.apply(QVector::from_stacked(v.part(0))).stacked());
          },
          frob};
}

SolveReport real_gmres(const QLinearOperator& a, const QVector& b, const SolverConfig& cfg) {
  const QLinearOperator ra = real_counterpart_operator(a);
  auto rep = krylov::gmres(ra, embed_real(b.stacked()), {}, nullptr, krylov::Side::None, cfg, "gmres");
  return rep;
}

SolveReport real_irfgmres(const QLinearOperator& a, const QVector& b, const SolverConfig& cfg) {
  const QLinearOperator ra = real_counterpart_operator(a);
  const QVector rb = embed_real(b.stacked());
  const auto p = krylov::jacobi_sqrt_residual(ra, rb);
  return krylov::gmres(ra, rb, {}, p.get(), krylov::Side::Flexible, cfg, "irfgmres");
}

BenchTable precond_table(const PrecondSuite& s) {
  if (s.n < 1 || s.seeds < 1) throw InvalidParameter("precond-table: need n >= 1 and seeds >= 1");
  SolverConfig cfg;
  cfg.tol = s.tol;
  cfg.max_iter = s.max_iter;
  const std::vector<std::string> names{"GMRES", "QGMRES", "QGMRES_lp", "QGMRES_rp"};
  std::vector<std::vector<BenchRun>> runs(static_cast<std::size_t>(s.seeds));
  per_seed(s.seeds, [&](int k) {
    const std::uint64_t seed = s.seed0 + static_cast<std::uint64_t>(k);
    Rng rng(seed);
    QMatrix a = random_diag_dominant(s.n, rng);
    const QVector b = random_qvector(s.n, rng);
    const auto p = krylov::sgs_preconditioner(a);
    const QLinearOperator op = QLinearOperator::dense(std::move(a));
    auto& out = runs[static_cast<std::size_t>(k)];
    out.push_back(to_run(seed, real_gmres(op, b, cfg)));
    out.push_back(to_run(seed, krylov::qgmres(op, b, {}, cfg)));
    out.push_back(to_run(seed, krylov::qgmres_left(op, b, {}, *p, cfg)));
    out.push_back(to_run(seed, krylov::qgmres_right(op, b, {}, *p, cfg)));
  });
  return collect("precond-table", "SGS-preconditioned QGMRES on random diagonally dominant systems",
                 {{"n", std::to_string(s.n)},
                  {"seeds", std::to_string(s.seeds)},
                  {"tol", fmt(s.tol, 1, true)}},
                 names, runs);
}

QSparseMatrix sparse_surrogate(Index n, std::uint64_t seed) {
  if (n < 4) throw InvalidParameter("sparse_surrogate: n must be >= 4");
  Index gx = static_cast<Index>(std::ceil(std::sqrt(static_cast<double>(n))));
  Rng rng(seed);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  std::vector<QTriplet> t;
  auto add = [&](Index r, Index c, int part, double v) {
    std::array<double, 4> q{};
    q[static_cast<std::size_t>(part)] = v;
    t.push_back({r, c, Quaternion{q[0], q[1], q[2], q[3]}});
  };
  // power network: ring, chords, unit diagonal
  for (Index k = 0; k < n; ++k) {
    add(k, k, 0, 1.0);
    add(k, (k + 1) % n, 0, 1.0);
    add((k + 1) % n, k, 0, 1.0);
  }
  for (Index c = 0; c < n / 2; ++c) {
    const Index i = pick(rng), j = pick(rng);
    if (i == j) continue;
    add(i, j, 0, 1.0);
    add(j, i, 0, 1.0);
  }
  // grid nodes in row-major order, the last row possibly short
  auto nb = [&](Index k, Index di, Index dj) -> Index {
    const Index i = k % gx + di, j = k / gx + dj;
    if (i < 0 || i >= gx || j < 0) return -1;
    const Index m = i + gx * j;
    return m < n ? m : -1;
  };
  const std::array<std::array<Index, 2>, 4> dirs{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};
  const std::array<double, 4> convect{-1.3, -0.7, -1.0, -1.0};
  for (Index k = 0; k < n; ++k) {
    add(k, k, 1, 4.0);
    add(k, k, 3, -3.0);
    int deg = 0;
    for (const auto& d : dirs) deg += nb(k, d[0], d[1]) >= 0;
    for (std::size_t d = 0; d < 4; ++d) {
      const Index m = nb(k, dirs[d][0], dirs[d][1]);
      if (m < 0) continue;
      add(k, m, 1, convect[d]);
      add(m, k, 2, 1.0 / deg);
      add(k, m, 3, 0.5);
    }
  }
  return QSparseMatrix::from_triplets(n, n, t);
}

QSparseMatrix matrix_market_composite(const std::string& dir, Index n) {
  const std::filesystem::path d(dir);
  auto bundle = io::QMatrixMarketBundle::from_parts(
      (d / "bcspwr10.mtx").string(), (d / "af23560.mtx").string(), (d / "rw5151.mtx").string(),
      (d / "rdb5000.mtx").string());
  return io::read_qmatrix(bundle, n);
}

BenchTable sparse_table(const SparseSuite& s) {
  if (s.n < 4 || s.seeds < 1) throw InvalidParameter("sparse-table: need n >= 4 and seeds >= 1");
  SolverConfig cfg;
  cfg.tol = s.tol;
  cfg.max_iter = s.max_iter;
  const std::vector<std::string> names{"GMRES", "QGMRES", "IRFGMRES", "FQGMRES"};
  std::vector<std::vector<BenchRun>> runs(static_cast<std::size_t>(s.seeds));
  per_seed(s.seeds, [&](int k) {
    const std::uint64_t seed = s.seed0 + static_cast<std::uint64_t>(k);
    const QSparseMatrix a = s.mm_dir ? matrix_market_composite(*s.mm_dir, s.n) : sparse_surrogate(s.n, seed);
    const QVector b = QVector::constant(a.rows(), Quaternion{1.0, 1.0, 1.0, 1.0});
    const QLinearOperator op = QLinearOperator::sparse(a);
    const auto p = krylov::jacobi_sqrt_residual(op, b);
    auto& out = runs[static_cast<std::size_t>(k)];
    out.push_back(to_run(seed, real_gmres(op, b, cfg)));
    out.push_back(to_run(seed, krylov::qgmres(op, b, {}, cfg)));
    out.push_back(to_run(seed, real_irfgmres(op, b, cfg)));
    out.push_back(to_run(seed, krylov::fqgmres(op, b, {}, *p, cfg)));
  });
  return collect("sparse-table", "GMRES, QGMRES, IRFGMRES and FQGMRES on a sparse quaternion system",
                 {{"n", std::to_string(s.n)},
                  {"matrix", s.mm_dir ? "Matrix Market composite" : "synthetic surrogate"},
                  {"seeds", std::to_string(s.seeds)},
                  {"tol", fmt(s.tol, 1, true)}},
                 names, runs);
}

BenchTable signal_table(const SignalSuite& s) {
  if (s.order < 2 || s.length < s.order || s.seeds < 1) {
    throw InvalidParameter("signal-table: need 2 <= order <= length and seeds >= 1");
  }
  SolverConfig cfg;
  cfg.tol = s.tol;
  cfg.max_iter = s.max_iter;
  tv::QTVConfig tc;
  tc.lambda = s.lambda;
  tc.inner = cfg;
  const std::vector<std::string> names{"GMRES", "QGMRES", "IRFGMRES", "QTV-FQGMRES"};
  std::vector<std::vector<BenchRun>> runs(static_cast<std::size_t>(s.seeds));
  per_seed(s.seeds, [&](int k) {
    const std::uint64_t seed = s.seed0 + static_cast<std::uint64_t>(k);
    const QVector x = imaging::synthetic_signal(s.length, seed);
    const QVector w = imaging::synthetic_filter(s.order, seed + 1000);
    const auto sys = imaging::build_signal_system(x, s.order);
    const auto sq = imaging::square_system(sys, sys.apply(w));
    const QLinearOperator op = QLinearOperator::dense(sq.a);
    auto& out = runs[static_cast<std::size_t>(k)];
    out.push_back(to_run(seed, real_gmres(op, sq.b, cfg)));
    out.push_back(to_run(seed, krylov::qgmres(op, sq.b, {}, cfg)));
    out.push_back(to_run(seed, real_irfgmres(op, sq.b, cfg)));
    out.push_back(to_run(seed, tv::qtv_fqgmres(op, sq.b, tv::DifferenceStack::signal(s.order), tc)));
  });
  return collect("signal-table", "GMRES, QGMRES, IRFGMRES and QTV-FQGMRES on filter identification",
                 {{"order", std::to_string(s.order)},
                  {"length", std::to_string(s.length)},
                  {"lambda", fmt(s.lambda, 1, true)},
                  {"seeds", std::to_string(s.seeds)},
                  {"tol", fmt(s.tol, 1, true)}},
                 names, runs);
}

std::string to_string(RestoreSolver s) {
  switch (s) {
    case RestoreSolver::QtvFqgmres:
      return "qtv-fqgmres";
    case RestoreSolver::QtvFqgmresImproved:
      return "qtv-fqgmres-improved";
    case RestoreSolver::Fqgmres:
      return "fqgmres";
  }
  return "?";
}

RestoreSolver restore_solver_from_string(const std::string& s) {
  for (auto v : {RestoreSolver::QtvFqgmres, RestoreSolver::QtvFqgmresImproved, RestoreSolver::Fqgmres}) {
    if (to_string(v) == s) return v;
  }
  throw InvalidParameter("unknown restoration solver: " + s);
}

RestoreResult restore_image(const imaging::ColorImage& truth, const RestoreOptions& o) {
  const Index h = truth.height(), w = truth.width();
  const QVector xt = image_to_qvec(truth);
  const QVector blurred =
      o.blur ? matvec(imaging::build_blur_operator(*o.blur, h, w), xt) : xt;
  const QVector noisy = o.noise > 0.0 ? imaging::add_gaussian_noise(blurred, o.noise, o.seed) : blurred;
  return restore_image(truth, imaging::qvec_to_image(noisy, h, w), o);
}

RestoreResult restore_image(const imaging::ColorImage& truth, const imaging::ColorImage& observed,
                            const RestoreOptions& o) {
  const Index h = truth.height(), w = truth.width();
  if (observed.height() != h || observed.width() != w) {
    throw DimensionError("restore_image: observed and reference sizes differ");
  }
  if (h != w) throw DimensionError("restore_image: only square images are supported");
  if (!(o.noise >= 0.0)) throw InvalidParameter("restore_image: noise must be >= 0");
  const QLinearOperator a = o.blur
                                ? QLinearOperator::sparse(imaging::build_blur_operator(*o.blur, h, w))
                                : QLinearOperator::sparse(QSparseMatrix::identity(h * w));
  const QVector b = image_to_qvec(observed);
  const double delta = imaging::expected_noise_norm(h * w, o.noise);

  RestoreResult res;
  res.observed = observed;
  if (o.solver == RestoreSolver::Fqgmres) {
    SolverConfig cfg;
    cfg.max_iter = o.max_iter;
    const double bn = norm2(b);
    // stop by the discrepancy principle; noise-free data use the plain tolerance
    cfg.tol = (delta > 0.0 && bn > 0.0) ? std::max(o.tol, o.tau * delta / bn) : o.tol;
    const auto p = krylov::jacobi_sqrt_residual(a, b);
    static_cast<SolveReport&>(res.report) = krylov::fqgmres(a, b, {}, *p, cfg);
    res.report.lambda = 0.0;
  } else {
    tv::QTVConfig tc;
    tc.lambda = o.lambda;
    tc.inner.tol = o.tol;
    tc.inner.max_iter = o.max_iter;
    tc.step_tol = o.step_tol;
    if (o.auto_lambda) {
      tc.auto_lambda = true;
      tc.discrepancy = o.tau * delta;
    }
    const auto stack = tv::DifferenceStack::image(h);
    res.report = o.solver == RestoreSolver::QtvFqgmres ? tv::qtv_fqgmres(a, b, stack, tc)
                                                       : tv::qtv_fqgmres_improved(a, b, stack, tc);
  }
  res.restored = imaging::qvec_to_image(res.report.x, h, w);
  const imaging::ColorImage clipped = res.restored.clamped();
  const imaging::ColorImage seen = observed.clamped();
  res.metrics = {{"psnr_observed", imaging::psnr(truth, seen)},
                 {"snr_observed", imaging::snr(truth, seen)},
                 {"ssim_observed", imaging::ssim(truth, seen)},
                 {"psnr_restored", imaging::psnr(truth, clipped)},
                 {"snr_restored", imaging::snr(truth, clipped)},
                 {"ssim_restored", imaging::ssim(truth, clipped)},
                 {"lambda", res.report.lambda}};
  return res;
}

}  // namespace quatkrylov::cli
