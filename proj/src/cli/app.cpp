#include "quatkrylov/cli/app.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "quatkrylov/cli/experiments.hpp"
#include "quatkrylov/cli/reproduce.hpp"
#include "quatkrylov/core/errors.hpp"
#include "quatkrylov/core/random.hpp"
#include "quatkrylov/imaging/signal.hpp"
#include "quatkrylov/io/matrix_market.hpp"
#include "quatkrylov/io/runlog.hpp"
#include "quatkrylov/krylov/gmres.hpp"
#include "quatkrylov/krylov/preconditioner.hpp"
#include "quatkrylov/tv/difference.hpp"

namespace quatkrylov::cli {

namespace {

/// A flag combination that is rejected before any computation.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(4) << v;
  return s.str();
}

int exit_for(const krylov::SolveReport& rep) {
  return rep.converged() ? kExitOk : kExitNotConverged;
}

void summary(std::ostream& out, const krylov::SolveReport& rep) {
  out << "solver: " << rep.solver << "\n"
      << "iterations: " << rep.iterations << "\n"
      << "termination: " << krylov::to_string(rep.termination) << "\n"
      << "relative residual: " << sci(rep.relative_residual()) << "\n"
      << "time: " << std::fixed << std::setprecision(4) << rep.wall_time << std::defaultfloat
      << " s\n";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("write failed: " + path);
}

// ---------------------------------------------------------------- solve

struct SolveOpts {
  std::string matrix;
  std::vector<std::string> parts;
  std::string generate;
  Index n = 500;
  std::uint64_t seed = 1;
  std::string rhs;
  std::optional<Index> order;
  std::string solver = "qgmres";
  std::string precond = "none";
  double tol = 1e-6;
  int max_iter = 1000;
  std::optional<int> restart;
  std::string log;
  std::string x_out;
};

void check_solve(const SolveOpts& o) {
  const int sources = !o.matrix.empty() + !o.parts.empty() + !o.generate.empty();
  if (sources != 1) throw UsageError("solve: give exactly one of --matrix, --parts, --generate");
  if (!o.parts.empty() && o.parts.size() != 3 && o.parts.size() != 4) {
    throw UsageError("solve: --parts takes 3 (A1 A2 A3) or 4 (A0 A1 A2 A3) files");
  }
  if (!o.generate.empty() && !o.rhs.empty()) {
    throw UsageError("solve: --rhs cannot be combined with --generate");
  }
  if (!o.generate.empty() && o.order) throw UsageError("solve: --order needs a matrix file");
  if (o.order && *o.order < 1) throw UsageError("solve: --order must be >= 1");
  if (o.n < 1) throw UsageError("solve: --n must be >= 1");
  if (o.solver == "qgmres" && o.precond != "none") {
    throw UsageError("solve: qgmres takes no preconditioner; use qgmres-lp, qgmres-rp or fqgmres");
  }
  if (o.precond == "jacobi-sqrt-res" && o.solver != "fqgmres") {
    throw UsageError("solve: jacobi-sqrt-res changes every step and needs --solver fqgmres");
  }
  if (o.restart && *o.restart < 1) throw UsageError("solve: --restart must be >= 1");
}

int cmd_solve(const SolveOpts& o, const std::map<std::string, std::string>& echo,
              std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  QSparseMatrix a;
  QVector b;
  if (!o.generate.empty()) {
    Rng rng(o.seed);
    if (o.generate == "dominant") {
      a = QSparseMatrix::from_dense(random_diag_dominant(o.n, rng));
      b = random_qvector(o.n, rng);
    } else if (o.generate == "identity") {
      a = QSparseMatrix::identity(o.n);
      b = random_qvector(o.n, rng);
    } else {
      a = sparse_surrogate(o.n, o.seed);
      b = QVector::constant(o.n, Quaternion{1.0, 1.0, 1.0, 1.0});
    }
  } else {
    io::QMatrixMarketBundle bundle;
    if (!o.matrix.empty()) {
      bundle = io::QMatrixMarketBundle::from_extended(o.matrix);
    } else if (o.parts.size() == 4) {
      bundle = io::QMatrixMarketBundle::from_parts(o.parts[0], o.parts[1], o.parts[2], o.parts[3]);
    } else {
      bundle = io::QMatrixMarketBundle::from_parts(std::nullopt, o.parts[0], o.parts[1], o.parts[2]);
    }
    a = io::read_qmatrix(bundle, o.order);
    if (a.rows() != a.cols()) throw DimensionError("solve: matrix must be square");
    if (!o.rhs.empty()) {
      b = io::read_qvector(o.rhs);
      if (b.size() != a.rows()) throw DimensionError("solve: rhs length does not match matrix");
    } else {
      b = QVector::constant(a.rows(), Quaternion{1.0, 1.0, 1.0, 1.0});
    }
  }
  const double setup = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  krylov::SolverConfig cfg;
  cfg.tol = o.tol;
  cfg.max_iter = o.max_iter;
  cfg.restart = o.restart;
  const QLinearOperator op = QLinearOperator::sparse(a);
  krylov::PreconditionerPtr p;
  if (o.precond == "sgs") p = krylov::sgs_preconditioner(a);
  else if (o.precond == "jacobi-sqrt-res") p = krylov::jacobi_sqrt_residual(op, b);
  else p = krylov::identity_preconditioner();

  krylov::SolveReport rep;
  if (o.solver == "qgmres") rep = krylov::qgmres(op, b, {}, cfg);
  else if (o.solver == "qgmres-lp") rep = krylov::qgmres_left(op, b, {}, *p, cfg);
  else if (o.solver == "qgmres-rp") rep = krylov::qgmres_right(op, b, {}, *p, cfg);
  else rep = krylov::fqgmres(op, b, {}, *p, cfg);

  summary(out, rep);
  if (!o.log.empty()) {
    auto log = io::make_runlog(rep, echo);
    log.timings["setup"] = setup;
    io::write_runlog(log, o.log);
  }
  if (!o.x_out.empty()) io::write_qvector(o.x_out, rep.x);
  return exit_for(rep);
}

// ---------------------------------------------------------------- filter-signal

struct FilterOpts {
  std::string signal;
  std::string target;
  Index length = 300;
  Index order = 100;
  std::uint64_t seed = 1;
  std::string solver = "qtv-fqgmres";
  double lambda = 1e-8;
  double tol = 1e-6;
  int max_iter = 2000;
  std::string log;
  std::string filter_out;
};

void check_filter(const FilterOpts& o, const CLI::App& sub) {
  if (o.signal.empty() != o.target.empty()) {
    throw UsageError("filter-signal: --signal and --target go together");
  }
  if (!o.signal.empty() && (sub.count("--length") || sub.count("--seed"))) {
    throw UsageError("filter-signal: --length and --seed only apply to synthetic data");
  }
  if (o.order < 2) throw UsageError("filter-signal: --order must be >= 2");
  if (o.signal.empty() && o.length < o.order) {
    throw UsageError("filter-signal: --length must be >= --order");
  }
  if (o.solver != "qtv-fqgmres" && sub.count("--lambda")) {
    throw UsageError("filter-signal: --lambda only applies to qtv-fqgmres");
  }
  if (!(o.lambda >= 0.0)) throw UsageError("filter-signal: --lambda must be >= 0");
}

int cmd_filter(const FilterOpts& o, const std::map<std::string, std::string>& echo,
               std::ostream& out) {
  QVector x, y;
  std::optional<QVector> reference;
  if (!o.signal.empty()) {
    x = imaging::read_signal_csv(o.signal);
    y = imaging::read_signal_csv(o.target);
  } else {
    x = imaging::synthetic_signal(o.length, o.seed);
    reference = imaging::synthetic_filter(o.order, o.seed + 1000);
  }
  const auto sys = imaging::build_signal_system(x, o.order);
  if (reference) y = sys.apply(*reference);
  const auto sq = imaging::square_system(sys, y);
  const QLinearOperator op = QLinearOperator::dense(sq.a);

  krylov::SolverConfig cfg;
  cfg.tol = o.tol;
  cfg.max_iter = o.max_iter;
  krylov::SolveReport rep;
  if (o.solver == "qgmres") {
    rep = krylov::qgmres(op, sq.b, {}, cfg);
  } else if (o.solver == "fqgmres") {
    rep = krylov::fqgmres(op, sq.b, {}, *krylov::jacobi_sqrt_residual(op, sq.b), cfg);
  } else if (o.solver == "gmres") {
    rep = real_gmres(op, sq.b, cfg);
  } else if (o.solver == "irfgmres") {
    rep = real_irfgmres(op, sq.b, cfg);
  } else {
    tv::QTVConfig tc;
    tc.lambda = o.lambda;
    tc.inner = cfg;
    rep = tv::qtv_fqgmres(op, sq.b, tv::DifferenceStack::signal(o.order), tc);
  }
  // the real-counterpart runs return the stacked parts in part 0
  QVector w = (o.solver == "gmres" || o.solver == "irfgmres")
                  ? QVector::from_stacked(rep.x.part(0))
                  : rep.x;
  summary(out, rep);
  std::map<std::string, double> metrics;
  metrics["fit_residual"] = norm2(sys.apply(w) - y) / std::max(norm2(y), 1e-300);
  if (reference) {
    metrics["filter_error"] = norm2(w - *reference) / norm2(*reference);
    out << "filter error: " << sci(metrics["filter_error"]) << "\n";
  }
  if (!o.log.empty()) {
    auto log = io::make_runlog(rep, echo);
    log.metrics = metrics;
    io::write_runlog(log, o.log);
  }
  if (!o.filter_out.empty()) io::write_qvector(o.filter_out, w);
  return exit_for(rep);
}

// ---------------------------------------------------------------- restore-image

struct RestoreOpts {
  std::string input;
  std::string observed;
  std::string blur = "gaussian";
  int blur_size = 9;
  double blur_sigma = 2.0;
  std::string boundary = "periodic";
  double noise = 5.0 / 255.0;
  double lambda = 0.003;
  bool auto_lambda = false;
  std::string solver = "qtv-fqgmres-improved";
  std::uint64_t seed = 1;
  double tol = 1e-6;
  int max_iter = 60;
  double step_tol = 1e-4;
  std::string out;
  std::string observed_out;
  std::string log;
};

void check_restore(const RestoreOpts& o, const CLI::App& sub) {
  const bool identity = o.blur == "identity";
  if (identity && (sub.count("--blur-size") || sub.count("--blur-sigma") || sub.count("--boundary"))) {
    throw UsageError("restore-image: --blur identity takes no PSF settings");
  }
  if (o.solver == "fqgmres" && (sub.count("--lambda") || o.auto_lambda)) {
    throw UsageError("restore-image: fqgmres is unregularized; drop --lambda / --auto-lambda");
  }
  if (o.auto_lambda && sub.count("--lambda")) {
    throw UsageError("restore-image: --auto-lambda and --lambda are exclusive");
  }
  if (o.auto_lambda && o.noise == 0.0) {
    throw UsageError("restore-image: --auto-lambda needs a noise level above zero");
  }
  if (!o.observed.empty() && sub.count("--seed")) {
    throw UsageError("restore-image: --seed only applies when noise is simulated");
  }
  if (!o.observed.empty() && !o.observed_out.empty()) {
    throw UsageError("restore-image: --observed-out only applies when degradation is simulated");
  }
  if (o.blur_size < 1 || o.blur_size % 2 == 0) {
    throw UsageError("restore-image: --blur-size must be odd and positive");
  }
}

int cmd_restore(const RestoreOpts& o, const std::map<std::string, std::string>& echo,
                std::ostream& out) {
  RestoreOptions ro;
  if (o.blur == "identity") {
    ro.blur.reset();
  } else {
    ro.blur = imaging::BlurModel{o.blur_size, o.blur_sigma, imaging::boundary_from_string(o.boundary)};
  }
  ro.noise = o.noise;
  ro.seed = o.seed;
  ro.solver = restore_solver_from_string(o.solver);
  ro.lambda = o.lambda;
  ro.auto_lambda = o.auto_lambda;
  ro.tol = o.tol;
  ro.max_iter = o.max_iter;
  ro.step_tol = o.step_tol;

  const auto truth = imaging::read_png(o.input);
  const RestoreResult res = o.observed.empty()
                                ? restore_image(truth, ro)
                                : restore_image(truth, imaging::read_png(o.observed), ro);
  summary(out, res.report);
  for (const auto& [k, v] : res.metrics) out << k << ": " << std::setprecision(6) << v << "\n";
  if (!o.out.empty()) imaging::write_png(o.out, res.restored);
  if (!o.observed_out.empty()) imaging::write_png(o.observed_out, res.observed);
  if (!o.log.empty()) {
    auto log = io::make_runlog(res.report, echo);
    log.metrics = res.metrics;
    io::write_runlog(log, o.log);
  }
  return exit_for(res.report);
}

// ---------------------------------------------------------------- bench

struct BenchOpts {
  std::string suite;
  std::optional<Index> n;
  std::optional<Index> length;
  std::optional<int> seeds;
  std::uint64_t seed = 1;
  std::optional<double> lambda;
  std::string mm_dir;
  std::optional<int> max_iter;
  double tol = 1e-6;
  std::string out;
  std::string format;
};

void check_bench(const BenchOpts& o) {
  if (o.length && o.suite != "signal-table") {
    throw UsageError("bench: --length only applies to signal-table");
  }
  if (o.lambda && o.suite != "signal-table") {
    throw UsageError("bench: --lambda only applies to signal-table");
  }
  if (!o.mm_dir.empty() && o.suite != "sparse-table") {
    throw UsageError("bench: --mm-dir only applies to sparse-table");
  }
  if (o.seeds && *o.seeds < 1) throw UsageError("bench: --seeds must be >= 1");
  if (o.n && *o.n < 2) throw UsageError("bench: --n must be >= 2");
  if (o.lambda && !(*o.lambda >= 0.0)) throw UsageError("bench: --lambda must be >= 0");
}

BenchTable run_suite(const BenchOpts& o) {
  if (o.suite == "precond-table") {
    PrecondSuite s;
    if (o.n) s.n = *o.n;
    if (o.seeds) s.seeds = *o.seeds;
    if (o.max_iter) s.max_iter = *o.max_iter;
    s.seed0 = o.seed;
    s.tol = o.tol;
    return precond_table(s);
  }
  if (o.suite == "sparse-table") {
    SparseSuite s;
    if (o.n) s.n = *o.n;
    if (o.seeds) s.seeds = *o.seeds;
    if (o.max_iter) s.max_iter = *o.max_iter;
    if (!o.mm_dir.empty()) s.mm_dir = o.mm_dir;
    s.seed0 = o.seed;
    s.tol = o.tol;
    return sparse_table(s);
  }
  SignalSuite s;
  if (o.n) s.order = *o.n;
  s.length = o.length.value_or(3 * s.order);
  if (o.seeds) s.seeds = *o.seeds;
  if (o.max_iter) s.max_iter = *o.max_iter;
  if (o.lambda) s.lambda = *o.lambda;
  s.seed0 = o.seed;
  s.tol = o.tol;
  return signal_table(s);
}

int cmd_bench(const BenchOpts& o, std::ostream& out) {
  const BenchTable t = run_suite(o);
  const std::string md = to_markdown(t);
  out << md;
  if (!o.out.empty()) {
    std::string fmt = o.format;
    if (fmt.empty()) fmt = std::filesystem::path(o.out).extension() == ".csv" ? "csv" : "markdown";
    write_text(o.out, fmt == "csv" ? to_csv(t) : md);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- app

struct Commands {
  SolveOpts solve;
  FilterOpts filter;
  RestoreOpts restore;
  BenchOpts bench;
  ReproduceOptions reproduce;
};

void build(CLI::App& app, Commands& c) {
  app.require_subcommand(1);
  app.footer("Exit codes: 0 converged, 2 not converged, 3 input error.\n"
             "QUATKRYLOV_THREADS caps parallelism (default 1).");

  auto* s = app.add_subcommand("solve", "Solve a quaternion linear system A x = b.");
  s->add_option("--matrix", c.solve.matrix, "Matrix in the extended quaternion Matrix Market format");
  s->add_option("--parts", c.solve.parts,
                "Real Matrix Market parts: A1 A2 A3, or A0 A1 A2 A3")
      ->expected(3, 4);
  s->add_option("--generate", c.solve.generate, "Generated system instead of a file")
      ->check(CLI::IsMember({"dominant", "identity", "sparse"}));
  s->add_option("--n", c.solve.n, "Size of a generated system")->capture_default_str();
  s->add_option("--seed", c.solve.seed, "Seed of a generated system")->capture_default_str();
  s->add_option("--rhs", c.solve.rhs, "Right-hand side vector (default: all components one)");
  s->add_option("--order", c.solve.order, "Keep the leading k x k block of the matrix");
  s->add_option("--solver", c.solve.solver, "Solver")
      ->check(CLI::IsMember({"qgmres", "qgmres-lp", "qgmres-rp", "fqgmres"}))
      ->capture_default_str();
  s->add_option("--precond", c.solve.precond, "Preconditioner")
      ->check(CLI::IsMember({"none", "sgs", "jacobi-sqrt-res"}))
      ->capture_default_str();
  s->add_option("--tol", c.solve.tol, "Relative residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  s->add_option("--max-iter", c.solve.max_iter, "Iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  s->add_option("--restart", c.solve.restart, "Restart cycle length (default: none)");
  s->add_option("--log", c.solve.log, "Write a JSON run log");
  s->add_option("--x-out", c.solve.x_out, "Write the solution vector");

  auto* f = app.add_subcommand("filter-signal", "Identify a quaternion filter from signal pairs.");
  f->add_option("--signal", c.filter.signal, "Input signal CSV (t,r,g,b)");
  f->add_option("--target", c.filter.target, "Target signal CSV (t,r,g,b)");
  f->add_option("--length", c.filter.length, "Synthetic signal length")->capture_default_str();
  f->add_option("--order", c.filter.order, "Number of filter taps")->capture_default_str();
  f->add_option("--seed", c.filter.seed, "Synthetic data seed")->capture_default_str();
  f->add_option("--solver", c.filter.solver, "Solver")
      ->check(CLI::IsMember({"gmres", "qgmres", "irfgmres", "fqgmres", "qtv-fqgmres"}))
      ->capture_default_str();
  f->add_option("--lambda", c.filter.lambda, "QTV weight (qtv-fqgmres)")->capture_default_str();
  f->add_option("--tol", c.filter.tol, "Relative residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  f->add_option("--max-iter", c.filter.max_iter, "Iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  f->add_option("--log", c.filter.log, "Write a JSON run log");
  f->add_option("--filter-out", c.filter.filter_out, "Write the filter taps");

  auto* r = app.add_subcommand("restore-image", "Deblur and denoise a color image.");
  r->add_option("--input", c.restore.input, "Reference PNG")->required();
  r->add_option("--observed", c.restore.observed, "Degraded PNG; skips the simulated degradation");
  r->add_option("--blur", c.restore.blur, "Blur model")
      ->check(CLI::IsMember({"gaussian", "identity"}))
      ->capture_default_str();
  r->add_option("--blur-size", c.restore.blur_size, "Gaussian PSF side length")->capture_default_str();
  r->add_option("--blur-sigma", c.restore.blur_sigma, "Gaussian PSF width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  r->add_option("--boundary", c.restore.boundary, "Boundary condition")
      ->check(CLI::IsMember({"zero", "periodic", "reflexive"}))
      ->capture_default_str();
  r->add_option("--noise", c.restore.noise, "Gaussian noise standard deviation")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  r->add_option("--lambda", c.restore.lambda, "QTV weight")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  r->add_flag("--auto-lambda", c.restore.auto_lambda, "Choose lambda by the discrepancy principle");
  r->add_option("--solver", c.restore.solver, "Solver")
      ->check(CLI::IsMember({"qtv-fqgmres", "qtv-fqgmres-improved", "fqgmres"}))
      ->capture_default_str();
  r->add_option("--seed", c.restore.seed, "Noise seed")->capture_default_str();
  r->add_option("--tol", c.restore.tol, "Relative residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  r->add_option("--max-iter", c.restore.max_iter, "Iteration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  r->add_option("--step-tol", c.restore.step_tol, "Stop when the iterate changes less than this")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  r->add_option("--out", c.restore.out, "Write the restored PNG");
  r->add_option("--observed-out", c.restore.observed_out, "Write the simulated observation PNG");
  r->add_option("--log", c.restore.log, "Write a JSON run log with image metrics");

  auto* b = app.add_subcommand("bench", "Run a comparison table.");
  b->add_option("--suite", c.bench.suite, "Suite")
      ->required()
      ->check(CLI::IsMember({"precond-table", "sparse-table", "signal-table"}));
  b->add_option("--n", c.bench.n, "Problem size (filter taps for signal-table)");
  b->add_option("--length", c.bench.length, "Signal length for signal-table (default 3n)");
  b->add_option("--seeds", c.bench.seeds, "Number of seeds");
  b->add_option("--seed", c.bench.seed, "First seed")->capture_default_str();
  b->add_option("--lambda", c.bench.lambda, "QTV weight for signal-table");
  b->add_option("--mm-dir", c.bench.mm_dir, "Directory with the Matrix Market parts (sparse-table)");
  b->add_option("--max-iter", c.bench.max_iter, "Iteration cap");
  b->add_option("--tol", c.bench.tol, "Relative residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  b->add_option("--out", c.bench.out, "Write the table (.csv gives CSV, anything else markdown)");
  b->add_option("--format", c.bench.format, "Force the output format")
      ->check(CLI::IsMember({"csv", "markdown"}));

  auto* p = app.add_subcommand("reproduce", "Run every suite and print reported vs observed values.");
  p->add_flag("--quick", c.reproduce.quick, "Reduced problem sizes");
  p->add_option("--images", c.reproduce.images, "Directory with the stock PNG images")
      ->capture_default_str();
  p->add_option("--mm-dir", c.reproduce.mm_dir, "Directory with the Matrix Market parts");
  p->add_option("--out", c.reproduce.out, "Also write the report as markdown");
}

std::map<std::string, std::string> echo_of(const std::vector<std::string>& args) {
  std::map<std::string, std::string> m;
  if (!args.empty()) m["command"] = args[0];
  std::string line;
  for (const auto& a : args) line += (line.empty() ? "" : " ") + a;
  m["argv"] = line;
  return m;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternion Krylov solvers and QTV image restoration.", "quatkrylov"};
  Commands c;
  build(app, c);
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "quatkrylov: " << e.what() << "\n";
    return kExitInputError;
  }

  const auto echo = echo_of(args);
  try {
    if (app.got_subcommand("solve")) {
      check_solve(c.solve);
      return cmd_solve(c.solve, echo, out);
    }
    if (app.got_subcommand("filter-signal")) {
      check_filter(c.filter, *app.get_subcommand("filter-signal"));
      return cmd_filter(c.filter, echo, out);
    }
    if (app.got_subcommand("restore-image")) {
      check_restore(c.restore, *app.get_subcommand("restore-image"));
      return cmd_restore(c.restore, echo, out);
    }
    if (app.got_subcommand("bench")) {
      check_bench(c.bench);
      return cmd_bench(c.bench, out);
    }
    return cmd_reproduce(c.reproduce, out);
  } catch (const Error& e) {
    err << "quatkrylov: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "quatkrylov: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

std::string full_help() {
  std::ostringstream s, sink;
  run({"--help"}, s, sink);
  for (const char* sub : {"solve", "filter-signal", "restore-image", "bench", "reproduce"}) {
    s << "\n";
    run({sub, "--help"}, s, sink);
  }
  return s.str();
}

}  // namespace quatkrylov::cli
