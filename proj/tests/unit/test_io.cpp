#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "oracles.hpp"
#include "quatkrylov/core/random.hpp"
#include "quatkrylov/io/matrix_market.hpp"
#include "quatkrylov/io/runlog.hpp"
#include "quatkrylov/krylov/gmres.hpp"

using namespace quatkrylov;
using namespace quatkrylov::io;

namespace {

class TempDir {
 public:
  TempDir() : dir_(std::filesystem::temp_directory_path() / ("qk_io_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() { std::filesystem::remove_all(dir_); }
  std::string file(const std::string& name, const std::string& content = {}) const {
    const auto p = (dir_ / name).string();
    if (!content.empty()) std::ofstream(p) << content;
    return p;
  }

 private:
  std::filesystem::path dir_;
};

const char* kIdentity2 = "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n2 2 1\n";

RealMatrix parse(const std::string& s) {
  std::istringstream in(s);
  return read_matrix_market(in);
}

Eigen::MatrixXd dense(const RealMatrix& m) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m.rows, m.cols);
  for (const auto& t : m.entries) d(t.row(), t.col()) += t.value();
  return d;
}

}  // namespace

TEST(MatrixMarket, CoordinateGeneral) {
  const RealMatrix m = parse("%%MatrixMarket matrix coordinate real general\n% c\n\n3 2 3\n1 1 1.5\n3 2 -2\n2 1 4e-3\n");
  Eigen::MatrixXd want(3, 2);
  want << 1.5, 0, 4e-3, 0, 0, -2;
  EXPECT_EQ(dense(m), want);
}

TEST(MatrixMarket, SymmetricAndSkew) {
  const RealMatrix s = parse("%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n1 1 3\n2 1 5\n");
  Eigen::MatrixXd ws(2, 2);
  ws << 3, 5, 5, 0;
  EXPECT_EQ(dense(s), ws);
  const RealMatrix k = parse("%%MatrixMarket matrix coordinate real skew-symmetric\n2 2 1\n2 1 5\n");
  Eigen::MatrixXd wk(2, 2);
  wk << 0, -5, 5, 0;
  EXPECT_EQ(dense(k), wk);
}

TEST(MatrixMarket, PatternAndInteger) {
  EXPECT_EQ(dense(parse("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 2\n"))(0, 1), 1.0);
  EXPECT_EQ(dense(parse("%%MatrixMarket matrix coordinate integer general\n1 1 1\n1 1 7\n"))(0, 0), 7.0);
}

TEST(MatrixMarket, ArrayFormats) {
  Eigen::MatrixXd g(2, 2);
  g << 1, 3, 2, 4;
  EXPECT_EQ(dense(parse("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n")), g);
  Eigen::MatrixXd s(2, 2);
  s << 1, 2, 2, 3;
  EXPECT_EQ(dense(parse("%%MatrixMarket matrix array real symmetric\n2 2\n1\n2\n3\n")), s);
}

TEST(MatrixMarket, RejectsUnsupported) {
  for (const char* bad : {
           "%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1 0\n",
           "%%MatrixMarket matrix coordinate real hermitian\n1 1 1\n1 1 1\n",
           "%%MatrixMarket vector coordinate real general\n1 1 1\n1 1 1\n",
           "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n",
           "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n",
           "%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 1\n2 2 2\n",
           "%%NotMatrixMarket matrix coordinate real general\n1 1 0\n",
           ""}) {
    EXPECT_THROW(parse(bad), FormatError) << bad;
  }
}

TEST(MatrixMarket, WriteReadRoundTrip) {
  Rng rng(1);
  RealMatrix m{5, 4, {}};
  std::normal_distribution<double> nd;
  for (int e = 0; e < 9; ++e) m.entries.emplace_back(e % 5, (e * 3) % 4, nd(rng));
  std::stringstream ss;
  write_matrix_market(ss, m);
  EXPECT_EQ(dense(read_matrix_market(ss)), dense(m));
}

TEST(QBundle, FourIdentityParts) {
  TempDir t;
  const auto p = t.file("i.mtx", kIdentity2);
  const QSparseMatrix a = read_qmatrix(QMatrixMarketBundle::from_parts(p, p, p, p));
  QMatrix want = QMatrix::zeros(2, 2);
  for (Index i = 0; i < 2; ++i) want.set(i, i, Quaternion{1, 1, 1, 1});
  EXPECT_EQ(qk_oracle::qmdist(a.to_dense(), want), 0.0);
}

TEST(QBundle, MissingRealPart) {
  TempDir t;
  const auto p = t.file("i.mtx", kIdentity2);
  const QSparseMatrix a = read_qmatrix(QMatrixMarketBundle::from_parts(std::nullopt, p, p, p));
  EXPECT_EQ(a.to_dense().part(0).norm(), 0.0);
  EXPECT_EQ(a.coeff(1, 1), (Quaternion{0, 1, 1, 1}));
}

TEST(QBundle, DimensionMismatch) {
  TempDir t;
  const auto p = t.file("i.mtx", kIdentity2);
  const auto q = t.file("j.mtx", "%%MatrixMarket matrix coordinate real general\n3 3 0\n");
  EXPECT_THROW(read_qmatrix(QMatrixMarketBundle::from_parts(std::nullopt, p, q, p)), FormatError);
  EXPECT_THROW(read_qmatrix(QMatrixMarketBundle::from_parts(std::nullopt, p, t.file("none.mtx"), p)),
               IoError);
}

TEST(QBundle, PrincipalSubmatrix) {
  TempDir t;
  Rng rng(2);
  const QMatrix d = random_qmatrix(5, 5, rng);
  std::array<std::string, 4> paths;
  for (int c = 0; c < 4; ++c) {
    RealMatrix m{5, 5, {}};
    for (Index j = 0; j < 5; ++j) {
      for (Index i = 0; i < 5; ++i) m.entries.emplace_back(i, j, d.part(c)(i, j));
    }
    paths[static_cast<std::size_t>(c)] = t.file("p" + std::to_string(c) + ".mtx");
    write_matrix_market(paths[static_cast<std::size_t>(c)], m);
  }
  const auto bundle = QMatrixMarketBundle::from_parts(paths[0], paths[1], paths[2], paths[3]);
  const QSparseMatrix a = read_qmatrix(bundle, 3);
  ASSERT_EQ(a.rows(), 3);
  EXPECT_EQ(qk_oracle::qmdist(a.to_dense(), d.block(0, 0, 3, 3)), 0.0);
  EXPECT_THROW(read_qmatrix(bundle, 6), DimensionError);
  // reading twice gives the same matrix
  EXPECT_EQ(qk_oracle::qmdist(read_qmatrix(bundle).to_dense(), read_qmatrix(bundle).to_dense()), 0.0);
}

TEST(Extended, RoundTripIsLossless) {
  Rng rng(3);
  std::vector<QTriplet> tr;
  for (int e = 0; e < 20; ++e) tr.push_back({e % 7, (e * 5) % 6, random_quaternion(rng) * 1e-7});
  const QSparseMatrix a = QSparseMatrix::from_triplets(7, 6, tr);
  std::stringstream ss;
  write_qmatrix_extended(ss, a);
  const QSparseMatrix b = read_qmatrix_extended(ss);
  EXPECT_EQ(qk_oracle::qmdist(a.to_dense(), b.to_dense()), 0.0);
}

TEST(Extended, ArrayVariantAndVector) {
  std::istringstream in(
      "%%QuaternionMatrixMarket matrix array quaternion general\n2 1\n1 2 3 4\n0 0 0 -1\n");
  const QSparseMatrix a = read_qmatrix_extended(in);
  EXPECT_EQ(a.coeff(0, 0), (Quaternion{1, 2, 3, 4}));
  EXPECT_EQ(a.coeff(1, 0), (Quaternion{0, 0, 0, -1}));
  TempDir t;
  Rng rng(4);
  const QVector x = random_qvector(9, rng);
  const auto p = t.file("x.qmm");
  write_qvector(p, x);
  EXPECT_EQ(norm2(read_qvector(p) - x), 0.0);
}

TEST(Extended, Rejects) {
  for (const char* bad : {
           "%%QuaternionMatrixMarket matrix coordinate real general\n1 1 1\n1 1 1\n",
           "%%QuaternionMatrixMarket matrix coordinate quaternion symmetric\n1 1 1\n1 1 1 0 0 0\n",
           "%%QuaternionMatrixMarket matrix coordinate quaternion general\n1 1 1\n1 1 1 0 0\n",
           "%%MatrixMarket matrix coordinate quaternion general\n1 1 1\n1 1 1 0 0 0\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_qmatrix_extended(in), FormatError) << bad;
  }
}

TEST(Extended, BundleFromExtendedFile) {
  TempDir t;
  const auto p = t.file("a.qmm",
                        "%%QuaternionMatrixMarket matrix coordinate quaternion general\n"
                        "% two entries\n2 2 2\n1 1 1 0 0 0\n2 2 0 1 0 0\n");
  const QSparseMatrix a = read_qmatrix(QMatrixMarketBundle::from_extended(p));
  EXPECT_EQ(a.coeff(1, 1), (Quaternion{0, 1, 0, 0}));
}

TEST(RunLog, MinimalRoundTrip) {
  RunLog log;
  log.solver = "qgmres";
  log.termination = "converged";
  EXPECT_EQ(from_json(to_json(log)), log);
}

TEST(RunLog, LongHistoryExact) {
  Rng rng(5);
  std::uniform_real_distribution<double> u(-20.0, 5.0);
  RunLog log;
  log.solver = "fqgmres";
  for (int k = 0; k < 300; ++k) log.residuals.push_back(std::pow(10.0, u(rng)) * (1.0 + 1e-15 * k));
  log.residuals.push_back(std::numeric_limits<double>::denorm_min());
  log.config = {{"tol", "1e-06"}, {"precond", "jacobi-sqrt-res"}};
  log.metrics = {{"psnr", std::numeric_limits<double>::infinity()}, {"ssim", 0.93}};
  log.timings = {{"solve", 0.125}};
  log.true_residual = std::nan("");
  TempDir t;
  const auto p = t.file("log.json");
  write_runlog(log, p);
  const RunLog back = read_runlog(p);
  EXPECT_EQ(back, log);
  for (std::size_t k = 0; k < log.residuals.size(); ++k) EXPECT_EQ(back.residuals[k], log.residuals[k]);
}

TEST(RunLog, FromSolveReport) {
  Rng rng(6);
  QMatrix a = random_qmatrix(6, 6, rng);
  for (Index i = 0; i < 6; ++i) a.set(i, i, a(i, i) + Quaternion{5.0});
  const auto rep = krylov::qgmres(QLinearOperator::dense(a), random_qvector(6, rng), {}, {});
  const RunLog log = make_runlog(rep, {{"n", "6"}});
  EXPECT_EQ(log.residuals, rep.residual_history);
  EXPECT_EQ(log.iterations, rep.iterations);
  EXPECT_EQ(log.termination, krylov::to_string(rep.termination));
  EXPECT_EQ(from_json(to_json(log)), log);
}

TEST(RunLog, Errors) {
  EXPECT_THROW(from_json(R"({"version": "quatkrylov.runlog/99", "solver": "x"})"), VersionError);
  EXPECT_THROW(from_json("{not json"), FormatError);
  EXPECT_THROW(from_json(R"({"solver": "x"})"), FormatError);
  EXPECT_THROW(from_json(R"({"version": "quatkrylov.runlog/1"})"), FormatError);
  EXPECT_THROW(read_runlog("/nonexistent/log.json"), IoError);
  EXPECT_THROW(write_runlog(RunLog{}, "/nonexistent/dir/log.json"), IoError);
}
