#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "quatkrylov/core/qsparse.hpp"

namespace quatkrylov::io {

/// A real Matrix Market matrix with symmetry already expanded.
struct RealMatrix {
  Index rows = 0;
  Index cols = 0;
  std::vector<Eigen::Triplet<double>> entries;
};

/// Coordinate or array format; fields real, integer, pattern (pattern entries read as 1);
/// symmetry general, symmetric, skew-symmetric. Anything else raises FormatError.
RealMatrix read_matrix_market(std::istream& in);
RealMatrix read_matrix_market(const std::string& path);

/// Coordinate real general, 17 significant digits.
void write_matrix_market(std::ostream& out, const RealMatrix& m);
void write_matrix_market(const std::string& path, const RealMatrix& m);

/// Either up to four real Matrix Market files (index 0 = real part, optional) or one file in the
/// extended quaternion format.
struct QMatrixMarketBundle {
  std::array<std::optional<std::string>, 4> parts;
  std::optional<std::string> extended;

  static QMatrixMarketBundle from_parts(std::optional<std::string> a0, std::string a1, std::string a2,
                                        std::string a3);
  static QMatrixMarketBundle from_extended(std::string path);
};

/// Reads the bundle; with k set, keeps the leading k x k principal submatrix.
QSparseMatrix read_qmatrix(const QMatrixMarketBundle& bundle, std::optional<Index> k = std::nullopt);

/// Extended format, see docs/qmm_format.md.
QSparseMatrix read_qmatrix_extended(std::istream& in);
QSparseMatrix read_qmatrix_extended(const std::string& path);
void write_qmatrix_extended(std::ostream& out, const QSparseMatrix& a);
void write_qmatrix_extended(const std::string& path, const QSparseMatrix& a);

/// Vector from an extended file (array n x 1 or coordinate n x 1).
QVector read_qvector(const std::string& path);
void write_qvector(const std::string& path, const QVector& x);

}  // namespace quatkrylov::io
