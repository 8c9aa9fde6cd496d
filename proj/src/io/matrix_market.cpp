#include "quatkrylov/io/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace quatkrylov::io {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

struct Header {
  std::string banner, object, format, field, symmetry;
};

Header read_header(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("matrix market: empty input");
  std::istringstream ss(line);
  Header h;
  ss >> h.banner >> h.object >> h.format >> h.field >> h.symmetry;
  h.object = lower(h.object);
  h.format = lower(h.format);
  h.field = lower(h.field);
  h.symmetry = lower(h.symmetry);
  if (h.object != "matrix") throw FormatError("matrix market: unsupported object '" + h.object + "'");
  if (h.format != "coordinate" && h.format != "array") {
    throw FormatError("matrix market: unsupported format '" + h.format + "'");
  }
  return h;
}

// Next line that is neither blank nor a comment.
bool data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '%') continue;
    return true;
  }
  return false;
}

std::istringstream next_data(std::istream& in, const char* what) {
  std::string line;
  if (!data_line(in, line)) throw FormatError(std::string("matrix market: missing ") + what);
  return std::istringstream(line);
}

void check_index(Index i, Index j, Index rows, Index cols) {
  if (i < 1 || j < 1 || i > rows || j > cols) {
    throw FormatError("matrix market: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") out of range");
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  return in;
}

}  // namespace

RealMatrix read_matrix_market(std::istream& in) {
  const Header h = read_header(in);
  if (h.banner != "%%MatrixMarket") throw FormatError("matrix market: bad banner '" + h.banner + "'");
  const bool pattern = h.field == "pattern";
  if (h.field != "real" && h.field != "integer" && !pattern) {
    throw FormatError("matrix market: unsupported field '" + h.field + "'");
  }
  if (h.symmetry != "general" && h.symmetry != "symmetric" && h.symmetry != "skew-symmetric") {
    throw FormatError("matrix market: unsupported symmetry '" + h.symmetry + "'");
  }
  if (pattern && h.format == "array") throw FormatError("matrix market: pattern array is invalid");
  const double mirror = h.symmetry == "skew-symmetric" ? -1.0 : 1.0;
  const bool sym = h.symmetry != "general";

  RealMatrix m;
  auto push = [&](Index i, Index j, double v) {
    m.entries.emplace_back(i, j, v);
    if (sym && i != j) m.entries.emplace_back(j, i, mirror * v);
  };
  if (h.format == "coordinate") {
    Index nnz = 0;
    auto size = next_data(in, "size line");
    if (!(size >> m.rows >> m.cols >> nnz) || m.rows < 0 || m.cols < 0 || nnz < 0) {
      throw FormatError("matrix market: bad size line");
    }
    if (sym && m.rows != m.cols) throw FormatError("matrix market: symmetric matrix must be square");
    m.entries.reserve(static_cast<std::size_t>(sym ? 2 * nnz : nnz));
    for (Index e = 0; e < nnz; ++e) {
      auto ss = next_data(in, "entries");
      Index i = 0, j = 0;
      double v = 1.0;
      if (!(ss >> i >> j) || (!pattern && !(ss >> v))) {
        throw FormatError("matrix market: bad entry " + std::to_string(e + 1));
      }
      check_index(i, j, m.rows, m.cols);
      if (h.symmetry == "skew-symmetric" && i == j) {
        throw FormatError("matrix market: diagonal entry in skew-symmetric matrix");
      }
      push(i - 1, j - 1, v);
    }
  } else {
    auto size = next_data(in, "size line");
    if (!(size >> m.rows >> m.cols) || m.rows < 0 || m.cols < 0) {
      throw FormatError("matrix market: bad size line");
    }
    if (sym && m.rows != m.cols) throw FormatError("matrix market: symmetric matrix must be square");
    for (Index j = 0; j < m.cols; ++j) {
      const Index first = !sym ? 0 : (h.symmetry == "symmetric" ? j : j + 1);
      for (Index i = first; i < m.rows; ++i) {
        auto ss = next_data(in, "array values");
        double v = 0.0;
        if (!(ss >> v)) throw FormatError("matrix market: bad array value");
        if (v != 0.0) push(i, j, v);
      }
    }
  }
  std::string extra;
  if (data_line(in, extra)) throw FormatError("matrix market: trailing data");
  return m;
}

RealMatrix read_matrix_market(const std::string& path) {
  auto in = open_in(path);
  return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const RealMatrix& m) {
  out << "%%MatrixMarket matrix coordinate real general\n"
      << m.rows << ' ' << m.cols << ' ' << m.entries.size() << '\n'
      << std::setprecision(17);
  for (const auto& t : m.entries) out << t.row() + 1 << ' ' << t.col() + 1 << ' ' << t.value() << '\n';
}

void write_matrix_market(const std::string& path, const RealMatrix& m) {
  auto out = open_out(path);
  write_matrix_market(out, m);
}

QMatrixMarketBundle QMatrixMarketBundle::from_parts(std::optional<std::string> a0, std::string a1,
                                                    std::string a2, std::string a3) {
  QMatrixMarketBundle b;
  b.parts = {std::move(a0), std::move(a1), std::move(a2), std::move(a3)};
  return b;
}

QMatrixMarketBundle QMatrixMarketBundle::from_extended(std::string path) {
  QMatrixMarketBundle b;
  b.extended = std::move(path);
  return b;
}

QSparseMatrix read_qmatrix(const QMatrixMarketBundle& bundle, std::optional<Index> k) {
  QSparseMatrix a;
  if (bundle.extended) {
    a = read_qmatrix_extended(*bundle.extended);
  } else {
    std::optional<Index> rows, cols;
    std::vector<QTriplet> t;
    for (int c = 0; c < 4; ++c) {
      if (!bundle.parts[static_cast<std::size_t>(c)]) continue;
      const RealMatrix m = read_matrix_market(*bundle.parts[static_cast<std::size_t>(c)]);
      if (rows && (m.rows != *rows || m.cols != *cols)) {
        throw FormatError("read_qmatrix: parts have different dimensions");
      }
      rows = m.rows;
      cols = m.cols;
      for (const auto& e : m.entries) {
        std::array<double, 4> v{};
        v[static_cast<std::size_t>(c)] = e.value();
        t.push_back({e.row(), e.col(), Quaternion{v[0], v[1], v[2], v[3]}});
      }
    }
    if (!rows) throw FormatError("read_qmatrix: bundle has no parts");
    a = QSparseMatrix::from_triplets(*rows, *cols, t);
  }
  if (k) {
    if (*k < 0 || *k > std::min(a.rows(), a.cols())) {
      throw DimensionError("read_qmatrix: principal order exceeds matrix size");
    }
    return a.principal(*k);
  }
  return a;
}

namespace {

constexpr const char* kBanner = "%%QuaternionMatrixMarket";

}  // namespace

QSparseMatrix read_qmatrix_extended(std::istream& in) {
  const Header h = read_header(in);
  if (h.banner != kBanner) throw FormatError("extended format: bad banner '" + h.banner + "'");
  if (h.field != "quaternion") throw FormatError("extended format: field must be quaternion");
  if (h.symmetry != "general") throw FormatError("extended format: only general symmetry");
  Index rows = 0, cols = 0;
  std::vector<QTriplet> t;
  auto read_q = [](std::istringstream& ss, Quaternion& q) {
    return static_cast<bool>(ss >> q.re >> q.i >> q.j >> q.k);
  };
  if (h.format == "coordinate") {
    Index nnz = 0;
    auto size = next_data(in, "size line");
    if (!(size >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0) {
      throw FormatError("extended format: bad size line");
    }
    for (Index e = 0; e < nnz; ++e) {
      auto ss = next_data(in, "entries");
      Index i = 0, j = 0;
      Quaternion q;
      if (!(ss >> i >> j) || !read_q(ss, q)) {
        throw FormatError("extended format: bad entry " + std::to_string(e + 1));
      }
      check_index(i, j, rows, cols);
      t.push_back({i - 1, j - 1, q});
    }
  } else {
    auto size = next_data(in, "size line");
    if (!(size >> rows >> cols) || rows < 0 || cols < 0) throw FormatError("extended format: bad size line");
    for (Index j = 0; j < cols; ++j) {
      for (Index i = 0; i < rows; ++i) {
        auto ss = next_data(in, "array values");
        Quaternion q;
        if (!read_q(ss, q)) throw FormatError("extended format: bad array value");
        if (q.norm_sq() != 0.0) t.push_back({i, j, q});
      }
    }
  }
  std::string extra;
  if (data_line(in, extra)) throw FormatError("extended format: trailing data");
  return QSparseMatrix::from_triplets(rows, cols, t);
}

QSparseMatrix read_qmatrix_extended(const std::string& path) {
  auto in = open_in(path);
  return read_qmatrix_extended(in);
}

void write_qmatrix_extended(std::ostream& out, const QSparseMatrix& a) {
  const auto t = a.triplets();
  out << kBanner << " matrix coordinate quaternion general\n"
      << a.rows() << ' ' << a.cols() << ' ' << t.size() << '\n'
      << std::setprecision(17);
  for (const auto& e : t) {
    out << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value.re << ' ' << e.value.i << ' '
        << e.value.j << ' ' << e.value.k << '\n';
  }
}

void write_qmatrix_extended(const std::string& path, const QSparseMatrix& a) {
  auto out = open_out(path);
  write_qmatrix_extended(out, a);
}

QVector read_qvector(const std::string& path) {
  const QSparseMatrix m = read_qmatrix_extended(path);
  if (m.cols() != 1) throw FormatError("read_qvector: expected a single column in " + path);
  QVector x(m.rows());
  for (const auto& e : m.triplets()) x.set(e.row, e.value);
  return x;
}

void write_qvector(const std::string& path, const QVector& x) {
  auto out = open_out(path);
  out << kBanner << " matrix array quaternion general\n" << x.size() << " 1\n" << std::setprecision(17);
  for (Index i = 0; i < x.size(); ++i) {
    const Quaternion q = x[i];
    out << q.re << ' ' << q.i << ' ' << q.j << ' ' << q.k << '\n';
  }
}

}  // namespace quatkrylov::io
