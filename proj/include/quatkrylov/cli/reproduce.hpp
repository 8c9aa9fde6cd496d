#pragma once

#include <iosfwd>
#include <string>

namespace quatkrylov::cli {

struct ReproduceOptions {
  /// Reduced sizes for a fast run.
  bool quick = false;
  /// Stock images for the restoration table; skipped when the directory is missing.
  std::string images = "data/images";
  /// Matrix Market parts for the sparse table; surrogate when empty.
  std::string mm_dir;
  /// Markdown copy of the report.
  std::string out;
};

/// Runs precond-table, sparse-table, signal-table and the restoration table and prints reported
/// vs observed values.
int cmd_reproduce(const ReproduceOptions& o, std::ostream& out);

}  // namespace quatkrylov::cli
