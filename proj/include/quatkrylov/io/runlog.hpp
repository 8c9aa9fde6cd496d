#pragma once

#include <map>
#include <string>
#include <vector>

#include "quatkrylov/krylov/types.hpp"

namespace quatkrylov::io {

inline constexpr const char* kRunLogVersion = "quatkrylov.runlog/1";

/// JSON run record. Non-finite numbers are written as the strings "inf", "-inf", "nan".
struct RunLog {
  std::string version = kRunLogVersion;
  std::string solver;
  /// Echo of the command line / configuration, as text.
  std::map<std::string, std::string> config;
  std::vector<double> residuals;
  bool preconditioned_history = false;
  std::vector<int> cycle_starts;
  int iterations = 0;
  std::string termination;
  double true_residual = 0.0;
  double relative_residual = 0.0;
  /// Wall-clock seconds by phase, e.g. "solve", "setup".
  std::map<std::string, double> timings;
  /// PSNR / SNR / SSIM and friends when an image was restored.
  std::map<std::string, double> metrics;

  /// Field-wise equality; NaN equals NaN.
  bool operator==(const RunLog& o) const;
};

RunLog make_runlog(const krylov::SolveReport& rep, std::map<std::string, std::string> config = {});

std::string to_json(const RunLog& log);
/// FormatError on malformed input, VersionError on an unknown version tag.
RunLog from_json(const std::string& text);

void write_runlog(const RunLog& log, const std::string& path);
RunLog read_runlog(const std::string& path);

}  // namespace quatkrylov::io
