#include "quatkrylov/io/runlog.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "quatkrylov/core/errors.hpp"

namespace quatkrylov::io {

using nlohmann::json;

namespace {

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double to_double(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw FormatError("runlog: expected a number, got " + j.dump());
}

bool same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

bool same(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same(a[i], b[i])) return false;
  }
  return true;
}

bool same(const std::map<std::string, double>& a, const std::map<std::string, double>& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !same(ia->second, ib->second)) return false;
  }
  return true;
}

json number_map(const std::map<std::string, double>& m) {
  json o = json::object();
  for (const auto& [k, v] : m) o[k] = number(v);
  return o;
}

std::map<std::string, double> read_number_map(const json& j) {
  std::map<std::string, double> m;
  for (const auto& [k, v] : j.items()) m[k] = to_double(v);
  return m;
}

}  // namespace

bool RunLog::operator==(const RunLog& o) const {
  return version == o.version && solver == o.solver && config == o.config &&
         same(residuals, o.residuals) && preconditioned_history == o.preconditioned_history &&
         cycle_starts == o.cycle_starts && iterations == o.iterations &&
         termination == o.termination && same(true_residual, o.true_residual) &&
         same(relative_residual, o.relative_residual) && same(timings, o.timings) &&
         same(metrics, o.metrics);
}

RunLog make_runlog(const krylov::SolveReport& rep, std::map<std::string, std::string> config) {
  RunLog log;
  log.solver = rep.solver;
  log.config = std::move(config);
  log.residuals = rep.residual_history;
  log.preconditioned_history = rep.preconditioned_history;
  log.cycle_starts = rep.cycle_starts;
  log.iterations = rep.iterations;
  log.termination = krylov::to_string(rep.termination);
  log.true_residual = rep.true_residual;
  log.relative_residual = rep.relative_residual();
  log.timings["solve"] = rep.wall_time;
  return log;
}

std::string to_json(const RunLog& log) {
  json j;
  j["version"] = log.version;
  j["solver"] = log.solver;
  j["config"] = log.config;
  json r = json::array();
  for (double v : log.residuals) r.push_back(number(v));
  j["residuals"] = r;
  j["preconditioned_history"] = log.preconditioned_history;
  j["cycle_starts"] = log.cycle_starts;
  j["iterations"] = log.iterations;
  j["termination"] = log.termination;
  j["true_residual"] = number(log.true_residual);
  j["relative_residual"] = number(log.relative_residual);
  j["timings"] = number_map(log.timings);
  j["metrics"] = number_map(log.metrics);
  return j.dump(2) + "\n";
}

RunLog from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("runlog: ") + e.what());
  }
  if (!j.is_object() || !j.contains("version") || !j["version"].is_string()) {
    throw FormatError("runlog: missing version tag");
  }
  if (j["version"] != kRunLogVersion) {
    throw VersionError("runlog: unsupported version " + j["version"].get<std::string>());
  }
  RunLog log;
  try {
    log.solver = j.at("solver").get<std::string>();
    log.config = j.value("config", std::map<std::string, std::string>{});
    for (const auto& v : j.at("residuals")) log.residuals.push_back(to_double(v));
    log.preconditioned_history = j.value("preconditioned_history", false);
    log.cycle_starts = j.value("cycle_starts", std::vector<int>{});
    log.iterations = j.at("iterations").get<int>();
    log.termination = j.at("termination").get<std::string>();
    log.true_residual = to_double(j.at("true_residual"));
    log.relative_residual = to_double(j.at("relative_residual"));
    if (j.contains("timings")) log.timings = read_number_map(j["timings"]);
    if (j.contains("metrics")) log.metrics = read_number_map(j["metrics"]);
  } catch (const json::exception& e) {
    throw FormatError(std::string("runlog: ") + e.what());
  }
  return log;
}

void write_runlog(const RunLog& log, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << to_json(log);
  if (!out) throw IoError("write failed: " + path);
}

RunLog read_runlog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace quatkrylov::io
