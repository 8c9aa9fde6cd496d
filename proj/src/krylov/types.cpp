#include "quatkrylov/krylov/types.hpp"

namespace quatkrylov::krylov {

std::string to_string(Termination t) {
  switch (t) {
    case Termination::Converged:
      return "converged";
    case Termination::MaxIter:
      return "max_iter";
    case Termination::Breakdown:
      return "breakdown";
    case Termination::Stagnation:
      return "stagnation";
  }
  return "unknown";
}

Termination termination_from_string(const std::string& s) {
  if (s == "converged") return Termination::Converged;
  if (s == "max_iter") return Termination::MaxIter;
  if (s == "breakdown") return Termination::Breakdown;
  if (s == "stagnation") return Termination::Stagnation;
  throw FormatError("unknown termination '" + s + "'");
}

void SolverConfig::validate() const {
  if (!(tol > 0.0)) throw InvalidParameter("tol must be positive");
  if (max_iter <= 0) throw InvalidParameter("max_iter must be positive");
  if (restart && (*restart <= 0 || *restart > max_iter)) {
    throw InvalidParameter("restart must lie in [1, max_iter]");
  }
  if (!(breakdown_tol >= 0.0)) throw InvalidParameter("breakdown_tol must be nonnegative");
  if (stagnation_window <= 0) throw InvalidParameter("stagnation_window must be positive");
}

bool SolveReport::converged() const {
  if (termination == Termination::Converged) return true;
  if (termination != Termination::Breakdown || residual_history.empty()) return false;
  return residual_history.back() <= tol * reference_norm;
}

}  // namespace quatkrylov::krylov
