#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "acoci/types.hpp"

namespace acoci {

/// Absolute tolerance below which a constraint violation counts as feasible.
inline constexpr double kFeasibilityTol = 1e-8;

/// Result of evaluating the penalized objective at one point.
struct PenaltyReport {
  double raw_value = 0.0;
  std::vector<double> violations;  // max(0, g_j(x)) per constraint
  double penalized_value = 0.0;
  bool feasible = true;
};

/// Static quadratic exterior penalty:
///   penalized = F(x) + coefficient * sum_j max(0, g_j(x))^2
/// Feasible iff every violation <= feasibility_tol.
inline PenaltyReport penalize(const Problem& problem, const std::vector<double>& x,
                              double coefficient, double feasibility_tol = kFeasibilityTol) {
  if (!(coefficient > 0.0)) throw ValidationError("penalize: coefficient must be > 0");
  if (x.size() != problem.dimension())
    throw ValidationError("penalize: point dimension " + std::to_string(x.size()) +
                          " does not match problem dimension " +
                          std::to_string(problem.dimension()));
  if (!problem.bounds().contains(x))
    throw ValidationError("penalize: point lies outside the bounds of '" + problem.name() + "'");

  PenaltyReport report;
  report.raw_value = problem.objective(x);
  if (!std::isfinite(report.raw_value))
    throw EvaluationError("objective of '" + problem.name() + "' returned a non-finite value");

  report.violations.reserve(problem.constraints().size());
  double penalty = 0.0;
  for (std::size_t j = 0; j < problem.constraints().size(); ++j) {
    const double g = problem.constraint(j, x);
    if (!std::isfinite(g))
      throw EvaluationError("constraint " + std::to_string(j) + " of '" + problem.name() +
                            "' returned a non-finite value");
    const double v = g > 0.0 ? g : 0.0;
    report.violations.push_back(v);
    penalty += v * v;
    if (v > feasibility_tol) report.feasible = false;
  }
  report.penalized_value = report.raw_value + coefficient * penalty;
  return report;
}

}  // namespace acoci
