#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "acoci/solver.hpp"
#include "acoci/types.hpp"

namespace acoci {

/// A multi-replicate experiment: `replicates` independent runs of the same
/// problem, replicate k seeded with seed_base + k.
struct ExperimentPlan {
  Problem problem;
  SolverConfig config;
  int replicates = 30;
  std::uint64_t seed_base = 42;

  void validate() const {
    config.validate();
    if (replicates < 1) throw ValidationError("ExperimentPlan: replicates must be >= 1");
  }
};

struct ReplicateFailure {
  int index;
  std::string message;
};

struct ExperimentResult {
  StatsSummary stats;
  std::vector<RunResult> results;  // successful replicates, in index order
  std::vector<ReplicateFailure> failures;
};

/// Mean/std/best/worst over the replicate best raw values plus averaged
/// iteration, evaluation and wall-time counts. std divides by n.
inline StatsSummary summarize(const std::vector<RunResult>& results) {
  if (results.empty()) throw ValidationError("summarize: empty result list");
  const double n = static_cast<double>(results.size());
  StatsSummary s;
  s.best = results.front().best_raw_value;
  s.worst = results.front().best_raw_value;
  for (const auto& r : results) {
    s.mean += r.best_raw_value;
    s.best = std::min(s.best, r.best_raw_value);
    s.worst = std::max(s.worst, r.best_raw_value);
    s.avg_iterations += static_cast<double>(r.iterations);
    s.avg_evaluations += static_cast<double>(r.function_evaluations);
    s.avg_time_s += r.wall_time_s;
  }
  s.mean /= n;
  s.avg_iterations /= n;
  s.avg_evaluations /= n;
  s.avg_time_s /= n;
  double sq = 0.0;
  for (const auto& r : results) {
    const double d = r.best_raw_value - s.mean;
    sq += d * d;
  }
  s.std_dev = std::sqrt(sq / n);
  return s;
}

/// Run every replicate sequentially in index order. A replicate that throws
/// or produces a non-finite best value is excluded from the stats and listed
/// under failures.
inline ExperimentResult run_experiment(const ExperimentPlan& plan) {
  plan.validate();
  ExperimentResult out;
  out.results.reserve(static_cast<std::size_t>(plan.replicates));
  for (int k = 0; k < plan.replicates; ++k) {
    SolverConfig config = plan.config;
    config.seed = plan.seed_base + static_cast<std::uint64_t>(k);
    try {
      RunResult run = optimize(plan.problem, config);
      if (!std::isfinite(run.best_raw_value))
        throw EvaluationError("replicate produced a non-finite best value");
      out.results.push_back(std::move(run));
    } catch (const std::exception& e) {
      out.failures.push_back({k, e.what()});
    }
  }
  if (!out.results.empty()) out.stats = summarize(out.results);
  return out;
}

}  // namespace acoci
