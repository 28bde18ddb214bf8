#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace acoci {

/// Invalid inputs or broken type invariants (bad bounds, bad config, ...).
class ValidationError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Objective or constraint produced a non-finite value.
class EvaluationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ObjectiveFn = std::function<double(const std::vector<double>&)>;
using ConstraintFn = std::function<double(const std::vector<double>&)>;

/// Per-variable box bounds. lower[i] < upper[i] for every variable.
class Bounds {
 public:
  Bounds(std::vector<double> lower, std::vector<double> upper)
      : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) throw ValidationError("Bounds: dimension must be >= 1");
    if (lower_.size() != upper_.size())
      throw ValidationError("Bounds: lower/upper dimension mismatch");
    for (std::size_t i = 0; i < lower_.size(); ++i) {
      if (!(lower_[i] < upper_[i]))
        throw ValidationError("Bounds: lower[" + std::to_string(i) +
                              "] must be strictly below upper[" + std::to_string(i) + "]");
    }
  }

  /// Uniform box [lo, hi]^dimension.
  Bounds(std::size_t dimension, double lo, double hi)
      : Bounds(std::vector<double>(dimension, lo), std::vector<double>(dimension, hi)) {}

  std::size_t dimension() const { return lower_.size(); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  double width(std::size_t i) const { return upper_[i] - lower_[i]; }

  bool contains(const std::vector<double>& x) const {
    if (x.size() != lower_.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
    return true;
  }

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// A box-bounded minimization problem with optional inequality constraints,
/// each normalized to g_j(x) <= 0.
class Problem {
 public:
  Problem(std::string name, ObjectiveFn objective, std::vector<ConstraintFn> constraints,
          Bounds bounds, std::optional<double> known_optimum = std::nullopt)
      : name_(std::move(name)),
        objective_(std::move(objective)),
        constraints_(std::move(constraints)),
        bounds_(std::move(bounds)),
        known_optimum_(known_optimum) {
    if (!objective_) throw ValidationError("Problem '" + name_ + "': objective is empty");
    for (std::size_t j = 0; j < constraints_.size(); ++j)
      if (!constraints_[j])
        throw ValidationError("Problem '" + name_ + "': constraint " + std::to_string(j) +
                              " is empty");
  }

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return bounds_.dimension(); }
  const Bounds& bounds() const { return bounds_; }
  const std::vector<ConstraintFn>& constraints() const { return constraints_; }
  /// Reference value for reporting only; never used by the solver.
  std::optional<double> known_optimum() const { return known_optimum_; }

  double objective(const std::vector<double>& x) const { return objective_(x); }
  double constraint(std::size_t j, const std::vector<double>& x) const {
    return constraints_[j](x);
  }

 private:
  std::string name_;
  ObjectiveFn objective_;
  std::vector<ConstraintFn> constraints_;
  Bounds bounds_;
  std::optional<double> known_optimum_;
};

/// Solver parameters. Defaults follow the library-wide convention:
/// 30 ants, 5 elites, geometric interval reduction 0.95 per iteration.
struct SolverConfig {
  int ants = 30;
  int elites = 5;
  double reduction_factor = 0.95;   // interval contraction per iteration, in (0,1)
  double q_constant = 1.0;          // pheromone deposit scale, >= 0
  double evaporation = 0.1;         // in [0,1)
  double tau_init = 1.0;            // initial pheromone, > 0
  double convergence_tol = 1e-6;    // relative population-spread tolerance
  int max_iterations = 5000;
  double penalty_coefficient = 1e6; // quadratic exterior penalty weight
  std::uint64_t seed = 42;

  void validate() const {
    if (ants < 1) throw ValidationError("SolverConfig: ants must be >= 1");
    if (elites < 1) throw ValidationError("SolverConfig: elites must be >= 1");
    if (elites > ants) throw ValidationError("SolverConfig: elites must be <= ants");
    if (!(reduction_factor > 0.0 && reduction_factor < 1.0))
      throw ValidationError("SolverConfig: reduction_factor must be in (0,1)");
    if (!(q_constant >= 0.0)) throw ValidationError("SolverConfig: q_constant must be >= 0");
    if (!(evaporation >= 0.0 && evaporation < 1.0))
      throw ValidationError("SolverConfig: evaporation must be in [0,1)");
    if (!(tau_init > 0.0)) throw ValidationError("SolverConfig: tau_init must be > 0");
    if (!(convergence_tol > 0.0))
      throw ValidationError("SolverConfig: convergence_tol must be > 0");
    if (max_iterations < 1) throw ValidationError("SolverConfig: max_iterations must be >= 1");
    if (!(penalty_coefficient > 0.0))
      throw ValidationError("SolverConfig: penalty_coefficient must be > 0");
  }
};

/// One candidate solution: position, private sampling interval, pheromone.
/// Mutated only by the solver that owns it.
struct AntState {
  std::vector<double> position;
  std::vector<double> interval_lower;
  std::vector<double> interval_upper;
  double pheromone = 1.0;
  double raw_value = std::numeric_limits<double>::quiet_NaN();
  double penalized_value = std::numeric_limits<double>::quiet_NaN();
};

/// Per-iteration convergence-trace entry. f_best is the best-ever penalized
/// value (non-increasing); f_worst is the current population's worst.
struct IterationRecord {
  int iteration = 0;
  double f_best = 0.0;
  double f_worst = 0.0;
  double mean_interval_width = 0.0;
  double tau_best = 0.0;
  long long evaluations_so_far = 0;
};

/// Outcome of a single optimize() run.
struct RunResult {
  std::vector<double> best_position;
  double best_raw_value = std::numeric_limits<double>::quiet_NaN();
  double best_penalized_value = std::numeric_limits<double>::quiet_NaN();
  bool feasible = false;
  bool converged = false;  // false: stopped by the iteration cap
  int iterations = 0;
  long long function_evaluations = 0;
  double wall_time_s = 0.0;
  std::vector<IterationRecord> trace;
};

/// Aggregate over replicate best raw values. std uses the population
/// formula (divide by n).
struct StatsSummary {
  double mean = 0.0;
  double std_dev = 0.0;
  double best = 0.0;
  double worst = 0.0;
  double avg_iterations = 0.0;
  double avg_evaluations = 0.0;
  double avg_time_s = 0.0;
};

/// Deterministic uniform stream: mt19937_64 mapped to 53-bit doubles.
/// Avoids std::uniform_real_distribution so identical seeds give identical
/// draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace acoci
