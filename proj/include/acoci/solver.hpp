#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "acoci/penalty.hpp"
#include "acoci/types.hpp"

namespace acoci {

// Hybrid ant-colony / cohort-intelligence engine. Each iteration:
//   1. evaluate every ant through the penalty layer
//   2. pick the elite set (lowest penalized values) and its roulette weights
//   3. every non-elite ant follows one roulette-selected elite
//   4. each ant's sampling interval contracts by reduction_factor around the
//      followed position (clamped to the global bounds)
//   5. every ant resamples uniformly inside its new interval
//   6. pheromone deposits on the iteration best, evaporates for the rest
//   7. stop when the population's penalized spread collapses or the
//      iteration cap is reached

/// Elite ant indices (ascending penalized value) plus their selection weights.
struct EliteSet {
  std::vector<std::size_t> members;
  std::vector<double> weights;  // sum to 1, all > 0
};

/// Fitness values made strictly positive when needed. If the minimum is
/// already a positive normal number the values pass through unchanged, so
/// the plain reciprocal-fitness and pheromone-ratio formulas apply verbatim;
/// otherwise the whole set is shifted by -min + delta,
/// delta = 1e-9 + 1e-3 * (max - min), which preserves ordering.
inline std::vector<double> shifted_fitness(const std::vector<double>& values) {
  if (values.empty()) throw ValidationError("shifted_fitness: empty value list");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it, hi = *hi_it;
  if (lo >= std::numeric_limits<double>::min()) return values;
  const double delta = 1e-9 + 1e-3 * (hi - lo);
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] - lo + delta;
  return out;
}

/// Uniform random positions inside the global bounds; intervals start at the
/// full box and pheromones at tau_init.
inline std::vector<AntState> initialize_population(const Problem& problem,
                                                   const SolverConfig& config, Rng& rng) {
  config.validate();
  const auto& b = problem.bounds();
  const std::size_t dim = b.dimension();
  std::vector<AntState> population(static_cast<std::size_t>(config.ants));
  for (auto& ant : population) {
    ant.position.resize(dim);
    ant.interval_lower = b.lower();
    ant.interval_upper = b.upper();
    ant.pheromone = config.tau_init;
    for (std::size_t i = 0; i < dim; ++i)
      ant.position[i] = b.lower()[i] + (b.upper()[i] - b.lower()[i]) * rng.next_unit();
  }
  return population;
}

/// Path probability per ant, proportional to pheromone: tau_a / sum(tau).
/// With every pheromone at its initial level this is the uniform 1/ants.
inline std::vector<double> initial_path_probability(const std::vector<AntState>& population) {
  if (population.empty()) throw ValidationError("initial_path_probability: empty population");
  double total = 0.0;
  for (const auto& ant : population) {
    if (!(ant.pheromone > 0.0))
      throw ValidationError("initial_path_probability: pheromones must be positive");
    total += ant.pheromone;
  }
  std::vector<double> probs(population.size());
  for (std::size_t a = 0; a < population.size(); ++a) probs[a] = population[a].pheromone / total;
  return probs;
}

/// The `elites` lowest penalized values (stable ties: lower ant index wins).
/// Weights are pheromone-scaled reciprocal fitness, normalized:
///   w_e ∝ tau_e / F'_e   with F' the shifted fitness over the population.
inline EliteSet select_elites(const std::vector<AntState>& population,
                              const SolverConfig& config) {
  if (population.size() < static_cast<std::size_t>(config.elites))
    throw ValidationError("select_elites: population smaller than the elite count");
  std::vector<double> penalized(population.size());
  for (std::size_t a = 0; a < population.size(); ++a) {
    if (!std::isfinite(population[a].penalized_value))
      throw EvaluationError("select_elites: ant " + std::to_string(a) +
                            " has a non-finite penalized value");
    if (!(population[a].pheromone > 0.0))
      throw ValidationError("select_elites: ant " + std::to_string(a) +
                            " has a non-positive pheromone");
    penalized[a] = population[a].penalized_value;
  }

  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return penalized[a] < penalized[b]; });

  EliteSet elite;
  elite.members.assign(order.begin(), order.begin() + config.elites);

  const std::vector<double> fitness = shifted_fitness(penalized);
  elite.weights.resize(elite.members.size());
  double total = 0.0;
  for (std::size_t k = 0; k < elite.members.size(); ++k) {
    elite.weights[k] = population[elite.members[k]].pheromone / fitness[elite.members[k]];
    total += elite.weights[k];
  }
  for (double& w : elite.weights) w /= total;
  return elite;
}

/// Fitness-proportionate pick: the index where the cumulative weight first
/// exceeds a uniform draw.
inline std::size_t roulette_pick(const std::vector<double>& weights, Rng& rng) {
  if (weights.empty()) throw ValidationError("roulette_pick: empty weight list");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12)
    throw ValidationError("roulette_pick: weights must sum to 1 within 1e-12");
  const double u = rng.next_unit();
  double cumulative = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    cumulative += weights[k];
    if (cumulative > u) return k;
  }
  return weights.size() - 1;  // guards rounding in the final partial sum
}

/// Contract every ant's interval around the position of the ant it follows:
/// new half-width = reduction_factor * current_width / 2, clamped to the
/// global bounds. `followed` maps each ant to a population index (elites and
/// the best map to themselves).
inline void shrink_intervals(std::vector<AntState>& population,
                             const std::vector<std::size_t>& followed,
                             const SolverConfig& config, const Bounds& bounds) {
  if (followed.size() != population.size())
    throw ValidationError("shrink_intervals: one followed index required per ant");
  const std::size_t dim = bounds.dimension();
  for (std::size_t a = 0; a < population.size(); ++a) {
    const auto& center = population[followed[a]].position;
    auto& ant = population[a];
    for (std::size_t i = 0; i < dim; ++i) {
      const double width = ant.interval_upper[i] - ant.interval_lower[i];
      const double half = config.reduction_factor * width / 2.0;
      ant.interval_lower[i] = std::max(center[i] - half, bounds.lower()[i]);
      ant.interval_upper[i] = std::min(center[i] + half, bounds.upper()[i]);
    }
  }
}

/// Deposit on the iteration best, evaporate everyone else from the best's
/// new level:
///   tau_best += Q * (prev_f_best / prev_f_worst)
///   tau_other = (1 - evaporation) * tau_best
/// Both fitness arguments must come from shifted (strictly positive) values.
inline void update_pheromones(std::vector<AntState>& population, std::size_t best_index,
                              double prev_f_best, double prev_f_worst,
                              const SolverConfig& config) {
  if (best_index >= population.size())
    throw ValidationError("update_pheromones: best index out of range");
  if (!(prev_f_worst > 0.0))
    throw EvaluationError("update_pheromones: shifted worst fitness must be positive");
  if (!(prev_f_best <= prev_f_worst))
    throw ValidationError("update_pheromones: best fitness must not exceed worst");
  auto& best = population[best_index];
  best.pheromone += config.q_constant * (prev_f_best / prev_f_worst);
  const double other = (1.0 - config.evaporation) * best.pheromone;
  for (std::size_t a = 0; a < population.size(); ++a)
    if (a != best_index) population[a].pheromone = other;
}

/// Converged when the population's penalized spread collapses relative to
/// the incumbent: |f_worst - f_best| <= tol * max(1, |f_best|).
inline bool check_convergence(const IterationRecord& latest, const SolverConfig& config) {
  return std::abs(latest.f_worst - latest.f_best) <=
         config.convergence_tol * std::max(1.0, std::abs(latest.f_best));
}

namespace detail {

// Incumbent tracking: a feasible point always beats an infeasible one;
// within the same feasibility class the lower penalized value wins.
struct Incumbent {
  bool valid = false;
  bool feasible = false;
  double penalized = std::numeric_limits<double>::infinity();
  double raw = std::numeric_limits<double>::infinity();
  std::vector<double> position;

  void offer(const PenaltyReport& report, const std::vector<double>& x) {
    const bool better = !valid || (report.feasible && !feasible) ||
                        (report.feasible == feasible && report.penalized_value < penalized);
    if (better) {
      valid = true;
      feasible = report.feasible;
      penalized = report.penalized_value;
      raw = report.raw_value;
      position = x;
    }
  }
};

}  // namespace detail

/// Run the full loop on one problem. Deterministic for a fixed seed.
inline RunResult optimize(const Problem& problem, const SolverConfig& config) {
  config.validate();
  const auto t_start = std::chrono::steady_clock::now();

  Rng rng(config.seed);
  std::vector<AntState> population = initialize_population(problem, config, rng);
  const std::size_t ants = population.size();
  const std::size_t dim = problem.dimension();

  detail::Incumbent incumbent;
  double best_penalized_ever = std::numeric_limits<double>::infinity();

  RunResult result;
  result.trace.reserve(static_cast<std::size_t>(std::min(config.max_iterations, 4096)));

  for (int iteration = 1;; ++iteration) {
    std::vector<double> penalized(ants);
    for (std::size_t a = 0; a < ants; ++a) {
      const PenaltyReport report =
          penalize(problem, population[a].position, config.penalty_coefficient);
      population[a].raw_value = report.raw_value;
      population[a].penalized_value = report.penalized_value;
      penalized[a] = report.penalized_value;
      incumbent.offer(report, population[a].position);
    }

    std::size_t best_index = 0;
    double f_worst = penalized[0];
    for (std::size_t a = 1; a < ants; ++a) {
      if (penalized[a] < penalized[best_index]) best_index = a;
      f_worst = std::max(f_worst, penalized[a]);
    }
    best_penalized_ever = std::min(best_penalized_ever, penalized[best_index]);

    const EliteSet elite = select_elites(population, config);

    std::vector<std::size_t> followed(ants);
    std::vector<bool> is_elite(ants, false);
    for (std::size_t m : elite.members) is_elite[m] = true;
    for (std::size_t a = 0; a < ants; ++a)
      followed[a] = is_elite[a] ? a : elite.members[roulette_pick(elite.weights, rng)];

    shrink_intervals(population, followed, config, problem.bounds());

    for (auto& ant : population)
      for (std::size_t i = 0; i < dim; ++i)
        ant.position[i] =
            ant.interval_lower[i] +
            (ant.interval_upper[i] - ant.interval_lower[i]) * rng.next_unit();

    const std::vector<double> fitness = shifted_fitness(penalized);
    const double shifted_worst = *std::max_element(fitness.begin(), fitness.end());
    update_pheromones(population, best_index, fitness[best_index], shifted_worst, config);

    double width_sum = 0.0;
    for (const auto& ant : population)
      for (std::size_t i = 0; i < dim; ++i)
        width_sum += ant.interval_upper[i] - ant.interval_lower[i];

    IterationRecord record;
    record.iteration = iteration;
    record.f_best = best_penalized_ever;
    record.f_worst = f_worst;
    record.mean_interval_width = width_sum / static_cast<double>(ants * dim);
    record.tau_best = population[best_index].pheromone;
    record.evaluations_so_far = static_cast<long long>(ants) * iteration;
    result.trace.push_back(record);

    const bool converged = check_convergence(record, config);
    if (converged || iteration >= config.max_iterations) {
      result.converged = converged;
      result.iterations = iteration;
      break;
    }
  }

  result.best_position = incumbent.position;
  result.best_raw_value = incumbent.raw;
  result.best_penalized_value = incumbent.penalized;
  result.feasible = incumbent.feasible;
  result.function_evaluations = static_cast<long long>(ants) * result.iterations;
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return result;
}

}  // namespace acoci
