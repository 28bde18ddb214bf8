// Minimal library usage: minimize a custom objective with one constraint.

#include <cmath>
#include <iostream>

#include "acoci/acoci.hpp"

int main() {
  // minimize (x-1)^2 + (y-2)^2  subject to  x + y <= 2
  acoci::Problem problem(
      "toy",
      [](const std::vector<double>& x) {
        return (x[0] - 1.0) * (x[0] - 1.0) + (x[1] - 2.0) * (x[1] - 2.0);
      },
      {[](const std::vector<double>& x) { return x[0] + x[1] - 2.0; }},
      acoci::Bounds(2, -5.0, 5.0));

  acoci::SolverConfig config;
  config.seed = 7;
  const acoci::RunResult result = acoci::optimize(problem, config);

  std::cout << "best value " << result.best_raw_value << " at (" << result.best_position[0]
            << ", " << result.best_position[1] << "), feasible=" << std::boolalpha
            << result.feasible << ", " << result.iterations << " iterations\n";
  return 0;
}
