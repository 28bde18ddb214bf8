// Run the stepped cantilever once and dump its convergence trace as CSV.

#include <iostream>

#include "acoci/acoci.hpp"

int main() {
  acoci::SolverConfig config;
  config.seed = 42;
  const acoci::RunResult result = acoci::optimize(acoci::beams::cantilever_problem(), config);

  std::cerr << "weight " << result.best_raw_value << " after " << result.iterations
            << " iterations (" << result.function_evaluations << " evaluations)\n";
  std::cout << acoci::report::trace_csv(result.trace);
  return 0;
}
